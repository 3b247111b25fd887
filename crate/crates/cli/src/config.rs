//! Scenario files.
//!
//! A config is TOML with one `[[scenario]]` table per run:
//!
//! ```toml
//! [[scenario]]
//! name = "dpa"
//! kind = "paramp"
//! [scenario.params]
//! eta = 1.0
//! t = 1.0
//! ```
//!
//! `params` is checked against the schema of `kind`; unknown keys, missing
//! keys and out-of-range values are rejected before anything runs. All
//! physical inputs are SI.

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::de::DeserializeOwned;
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConfigError {
    #[error("{path}:{line}:{column}: {message}")]
    Parse { path: String, line: usize, column: usize, message: String },
    #[error("scenario `{scenario}`: key `{key}`: {message}")]
    Schema { scenario: String, key: String, message: String },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

impl ConfigError {
    fn schema(scenario: &str, key: &str, message: impl Into<String>) -> Self {
        Self::Schema { scenario: scenario.to_string(), key: key.to_string(), message: message.into() }
    }

    /// The offending key of a schema error.
    pub fn key(&self) -> Option<&str> {
        match self {
            Self::Schema { key, .. } => Some(key),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Paramp,
    Quench,
    Swing,
    Unruh,
    Blackhole,
    DceCavity,
    DceReceding,
    SquidHorizon,
}

impl Kind {
    pub const ALL: [Kind; 8] = [
        Kind::Paramp,
        Kind::Quench,
        Kind::Swing,
        Kind::Unruh,
        Kind::Blackhole,
        Kind::DceCavity,
        Kind::DceReceding,
        Kind::SquidHorizon,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Kind::Paramp => "paramp",
            Kind::Quench => "quench",
            Kind::Swing => "swing",
            Kind::Unruh => "unruh",
            Kind::Blackhole => "blackhole",
            Kind::DceCavity => "dce_cavity",
            Kind::DceReceding => "dce_receding",
            Kind::SquidHorizon => "squid_horizon",
        }
    }

    /// One-line description for `list-kinds`.
    pub fn summary(&self) -> &'static str {
        match self {
            Kind::Paramp => "degenerate / non-degenerate parametric amplifier from vacuum",
            Kind::Quench => "oscillator frequency step or tanh ramp, Bogoliubov coefficients by ODE",
            Kind::Swing => "child on a swing: parametric pendulum, formula vs direct integration",
            Kind::Unruh => "chirped waveform seen by an accelerated observer, FFT spectrum and Planck fit",
            Kind::Blackhole => "Schwarzschild thermodynamics and local temperatures",
            Kind::DceCavity => "1D cavity with a moving mirror: Moore solver and photon numbers",
            Kind::DceReceding => "mirror receding towards the speed of light: thermal spectrum",
            Kind::SquidHorizon => "dc-SQUID array analogue horizon and Hawking temperature",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Kind::ALL.iter().copied().find(|k| k.as_str() == s).ok_or_else(|| format!("unknown kind `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AmpMode {
    #[default]
    Degenerate,
    Nondegenerate,
}

/// `paramp`: amplifier coupling `eta` (1/s) run for `t` (s).
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParampParams {
    pub eta: f64,
    pub t: f64,
    #[serde(default)]
    pub mode: AmpMode,
    #[serde(default = "default_samples")]
    pub samples: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QuenchProfile {
    Sudden,
    Tanh,
}

/// `quench`: frequencies in rad/s, times in s, mass in kg.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuenchParams {
    pub omega_in: f64,
    pub omega_out: f64,
    pub profile: QuenchProfile,
    /// Ramp time of the tanh profile, or the width of the sudden step
    /// (default `1e-4 / omega_in`).
    pub ramp_time: Option<f64>,
    #[serde(default = "default_mass")]
    pub mass: f64,
    #[serde(default = "default_ode_tol")]
    pub tol: f64,
}

/// `swing`: pendulum length (m), mass (kg), initial angle (rad), initial
/// angular momentum (kg m^2/s), modulation depth (rad/s) and duration (s).
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SwingParams {
    pub length: f64,
    pub mass: f64,
    pub theta0: f64,
    #[serde(default)]
    pub angular_momentum0: f64,
    pub epsilon: f64,
    pub duration: f64,
    #[serde(default = "default_samples")]
    pub samples: usize,
    /// Allowed gap between the averaged formula and the integration,
    /// relative to the peak amplitude.
    #[serde(default = "default_swing_agreement")]
    pub agreement_tol: f64,
}

/// `unruh`: proper acceleration (m/s^2); fit band in units of `a / c`.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnruhParams {
    pub proper_acceleration: f64,
    #[serde(default = "default_chirp_samples")]
    pub samples: usize,
    #[serde(default = "default_pad")]
    pub pad_factor: usize,
    #[serde(default = "default_band_lo")]
    pub band_low: f64,
    #[serde(default = "default_band_hi")]
    pub band_high: f64,
}

/// `blackhole`: mass (kg) and radii in units of `r_s` for the table.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlackholeParams {
    pub mass: f64,
    #[serde(default = "default_radii")]
    pub radii: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CavityMotion {
    Static,
    Sinusoidal,
}

/// `dce_cavity`: rest length `z0` (m), relative amplitude `epsilon`, drive
/// frequency (rad/s, default twice the fundamental), drive duration and
/// ramp (s, ramp 0 = abrupt).
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DceCavityParams {
    pub z0: f64,
    pub motion: CavityMotion,
    #[serde(default)]
    pub epsilon: f64,
    pub drive_frequency: Option<f64>,
    pub duration: f64,
    #[serde(default)]
    pub ramp: f64,
    #[serde(default = "default_n_max")]
    pub n_max: usize,
    #[serde(default = "default_modes_out")]
    pub modes_out: usize,
    /// Moore grid step is `z0 / grid_divisions`.
    #[serde(default = "default_grid_divisions")]
    pub grid_divisions: usize,
    #[serde(default = "default_moore_tol")]
    pub moore_tol: f64,
    #[serde(default = "default_points_per_half_wave")]
    pub points_per_half_wave: usize,
}

/// `dce_receding`: `z(t) = -c t - A e^{-2 kappa t} + A`, `kappa` in 1/s and
/// `A` in m with `kappa A < c`.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DceRecedingParams {
    pub kappa: f64,
    pub a: f64,
    #[serde(default = "default_receding_samples")]
    pub samples: usize,
    #[serde(default = "default_receding_span")]
    pub span: f64,
    #[serde(default = "default_receding_band_lo")]
    pub band_low: f64,
    #[serde(default = "default_band_hi")]
    pub band_high: f64,
}

/// `squid_horizon`: cell parameters (SI) and a tanh flux step. Give the pulse
/// speed either as `velocity` (m/s) or `velocity_fraction` of `c_s(0)`.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SquidHorizonParams {
    pub junction_critical_current: f64,
    pub junction_capacitance: f64,
    pub ground_capacitance: f64,
    pub cell_spacing: f64,
    pub waveguide_inductance_per_length: f64,
    pub amplitude_phi0: f64,
    pub steepness: f64,
    pub velocity: Option<f64>,
    pub velocity_fraction: Option<f64>,
    #[serde(default = "default_samples")]
    pub samples: usize,
    /// Profile table covers `|x| <= span / steepness`.
    #[serde(default = "default_squid_span")]
    pub span: f64,
}

fn default_samples() -> usize {
    101
}
fn default_mass() -> f64 {
    1.0
}
fn default_ode_tol() -> f64 {
    1e-10
}
fn default_swing_agreement() -> f64 {
    0.05
}
fn default_chirp_samples() -> usize {
    1 << 17
}
fn default_pad() -> usize {
    4
}
fn default_band_lo() -> f64 {
    0.5
}
fn default_band_hi() -> f64 {
    3.0
}
fn default_radii() -> Vec<f64> {
    vec![1.000001, 1.0001, 1.01, 1.5, 2.0, 5.0, 10.0, 100.0]
}
fn default_n_max() -> usize {
    32
}
fn default_modes_out() -> usize {
    4
}
fn default_grid_divisions() -> usize {
    512
}
fn default_moore_tol() -> f64 {
    1e-6
}
fn default_points_per_half_wave() -> usize {
    16
}
fn default_receding_samples() -> usize {
    1 << 19
}
fn default_receding_span() -> f64 {
    30.0
}
fn default_receding_band_lo() -> f64 {
    0.5
}
fn default_squid_span() -> f64 {
    5.0
}

/// Parameters checked against the schema of their kind.
#[derive(Debug, Clone, PartialEq)]
pub enum Params {
    Paramp(ParampParams),
    Quench(QuenchParams),
    Swing(SwingParams),
    Unruh(UnruhParams),
    Blackhole(BlackholeParams),
    DceCavity(DceCavityParams),
    DceReceding(DceRecedingParams),
    SquidHorizon(SquidHorizonParams),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub name: String,
    pub kind: Kind,
    /// Raw parameter table, kept for sweeps.
    pub raw: toml::Table,
    pub params: Params,
}

impl Scenario {
    /// Builds and validates a scenario from its parts.
    pub fn new(name: &str, kind: Kind, raw: toml::Table) -> Result<Self, ConfigError> {
        if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || "-_.".contains(c)) {
            return Err(ConfigError::schema(name, "name", "use letters, digits, '-', '_' or '.'"));
        }
        let params = parse_params(name, kind, &raw)?;
        Ok(Self { name: name.to_string(), kind, raw, params })
    }

    /// Copy with `key` set to `value`, revalidated.
    pub fn with_param(&self, key: &str, value: f64) -> Result<Self, ConfigError> {
        let mut raw = self.raw.clone();
        let v = if value.fract() == 0.0 && value.abs() < 9.0e15 {
            toml::Value::Integer(value as i64)
        } else {
            toml::Value::Float(value)
        };
        raw.insert(key.to_string(), v);
        Self::new(&self.name, self.kind, raw)
    }
}

fn typed<T: DeserializeOwned>(scenario: &str, raw: &toml::Table) -> Result<T, ConfigError> {
    toml::Value::Table(raw.clone()).try_into::<T>().map_err(|e| {
        let message = e.message().to_string();
        let key = message.split('`').nth(1).unwrap_or("params").to_string();
        ConfigError::Schema { scenario: scenario.to_string(), key, message }
    })
}

fn parse_params(name: &str, kind: Kind, raw: &toml::Table) -> Result<Params, ConfigError> {
    let p = match kind {
        Kind::Paramp => Params::Paramp(typed(name, raw)?),
        Kind::Quench => Params::Quench(typed(name, raw)?),
        Kind::Swing => Params::Swing(typed(name, raw)?),
        Kind::Unruh => Params::Unruh(typed(name, raw)?),
        Kind::Blackhole => Params::Blackhole(typed(name, raw)?),
        Kind::DceCavity => Params::DceCavity(typed(name, raw)?),
        Kind::DceReceding => Params::DceReceding(typed(name, raw)?),
        Kind::SquidHorizon => Params::SquidHorizon(typed(name, raw)?),
    };
    validate(name, &p)?;
    Ok(p)
}

struct Checker<'a> {
    scenario: &'a str,
}

impl Checker<'_> {
    fn require(&self, ok: bool, key: &str, message: &str) -> Result<(), ConfigError> {
        if ok {
            Ok(())
        } else {
            Err(ConfigError::schema(self.scenario, key, message))
        }
    }

    fn positive(&self, key: &str, v: f64) -> Result<(), ConfigError> {
        self.require(v > 0.0 && v.is_finite(), key, &format!("must be positive and finite, got {v}"))
    }

    fn non_negative(&self, key: &str, v: f64) -> Result<(), ConfigError> {
        self.require(v >= 0.0 && v.is_finite(), key, &format!("must be non-negative and finite, got {v}"))
    }

    fn at_least(&self, key: &str, v: usize, min: usize) -> Result<(), ConfigError> {
        self.require(v >= min, key, &format!("must be at least {min}, got {v}"))
    }
}

fn validate(name: &str, p: &Params) -> Result<(), ConfigError> {
    let c = Checker { scenario: name };
    match p {
        Params::Paramp(p) => {
            c.positive("eta", p.eta)?;
            c.non_negative("t", p.t)?;
            c.at_least("samples", p.samples, 2)?;
        }
        Params::Quench(p) => {
            c.positive("omega_in", p.omega_in)?;
            c.positive("omega_out", p.omega_out)?;
            c.positive("mass", p.mass)?;
            c.require(p.tol > 0.0 && p.tol < 1e-3, "tol", "must lie in (0, 1e-3)")?;
            match (p.profile, p.ramp_time) {
                (QuenchProfile::Tanh, None) => {
                    return Err(ConfigError::schema(name, "ramp_time", "required for the tanh profile"))
                }
                (_, Some(r)) => c.positive("ramp_time", r)?,
                _ => {}
            }
        }
        Params::Swing(p) => {
            c.positive("length", p.length)?;
            c.positive("mass", p.mass)?;
            c.require(p.theta0.is_finite(), "theta0", "must be finite")?;
            c.require(p.angular_momentum0.is_finite(), "angular_momentum0", "must be finite")?;
            c.non_negative("epsilon", p.epsilon)?;
            c.require(
                p.epsilon < 0.5 * vacuum_core::modeode::swing_frequency(p.length),
                "epsilon",
                "must stay well below the swing frequency",
            )?;
            c.positive("duration", p.duration)?;
            c.at_least("samples", p.samples, 2)?;
            c.positive("agreement_tol", p.agreement_tol)?;
        }
        Params::Unruh(p) => {
            c.positive("proper_acceleration", p.proper_acceleration)?;
            c.at_least("samples", p.samples, 1024)?;
            c.at_least("pad_factor", p.pad_factor, 1)?;
            c.positive("band_low", p.band_low)?;
            c.require(p.band_high > p.band_low, "band_high", "must exceed band_low")?;
        }
        Params::Blackhole(p) => {
            c.positive("mass", p.mass)?;
            for &r in &p.radii {
                c.require(r > 1.0 && r.is_finite(), "radii", &format!("radii are in units of r_s and must exceed 1, got {r}"))?;
            }
        }
        Params::DceCavity(p) => {
            c.positive("z0", p.z0)?;
            c.require(p.epsilon.abs() < 1.0, "epsilon", &format!("|epsilon| must be below 1, got {}", p.epsilon))?;
            if let Some(w) = p.drive_frequency {
                c.non_negative("drive_frequency", w)?;
            }
            c.non_negative("duration", p.duration)?;
            c.non_negative("ramp", p.ramp)?;
            c.require(2.0 * p.ramp <= p.duration || p.motion == CavityMotion::Static, "ramp", "ramps must fit in the duration")?;
            c.at_least("n_max", p.n_max, 1)?;
            c.require((1..=p.n_max).contains(&p.modes_out), "modes_out", "must lie in 1..=n_max")?;
            c.at_least("grid_divisions", p.grid_divisions, 8)?;
            c.positive("moore_tol", p.moore_tol)?;
            c.at_least("points_per_half_wave", p.points_per_half_wave, 2)?;
        }
        Params::DceReceding(p) => {
            c.positive("kappa", p.kappa)?;
            c.positive("a", p.a)?;
            let ka = p.kappa * p.a / vacuum_core::constants::CODATA_2018.c;
            c.require(ka < 1.0, "a", &format!("kappa a / c = {ka} must be below 1"))?;
            c.at_least("samples", p.samples, 1024)?;
            c.positive("span", p.span)?;
            c.positive("band_low", p.band_low)?;
            c.require(p.band_high > p.band_low, "band_high", "must exceed band_low")?;
        }
        Params::SquidHorizon(p) => {
            c.positive("junction_critical_current", p.junction_critical_current)?;
            c.positive("junction_capacitance", p.junction_capacitance)?;
            c.positive("ground_capacitance", p.ground_capacitance)?;
            c.positive("cell_spacing", p.cell_spacing)?;
            c.positive("waveguide_inductance_per_length", p.waveguide_inductance_per_length)?;
            c.require(
                (0.0..0.5).contains(&p.amplitude_phi0),
                "amplitude_phi0",
                &format!("must lie in [0, 0.5) flux quanta, got {}", p.amplitude_phi0),
            )?;
            c.positive("steepness", p.steepness)?;
            match (p.velocity, p.velocity_fraction) {
                (Some(v), None) => c.positive("velocity", v)?,
                (None, Some(f)) => c.positive("velocity_fraction", f)?,
                _ => return Err(ConfigError::schema(name, "velocity", "give exactly one of velocity, velocity_fraction")),
            }
            c.at_least("samples", p.samples, 2)?;
            c.positive("span", p.span)?;
        }
    }
    Ok(())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    #[serde(default)]
    scenario: Vec<RawScenario>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScenario {
    name: String,
    kind: String,
    #[serde(default)]
    params: toml::Table,
}

fn line_column(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

/// Parses and validates a config held in memory; `origin` names it in errors.
pub fn parse_config_str(text: &str, origin: &str) -> Result<Vec<Scenario>, ConfigError> {
    let table: toml::Table = text.parse().map_err(|e: toml::de::Error| {
        let (line, column) = e.span().map_or((0, 0), |s| line_column(text, s.start));
        ConfigError::Parse { path: origin.to_string(), line, column, message: e.message().to_string() }
    })?;
    let raw: RawFile = toml::Value::Table(table).try_into().map_err(|e: toml::de::Error| {
        let message = e.message().to_string();
        let key = message.split('`').nth(1).unwrap_or("scenario").to_string();
        ConfigError::Schema { scenario: String::new(), key, message }
    })?;
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(raw.scenario.len());
    for s in raw.scenario {
        let kind: Kind = s.kind.parse().map_err(|m: String| ConfigError::schema(&s.name, "kind", m))?;
        if !seen.insert(s.name.clone()) {
            return Err(ConfigError::schema(&s.name, "name", "duplicate scenario name"));
        }
        out.push(Scenario::new(&s.name, kind, s.params)?);
    }
    Ok(out)
}

/// Reads, parses and validates a config file; scenarios keep file order.
pub fn parse_config(path: &Path) -> Result<Vec<Scenario>, ConfigError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| ConfigError::Io { path: path.display().to_string(), message: e.to_string() })?;
    parse_config_str(&text, &path.display().to_string())
}
