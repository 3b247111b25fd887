//! Scenario execution.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt::Display;
use std::time::Instant;

use vacuum_core::constants::{PhysicalConstants, CODATA_2018};
use vacuum_core::dce::{self, MirrorTrajectory, MooreOptions, RecedingSpectrumConfig};
use vacuum_core::horizon::{self, AccelerationParams, BlackHole, ChirpSpectrumConfig};
use vacuum_core::modeode::{self, FrequencyProfile, Oscillator};
use vacuum_core::squid::{self, FluxPulse, SquidParams};
use vacuum_core::symplectic::{self, DEFAULT_SYMPLECTIC_TOL};

use crate::config::*;
use crate::report::{Check, RunReport, Table};

const C: PhysicalConstants = CODATA_2018;

/// Largest number of rows written for an adaptive-step trajectory.
const MAX_TRAJECTORY_ROWS: usize = 2000;

#[derive(Default)]
struct Outcome {
    table: Table,
    headlines: BTreeMap<String, f64>,
    checks: Vec<Check>,
}

impl Outcome {
    fn headline(&mut self, key: &str, v: f64) {
        self.headlines.insert(key.to_string(), v);
    }

    fn check(&mut self, name: &str, value: f64, limit: f64) {
        self.checks.push(Check::at_most(name, value, limit));
    }
}

fn err<E: Display>(e: E) -> String {
    e.to_string()
}

fn linspace(a: f64, b: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |k| if n == 1 { a } else { a + (b - a) * k as f64 / (n - 1) as f64 })
}

/// Runs one validated scenario. Errors are captured in the report.
pub fn run_scenario(s: &Scenario) -> RunReport {
    let start = Instant::now();
    let result = match &s.params {
        Params::Paramp(p) => paramp(p),
        Params::Quench(p) => quench(p),
        Params::Swing(p) => swing(p),
        Params::Unruh(p) => unruh(p),
        Params::Blackhole(p) => blackhole(p),
        Params::DceCavity(p) => dce_cavity(p),
        Params::DceReceding(p) => dce_receding(p),
        Params::SquidHorizon(p) => squid_horizon(p),
    };
    let (outcome, error) = match result {
        Ok(o) => (o, None),
        Err(e) => (Outcome::default(), Some(e)),
    };
    RunReport {
        scenario: s.name.clone(),
        kind: s.kind,
        wall_time: start.elapsed().as_secs_f64(),
        outputs: Vec::new(),
        headlines: outcome.headlines,
        checks: outcome.checks,
        error,
        table: outcome.table,
    }
}

/// Columns: `time, N, var_x1, var_x2, squeezing_db` (degenerate) or
/// `time, N_signal, N_idler` (non-degenerate).
fn paramp(p: &ParampParams) -> Result<Outcome, String> {
    let mut o = Outcome::default();
    let mut worst: f64 = 0.0;
    match p.mode {
        AmpMode::Degenerate => {
            o.table = Table::new(&["time", "N", "var_x1", "var_x2", "squeezing_db"]);
            let mut product: f64 = 0.0;
            for t in linspace(0.0, p.t, p.samples) {
                let map = symplectic::dpa_evolution(p.eta, t);
                let (v1, v2) = symplectic::quadrature_variances(p.eta, t);
                worst = worst.max(map.residual());
                product = product.max((v1 * v2 - 1.0).abs());
                o.table.push(vec![t, map.mean_photon_number(), v1, v2, symplectic::decibels(v2, 1.0)]);
            }
            let map = symplectic::dpa_evolution(p.eta, p.t);
            let (v1, v2) = symplectic::quadrature_variances(p.eta, p.t);
            o.headline("N", map.mean_photon_number());
            o.headline("alpha", map.alpha().re);
            o.headline("beta", map.beta().re);
            o.headline("var_x1", v1);
            o.headline("var_x2", v2);
            o.headline("squeezing_db", symplectic::decibels(v2, 1.0));
            o.check("variance_product", product, 1e-12);
        }
        AmpMode::Nondegenerate => {
            o.table = Table::new(&["time", "N_signal", "N_idler"]);
            for t in linspace(0.0, p.t, p.samples) {
                worst = worst.max(symplectic::ndpa_evolution(p.eta, t).residual());
                let (ns, ni) = symplectic::ndpa_photon_numbers(p.eta, t);
                o.table.push(vec![t, ns, ni]);
            }
            let (ns, ni) = symplectic::ndpa_photon_numbers(p.eta, p.t);
            o.headline("N_signal", ns);
            o.headline("N_idler", ni);
        }
    }
    o.check("symplectic_residual", worst, DEFAULT_SYMPLECTIC_TOL);
    Ok(o)
}

/// Columns: `time, omega, abs_beta` with `|beta|` projected onto
/// out-frequency modes along the trajectory.
fn quench(p: &QuenchParams) -> Result<Outcome, String> {
    let width = p.ramp_time.unwrap_or(1e-4 / p.omega_in);
    let profile = match p.profile {
        QuenchProfile::Sudden => FrequencyProfile::SuddenStep { omega_in: p.omega_in, omega_out: p.omega_out, width },
        QuenchProfile::Tanh => FrequencyProfile::TanhRamp { omega_in: p.omega_in, omega_out: p.omega_out, ramp_time: width },
    };
    profile.validate().map_err(err)?;
    let osc = Oscillator::new(p.mass, C.hbar).map_err(err)?;
    let (t0, t1) = modeode::asymptotic_window(&profile, 2.0);
    let traj = modeode::evolve_mode(&profile, t0, t1, &osc, p.tol).map_err(err)?;
    let map = modeode::extract_bogoliubov(&traj, p.omega_out).map_err(err)?;

    let mut o = Outcome { table: Table::new(&["time", "omega", "abs_beta"]), ..Default::default() };
    let hist = modeode::beta_history(&traj, p.omega_out);
    let stride = hist.len().div_ceil(MAX_TRAJECTORY_ROWS).max(1);
    for (i, (t, b)) in hist.iter().enumerate() {
        if i % stride == 0 || i + 1 == hist.len() {
            o.table.push(vec![*t, profile.omega(*t), *b]);
        }
    }
    let oracle = modeode::sudden_step_beta_sq(p.omega_in, p.omega_out);
    let beta_sq = map.beta().norm_sqr();
    o.headline("beta_sq", beta_sq);
    o.headline("alpha_sq", map.alpha().norm_sqr());
    o.headline("sudden_limit_beta_sq", oracle);
    o.headline("transition_width", width);
    o.headline("steps", traj.len() as f64);
    o.headline("max_norm_drift", traj.max_norm_drift());
    o.check("symplectic_residual", map.residual(), modeode::EXTRACTION_TOL);
    if p.profile == QuenchProfile::Sudden && width <= 1e-4 / p.omega_in {
        o.check("sudden_limit_relative_error", (beta_sq / oracle - 1.0).abs(), 1e-6);
    }
    Ok(o)
}

/// Columns: `time, theta_formula, theta_ode, theta_free`.
fn swing(p: &SwingParams) -> Result<Outcome, String> {
    let mut o = Outcome { table: Table::new(&["time", "theta_formula", "theta_ode", "theta_free"]), ..Default::default() };
    let (mut gap, mut peak): (f64, f64) = (0.0, 0.0);
    for t in linspace(0.0, p.duration, p.samples) {
        let formula = modeode::parametric_swing(p.theta0, p.angular_momentum0, p.mass, p.length, p.epsilon, t);
        let ode =
            modeode::modulated_pendulum(p.theta0, p.angular_momentum0, p.mass, p.length, p.epsilon, t, modeode::DEFAULT_ODE_TOL)
                .map_err(err)?;
        let free = modeode::simple_pendulum(p.theta0, p.angular_momentum0, p.mass, p.length, t);
        gap = gap.max((formula - ode).abs());
        peak = peak.max(ode.abs());
        o.table.push(vec![t, formula, ode, free]);
    }
    o.headline("swing_frequency", modeode::swing_frequency(p.length));
    o.headline("growth_factor", (0.5 * p.epsilon * p.duration).exp());
    o.headline("peak_amplitude", peak);
    o.headline("max_gap", gap);
    o.check("formula_vs_integration", if peak > 0.0 { gap / peak } else { gap }, p.agreement_tol);
    Ok(o)
}

/// Columns: `omega, P_pos, P_neg, planck_model`, where `planck_model` is the
/// exact absorption-side power.
fn unruh(p: &UnruhParams) -> Result<Outcome, String> {
    let acc = AccelerationParams::from_acceleration(p.proper_acceleration, &C).map_err(err)?;
    let alpha = acc.accel_param;
    let cfg = ChirpSpectrumConfig { samples: p.samples, pad_factor: p.pad_factor, ..Default::default() };
    let s = horizon::unruh_spectrum(&acc, &cfg).map_err(err)?;
    let band = (p.band_low * alpha, p.band_high * alpha);
    let (t_fit, rms) = horizon::planck_fit_1d(&s, band, C.hbar / C.k_b).map_err(err)?;
    let t_u = horizon::unruh_temperature(&acc, &C);

    let mut o = Outcome { table: Table::new(&["omega", "P_pos", "P_neg", "planck_model"]), ..Default::default() };
    for (w, neg, pos) in s.mirrored_bins((0.1 * alpha, 5.0 * alpha)) {
        o.table.push(vec![w, pos, neg, horizon::unruh_power_exact(w, alpha)]);
    }
    let (mut balance, mut form): (f64, f64) = (0.0, 0.0);
    for (w, neg, pos) in s.mirrored_bins(band) {
        balance = balance.max((neg / pos / (-2.0 * PI * w / alpha).exp() - 1.0).abs());
        form = form.max((neg / horizon::unruh_power_exact(w, alpha) - 1.0).abs());
    }
    o.headline("accel_param", alpha);
    o.headline("unruh_temperature", t_u);
    o.headline("fitted_temperature", t_fit);
    o.headline("fit_rms", rms);
    o.headline("max_balance_error", balance);
    o.headline("max_form_error", form);
    o.check("detailed_balance", balance, 0.01);
    o.check("spectral_form", form, 0.02);
    o.check("fitted_temperature", (t_fit / t_u - 1.0).abs(), 0.01);
    o.check("window_length", if s.insufficient_window { 1.0 } else { 0.0 }, 0.0);
    Ok(o)
}

/// Columns: `r_over_rs, r, redshift, static_acceleration, local_temperature,
/// unruh_temperature` (the last from the local static acceleration).
fn blackhole(p: &BlackholeParams) -> Result<Outcome, String> {
    let bh = BlackHole::new(p.mass).map_err(err)?;
    let r_s = horizon::schwarzschild_radius(&bh, &C);
    let (kappa, gamma) = horizon::surface_gravity(&bh, &C);
    let t_h = horizon::hawking_temperature(&bh, &C);
    let unruh_of = |r: f64| -> Result<f64, String> {
        Ok(C.hbar * horizon::static_acceleration(&bh, r, &C).map_err(err)? / C.c / (2.0 * PI * C.k_b))
    };

    let mut o = Outcome {
        table: Table::new(&["r_over_rs", "r", "redshift", "static_acceleration", "local_temperature", "unruh_temperature"]),
        ..Default::default()
    };
    for &x in &p.radii {
        let r = x * r_s;
        o.table.push(vec![
            x,
            r,
            horizon::redshift_factor(&bh, r, &C).map_err(err)?,
            horizon::static_acceleration(&bh, r, &C).map_err(err)?,
            horizon::local_temperature(&bh, r, &C).map_err(err)?,
            unruh_of(r)?,
        ]);
    }
    let product = C.hbar * C.c.powi(3) / (8.0 * PI * C.g * C.k_b);
    let near = r_s * (1.0 + 1e-6);
    let near_ratio = horizon::local_temperature(&bh, near, &C).map_err(err)? / unruh_of(near)?;
    o.headline("mass_solar", p.mass / horizon::SOLAR_MASS);
    o.headline("schwarzschild_radius", r_s);
    o.headline("surface_gravity", kappa);
    o.headline("surface_gravity_rate", gamma);
    o.headline("hawking_temperature", t_h);
    o.headline("entropy", horizon::bh_entropy(&bh, &C));
    o.headline("power_1d", horizon::power_1d(t_h, &C));
    o.headline("temperature_mass_product", t_h * p.mass);
    o.check("temperature_mass_product", (t_h * p.mass / product - 1.0).abs(), 1e-12);
    o.check("near_horizon_unruh_limit", (near_ratio - 1.0).abs(), 1e-3);
    Ok(o)
}

/// Columns: `mode, omega, N, unitarity_residual`. Internally lengths are in
/// units of `z0` and times in units of `z0 / c`.
fn dce_cavity(p: &DceCavityParams) -> Result<Outcome, String> {
    let to_nat_time = C.c / p.z0;
    let omega1 = PI * C.c / p.z0;
    let duration = p.duration * to_nat_time;
    let traj = match p.motion {
        CavityMotion::Static => MirrorTrajectory::Static { z0: 1.0 },
        CavityMotion::Sinusoidal => MirrorTrajectory::Sinusoidal {
            z0: 1.0,
            epsilon: p.epsilon,
            drive_frequency: p.drive_frequency.map_or(2.0 * PI, |w| w / to_nat_time),
            duration,
            ramp: p.ramp * to_nat_time,
        },
    };
    traj.validate().map_err(err)?;
    let rf =
        dce::solve_moore(&traj, duration + 1.0, &MooreOptions { grid_step: 1.0 / p.grid_divisions as f64, tol: p.moore_tol })
            .map_err(err)?;
    let mats = dce::dce_bogoliubov(&rf, &traj, duration, p.n_max, p.points_per_half_wave).map_err(err)?;

    let mut o = Outcome { table: Table::new(&["mode", "omega", "N", "unitarity_residual"]), ..Default::default() };
    let mut total = 0.0;
    for m in 1..=p.modes_out {
        let n = dce::photon_number_out(&mats, m).map_err(err)?;
        total += n;
        o.table.push(vec![m as f64, m as f64 * omega1, n, mats.unitarity_residual[m - 1]]);
    }
    let worst_row = mats.unitarity_residual.iter().take(p.n_max / 2).fold(0.0f64, |a, r| a.max(r.abs()));
    let n1 = dce::photon_number_out(&mats, 1).map_err(err)?;
    o.headline("fundamental_frequency", omega1);
    o.headline("N_1", n1);
    o.headline("N_total", total);
    o.headline("short_time_estimate", (0.5 * p.epsilon * omega1 * p.duration).powi(2));
    o.headline("moore_residual", rf.residual);
    o.headline("max_unitarity_residual", worst_row);
    o.check("moore_residual", rf.residual, p.moore_tol);
    o.check("row_unitarity", worst_row, 1e-3);
    if p.motion == CavityMotion::Static || p.epsilon == 0.0 {
        o.check("static_vacuum", total, 1e-10);
    }
    Ok(o)
}

/// Columns: `omega, P_pos, P_neg, balance_model` with
/// `balance_model = P_pos exp(-hbar omega / k_B T)` at `T = hbar kappa / 2 pi k_B`.
/// Internally times are in units of `1 / kappa`.
fn dce_receding(p: &DceRecedingParams) -> Result<Outcome, String> {
    let a_nat = p.a * p.kappa / C.c;
    let cfg = RecedingSpectrumConfig { span: p.span, samples: p.samples, band: (p.band_low, p.band_high), ..Default::default() };
    let s = dce::receding_mirror_spectrum(a_nat, 1.0, &cfg).map_err(err)?;
    let t_nat = s.fitted_temperature.ok_or("spectrum carries no fit")?;
    let t_fit = C.hbar * p.kappa * t_nat / C.k_b;
    let t_expected = C.hbar * p.kappa / (2.0 * PI * C.k_b);
    let scale = p.kappa.powi(2).recip();

    let mut o = Outcome { table: Table::new(&["omega", "P_pos", "P_neg", "balance_model"]), ..Default::default() };
    let mut balance: f64 = 0.0;
    for (w, neg, pos) in s.mirrored_bins((p.band_low, p.band_high)) {
        let factor = (-2.0 * PI * w).exp();
        balance = balance.max((neg / pos / factor - 1.0).abs());
        o.table.push(vec![w * p.kappa, pos * scale, neg * scale, pos * scale * factor]);
    }
    o.headline("kappa", p.kappa);
    o.headline("expected_temperature", t_expected);
    o.headline("fitted_temperature", t_fit);
    o.headline("fit_rms", s.fit_residual.unwrap_or(f64::NAN));
    o.headline("max_balance_error", balance);
    o.check("fitted_temperature", (t_fit / t_expected - 1.0).abs(), 0.02);
    o.check("detailed_balance", balance, 0.02);
    o.check("window_length", if s.insufficient_window { 1.0 } else { 0.0 }, 0.0);
    Ok(o)
}

/// Columns: `x, flux_phi0, c_s, g_tt` in the frame comoving with the pulse.
fn squid_horizon(p: &SquidHorizonParams) -> Result<Outcome, String> {
    let params = SquidParams::new(
        p.junction_critical_current,
        p.junction_capacitance,
        p.ground_capacitance,
        p.cell_spacing,
        p.waveguide_inductance_per_length,
    )
    .map_err(err)?;
    let c0 = squid::speed_of_light_profile(&params, &FluxPulse::none(0.0), 0.0, &C).map_err(err)?;
    let u = p.velocity.unwrap_or_else(|| p.velocity_fraction.unwrap_or(f64::NAN) * c0);
    let pulse = FluxPulse::tanh_step(p.amplitude_phi0, u, p.steepness).map_err(err)?;
    let h = squid::find_horizon(&params, &pulse, &C).map_err(err)?;

    let mut o = Outcome { table: Table::new(&["x", "flux_phi0", "c_s", "g_tt"]), ..Default::default() };
    let half = p.span / p.steepness;
    for x in linspace(-half, half, p.samples) {
        let c = squid::speed_of_light_profile(&params, &pulse, x, &C).map_err(err)?;
        let (gtt, _, _) = squid::effective_metric(&params, &pulse, x, &C).map_err(err)?;
        o.table.push(vec![x, pulse.flux(x), c, gtt]);
    }
    let c_h = squid::speed_of_light_profile(&params, &pulse, h.position, &C).map_err(err)?;
    let i_cs = squid::squid_critical_current(p.junction_critical_current, 0.0).map_err(err)?;
    o.headline("c_s0", c0);
    o.headline("velocity", u);
    o.headline("horizon_position", h.position);
    o.headline("gradient", h.gradient);
    o.headline("gradient_fd", h.gradient_fd);
    o.headline("hawking_temperature", h.temperature);
    o.headline("power", h.power);
    o.headline("plasma_frequency", squid::plasma_frequency(i_cs, p.junction_capacitance, &C));
    o.headline("cutoff_frequency", h.cutoff_frequency);
    o.headline("max_frequency_scale", h.max_frequency_scale);
    o.check("root_accuracy", (c_h - u).abs() / u, 1e-10);
    o.check("gradient_agreement", (h.gradient_fd / h.gradient - 1.0).abs(), 1e-3);
    o.check("lumped_model_validity", h.max_frequency_scale / h.cutoff_frequency, 0.1);
    Ok(o)
}
