//! Mode functions of a harmonic oscillator with a time-dependent frequency.
//!
//! Solves `f'' + omega(t)^2 f = 0` for a complex mode function `f`, starting
//! from the positive-frequency solution `f = x_zp e^{-i omega_in t}`, and
//! projects the result onto the out-region modes with the Klein-Gordon inner
//! product to read off the Bogoliubov coefficients.

mod dopri;
mod swing;

pub use swing::{modulated_pendulum, parametric_swing, simple_pendulum, swing_frequency};

use num_complex::Complex64 as C64;
use thiserror::Error;

use crate::numerics::linear_fit;
use crate::symplectic::{make_bogoliubov, BogoliubovMap, SymplecticError};

pub const DEFAULT_ODE_TOL: f64 = 1e-10;
pub const EXTRACTION_TOL: f64 = 1e-6;
const MAX_STEPS: usize = 50_000_000;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModeOdeError {
    #[error("step size underflow at t = {t:e} (h = {h:e})")]
    StepSizeUnderflow { t: f64, h: f64 },
    #[error("exceeded {0} integration steps")]
    TooManySteps(usize),
    #[error("Klein-Gordon norm drifted by {drift:e} after {steps} steps (limit {limit:e})")]
    NormDrift { drift: f64, steps: usize, limit: f64 },
    #[error("invalid frequency profile: {0}")]
    InvalidProfile(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Symplectic(#[from] SymplecticError),
}

/// Mass and reduced Planck constant of the oscillator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Oscillator {
    pub mass: f64,
    pub hbar: f64,
}

impl Oscillator {
    pub fn new(mass: f64, hbar: f64) -> Result<Self, ModeOdeError> {
        if !(mass > 0.0 && hbar > 0.0) {
            return Err(ModeOdeError::InvalidArgument(format!("mass and hbar must be positive (m = {mass}, hbar = {hbar})")));
        }
        Ok(Self { mass, hbar })
    }

    /// `hbar = m = 1`.
    pub fn unit() -> Self {
        Self { mass: 1.0, hbar: 1.0 }
    }

    pub fn zero_point(&self, omega: f64) -> f64 {
        (self.hbar / (2.0 * self.mass * omega)).sqrt()
    }
}

/// Frequency as a function of time.
///
/// Step and ramp profiles are centred on `t = 0`:
/// `omega(t) = omega_in + (omega_out - omega_in) (1 + tanh(t / w)) / 2`.
/// A sudden step is the same shape with a width far below the period.
/// The pump is `omega_0 (1 + depth sin(pump_frequency t))` for `t >= 0` and
/// `omega_0` before.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FrequencyProfile {
    Constant { omega: f64 },
    SuddenStep { omega_in: f64, omega_out: f64, width: f64 },
    TanhRamp { omega_in: f64, omega_out: f64, ramp_time: f64 },
    SinusoidalPump { omega0: f64, depth: f64, pump_frequency: f64 },
}

impl FrequencyProfile {
    /// Step at `t = 0` with a width of `1e-4 / omega_in`.
    pub fn sudden(omega_in: f64, omega_out: f64) -> Self {
        Self::SuddenStep { omega_in, omega_out, width: 1e-4 / omega_in }
    }

    pub fn validate(&self) -> Result<(), ModeOdeError> {
        let bad = |msg: String| Err(ModeOdeError::InvalidProfile(msg));
        match *self {
            Self::Constant { omega } if !(omega > 0.0) => bad(format!("omega must be positive, got {omega}")),
            Self::SuddenStep { omega_in, omega_out, width: w } | Self::TanhRamp { omega_in, omega_out, ramp_time: w }
                if !(omega_in > 0.0 && omega_out > 0.0 && w > 0.0) =>
            {
                bad(format!("need positive frequencies and width (in = {omega_in}, out = {omega_out}, width = {w})"))
            }
            Self::SinusoidalPump { omega0, depth, pump_frequency }
                if !(omega0 > 0.0 && depth.abs() < 1.0 && pump_frequency >= 0.0) =>
            {
                bad(format!("need omega0 > 0, |depth| < 1, pump >= 0 (got {omega0}, {depth}, {pump_frequency})"))
            }
            _ => Ok(()),
        }
    }

    pub fn omega(&self, t: f64) -> f64 {
        match *self {
            Self::Constant { omega } => omega,
            Self::SuddenStep { omega_in, omega_out, width: w } | Self::TanhRamp { omega_in, omega_out, ramp_time: w } => {
                omega_in + (omega_out - omega_in) * 0.5 * (1.0 + (t / w).tanh())
            }
            Self::SinusoidalPump { omega0, depth, pump_frequency } => {
                if t < 0.0 {
                    omega0
                } else {
                    omega0 * (1.0 + depth * (pump_frequency * t).sin())
                }
            }
        }
    }

    pub fn omega_in(&self) -> f64 {
        match *self {
            Self::Constant { omega } => omega,
            Self::SuddenStep { omega_in, .. } | Self::TanhRamp { omega_in, .. } => omega_in,
            Self::SinusoidalPump { omega0, .. } => omega0,
        }
    }

    /// Asymptotic out frequency; the unpumped frequency for the pump.
    pub fn omega_out(&self) -> f64 {
        match *self {
            Self::Constant { omega } => omega,
            Self::SuddenStep { omega_out, .. } | Self::TanhRamp { omega_out, .. } => omega_out,
            Self::SinusoidalPump { omega0, .. } => omega0,
        }
    }

    /// Duration over which the profile differs appreciably from its
    /// asymptotes (zero for the constant and pump profiles).
    pub fn transition_width(&self) -> f64 {
        match *self {
            Self::SuddenStep { width, .. } => width,
            Self::TanhRamp { ramp_time, .. } => ramp_time,
            _ => 0.0,
        }
    }
}

/// Accepted integration steps of a mode function.
#[derive(Debug, Clone, PartialEq)]
pub struct ModeTrajectory {
    pub times: Vec<f64>,
    pub f: Vec<C64>,
    pub fdot: Vec<C64>,
    pub oscillator: Oscillator,
    pub kg_norm_history: Vec<f64>,
}

impl ModeTrajectory {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn last(&self) -> (f64, C64, C64) {
        let i = self.times.len() - 1;
        (self.times[i], self.f[i], self.fdot[i])
    }

    /// Largest `| <f, f> - 1 |` over the stored steps.
    pub fn max_norm_drift(&self) -> f64 {
        self.kg_norm_history.iter().map(|n| (n - 1.0).abs()).fold(0.0, f64::max)
    }
}

/// `f(0) = x_zp`, `f'(0) = -i omega x_zp`.
pub fn positive_frequency_ic(omega_in: f64, osc: &Oscillator) -> (C64, C64) {
    let x = osc.zero_point(omega_in);
    (C64::new(x, 0.0), C64::new(0.0, -omega_in * x))
}

/// Klein-Gordon product `<f, g> = (i m / hbar) (conj(f) g' - g conj(f'))`.
pub fn kg_inner(f: C64, fdot: C64, g: C64, gdot: C64, osc: &Oscillator) -> C64 {
    C64::new(0.0, osc.mass / osc.hbar) * (f.conj() * gdot - g * fdot.conj())
}

/// Integrates from the positive-frequency initial data at `t0` to `t1`.
pub fn evolve_mode(
    profile: &FrequencyProfile,
    t0: f64,
    t1: f64,
    osc: &Oscillator,
    tol: f64,
) -> Result<ModeTrajectory, ModeOdeError> {
    if !(t1 > t0) {
        return Err(ModeOdeError::InvalidArgument(format!("need t0 < t1 (got {t0}, {t1})")));
    }
    let (f0, fdot0) = positive_frequency_ic(profile.omega(t0), osc);
    evolve_from(profile, t0, t1, f0, fdot0, osc, tol)
}

/// Integrates arbitrary initial data `(f0, fdot0)` from `t0` to `t1`, which
/// may lie before `t0`.
///
/// The stored norm drift is measured relative to `max(1, |f|^2 / x_zp^2)`:
/// an amplified mode carries `|alpha|^2 + |beta|^2` in each term of the
/// Klein-Gordon difference, so its absolute error grows with the gain.
pub fn evolve_from(
    profile: &FrequencyProfile,
    t0: f64,
    t1: f64,
    f0: C64,
    fdot0: C64,
    osc: &Oscillator,
    tol: f64,
) -> Result<ModeTrajectory, ModeOdeError> {
    profile.validate()?;
    if !(tol > 0.0) {
        return Err(ModeOdeError::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    let w_ref = profile.omega(t0);
    let x_ref = osc.zero_point(w_ref);
    let rhs = |t: f64, y: &dopri::State| -> dopri::State {
        let w = profile.omega(t);
        [y[1] * w_ref, y[0] * (-w * w / w_ref)]
    };
    let pack = |y: &dopri::State| (y[0] * x_ref, y[1] * (x_ref * w_ref));
    let norm0 = kg_inner(f0, fdot0, f0, fdot0, osc).re;

    let mut y: dopri::State = [f0 / x_ref, fdot0 / (x_ref * w_ref)];
    let mut t = t0;
    let span = t1 - t0;
    let dir = span.signum();
    let w_max = match *profile {
        FrequencyProfile::SinusoidalPump { omega0, depth, .. } => omega0 * (1.0 + depth.abs()),
        _ => profile.omega_in().max(profile.omega_out()),
    };
    let mut h = dir * (0.01 / w_max).min(span.abs());
    let mut k1 = rhs(t, &y);

    let mut traj =
        ModeTrajectory { times: vec![t0], f: vec![f0], fdot: vec![fdot0], oscillator: *osc, kg_norm_history: vec![norm0] };
    let mut steps = 0usize;
    while (t1 - t) * dir > 0.0 {
        if steps >= MAX_STEPS {
            return Err(ModeOdeError::TooManySteps(MAX_STEPS));
        }
        if (t + h - t1) * dir > 0.0 {
            h = t1 - t;
        }
        let h_min = 1e-14 * (t.abs() + span.abs());
        if h.abs() < h_min {
            return Err(ModeOdeError::StepSizeUnderflow { t, h });
        }
        let (res, k_next) = dopri::step(&rhs, t, &y, &k1, h, tol);
        if res.err <= 1.0 {
            t = if (t + h - t1) * dir >= 0.0 { t1 } else { t + h };
            y = res.y;
            k1 = k_next;
            steps += 1;
            let (f, fd) = pack(&y);
            let norm = kg_inner(f, fd, f, fd, osc).re;
            let scale = (y[0].norm_sqr() + y[1].norm_sqr()).max(1.0);
            let drift = (norm - norm0).abs() / scale;
            let limit = 10.0 * tol * steps as f64;
            if drift > limit && drift > 1e-14 {
                return Err(ModeOdeError::NormDrift { drift, steps, limit });
            }
            traj.times.push(t);
            traj.f.push(f);
            traj.fdot.push(fd);
            traj.kg_norm_history.push(norm);
        }
        let factor = if res.err == 0.0 { 5.0 } else { (0.9 * res.err.powf(-0.2)).clamp(0.2, 5.0) };
        h *= if res.err <= 1.0 { factor } else { factor.min(1.0) };
    }
    Ok(traj)
}

/// Positive-frequency out mode `x_zp e^{-i omega t}` and its derivative.
pub fn out_mode(omega: f64, t: f64, osc: &Oscillator) -> (C64, C64) {
    let u = C64::from_polar(osc.zero_point(omega), -omega * t);
    (u, u * C64::new(0.0, -omega))
}

/// Bogoliubov coefficients of a mode function `(f, f')` at time `t` against
/// the out modes of frequency `omega_out`:
/// `alpha = <u, f>`, `beta = -<conj u, f>`.
pub fn project(f: C64, fdot: C64, t: f64, omega_out: f64, osc: &Oscillator) -> (C64, C64) {
    let (u, ud) = out_mode(omega_out, t, osc);
    let alpha = kg_inner(u, ud, f, fdot, osc);
    let beta = -kg_inner(u.conj(), ud.conj(), f, fdot, osc);
    (alpha, beta)
}

/// Projects the final point of `traj` onto the out modes.
pub fn extract_bogoliubov(traj: &ModeTrajectory, omega_out: f64) -> Result<BogoliubovMap, ModeOdeError> {
    if traj.is_empty() {
        return Err(ModeOdeError::InvalidArgument("empty trajectory".into()));
    }
    let (t, f, fd) = traj.last();
    let (alpha, beta) = project(f, fd, t, omega_out, &traj.oscillator);
    Ok(make_bogoliubov(alpha, beta, EXTRACTION_TOL)?)
}

/// Integration window `[t0, t1]` that starts and ends in the asymptotic
/// regions of a step or ramp profile, with `periods` in-frequency periods of
/// padding on either side.
pub fn asymptotic_window(profile: &FrequencyProfile, periods: f64) -> (f64, f64) {
    let pad = periods * std::f64::consts::TAU / profile.omega_in().min(profile.omega_out());
    let w = profile.transition_width();
    // tanh reaches its asymptote to 1e-16 within 19 widths
    let half = 19.0 * w + pad;
    (-half, half)
}

/// Evolves through a step or ramp and extracts the Bogoliubov map.
pub fn quench_bogoliubov(profile: &FrequencyProfile, osc: &Oscillator, tol: f64) -> Result<BogoliubovMap, ModeOdeError> {
    let (t0, t1) = asymptotic_window(profile, 2.0);
    let traj = evolve_mode(profile, t0, t1, osc, tol)?;
    extract_bogoliubov(&traj, profile.omega_out())
}

/// Analytic mode matching across a discontinuous step:
/// `alpha = (w_out + w_in) / (2 sqrt(w_in w_out))`,
/// `beta = (w_out - w_in) / (2 sqrt(w_in w_out))` up to phases.
pub fn sudden_step_beta_sq(omega_in: f64, omega_out: f64) -> f64 {
    (omega_out - omega_in).powi(2) / (4.0 * omega_in * omega_out)
}

/// `|beta(t)|` sampled along a trajectory, projected onto modes of
/// frequency `omega_ref` at every stored step.
pub fn beta_history(traj: &ModeTrajectory, omega_ref: f64) -> Vec<(f64, f64)> {
    traj.times
        .iter()
        .zip(traj.f.iter().zip(&traj.fdot))
        .map(|(&t, (&f, &fd))| (t, project(f, fd, t, omega_ref, &traj.oscillator).1.norm()))
        .collect()
}

/// Exponential growth rate of `|beta|` from a least-squares fit of
/// `ln |beta|` against time over the final half of the trajectory.
/// The matching amplifier rate is `eta = rate / 2`.
pub fn fit_growth_rate(traj: &ModeTrajectory, omega_ref: f64) -> Result<f64, ModeOdeError> {
    let hist = beta_history(traj, omega_ref);
    let t_mid = 0.5 * (traj.times[0] + traj.times[traj.len() - 1]);
    let (ts, ls): (Vec<f64>, Vec<f64>) = hist.iter().filter(|(t, b)| *t >= t_mid && *b > 0.0).map(|(t, b)| (*t, b.ln())).unzip();
    if ts.len() < 2 {
        return Err(ModeOdeError::InvalidArgument("not enough points in the final half to fit".into()));
    }
    Ok(linear_fit(&ts, &ls).0)
}
