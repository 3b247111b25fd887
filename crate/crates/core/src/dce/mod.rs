//! Dynamical Casimir effect in one spatial dimension.
//!
//! Natural units throughout (`c = 1`): lengths and times share a unit and
//! frequencies are inverse lengths. A cavity has a fixed mirror at `x = 0`
//! and a moving mirror at `x = z(t)`; its modes are generated by the
//! solution `R` of Moore's equation `R(t + z(t)) - R(t - z(t)) = 2`.

mod cavity;
mod moore;
mod receding;

pub use cavity::{cavity_mode, cavity_mode_dt, dce_bogoliubov, photon_number_out, static_mode, BogoliubovMatrices};
pub use moore::{solve_moore, MooreOptions, RFunction};
pub use receding::{receding_mirror_spectrum, receding_ray, RecedingSpectrumConfig};

use std::f64::consts::PI;

use thiserror::Error;

use crate::horizon::HorizonError;
use crate::symplectic::{dpa_evolution, BogoliubovMap};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DceError {
    #[error("invalid mirror trajectory: {0}")]
    InvalidTrajectory(String),
    #[error("Moore residual {residual:e} exceeds tolerance {tol:e}")]
    ResidualExceeded { residual: f64, tol: f64 },
    #[error("R decreases between u = {u0} and u = {u1}")]
    NonMonotone { u0: f64, u1: f64 },
    #[error("u = {u} lies outside the solved range [{lo}, {hi}]")]
    OutOfGrid { u: f64, lo: f64, hi: f64 },
    #[error("row unitarity violated for mode {mode}: residual {residual:e}")]
    UnitarityLoss { mode: usize, residual: f64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Spectrum(#[from] HorizonError),
}

/// Position of the moving mirror.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MirrorTrajectory {
    Static {
        z0: f64,
    },
    /// `z(t) = z0 [1 - epsilon env(t) sin(drive_frequency t)]` for
    /// `0 <= t <= duration`, `z0` outside. The envelope rises and falls with
    /// half-cosine ramps of length `ramp`; `ramp = 0` switches the drive on
    /// and off abruptly.
    Sinusoidal {
        z0: f64,
        epsilon: f64,
        drive_frequency: f64,
        duration: f64,
        ramp: f64,
    },
    /// Single mirror receding to the left: `z(t) = -t - A e^{-2 kappa t} + A`
    /// for `t > 0`, `0` before.
    Receding {
        a: f64,
        kappa: f64,
    },
}

impl MirrorTrajectory {
    /// Sinusoidal drive with one-period half-cosine ramps.
    pub fn sinusoidal(z0: f64, epsilon: f64, drive_frequency: f64, duration: f64) -> Result<Self, DceError> {
        let t = Self::Sinusoidal { z0, epsilon, drive_frequency, duration, ramp: 2.0 * PI / drive_frequency };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<(), DceError> {
        let bad = |m: String| Err(DceError::InvalidTrajectory(m));
        match *self {
            Self::Static { z0 } if !(z0 > 0.0) => bad(format!("z0 must be positive, got {z0}")),
            Self::Static { .. } => Ok(()),
            Self::Sinusoidal { z0, epsilon, drive_frequency, duration, ramp } => {
                if !(z0 > 0.0 && drive_frequency >= 0.0 && duration >= 0.0 && ramp >= 0.0) {
                    return bad(format!("need z0 > 0 and non-negative frequency, duration, ramp (got {z0}, {drive_frequency}, {duration}, {ramp})"));
                }
                if !(epsilon.abs() < 1.0) {
                    return bad(format!("|epsilon| must be below 1, got {epsilon}"));
                }
                if 2.0 * ramp > duration && epsilon != 0.0 {
                    return bad(format!("ramps of {ramp} do not fit in a drive of {duration}"));
                }
                let ramp_rate = if ramp > 0.0 { PI / (2.0 * ramp) } else { 0.0 };
                let vmax = z0 * epsilon.abs() * (drive_frequency + ramp_rate);
                if vmax >= 1.0 {
                    return bad(format!("mirror speed bound {vmax} is not sub-luminal"));
                }
                Ok(())
            }
            Self::Receding { a, kappa } => {
                if !(a > 0.0 && kappa > 0.0) {
                    return bad(format!("A and kappa must be positive (got {a}, {kappa})"));
                }
                if !(kappa * a < 1.0) {
                    return bad(format!("kappa A = {} must be below 1 for a sub-luminal start", kappa * a));
                }
                Ok(())
            }
        }
    }

    /// Rest separation (0 for the receding mirror).
    pub fn z0(&self) -> f64 {
        match *self {
            Self::Static { z0 } | Self::Sinusoidal { z0, .. } => z0,
            Self::Receding { .. } => 0.0,
        }
    }

    fn envelope(&self, t: f64) -> (f64, f64) {
        match *self {
            Self::Sinusoidal { duration, ramp, .. } => {
                if t <= 0.0 || t >= duration {
                    (0.0, 0.0)
                } else if ramp > 0.0 && t < ramp {
                    (0.5 * (1.0 - (PI * t / ramp).cos()), 0.5 * PI / ramp * (PI * t / ramp).sin())
                } else if ramp > 0.0 && t > duration - ramp {
                    let s = duration - t;
                    (0.5 * (1.0 - (PI * s / ramp).cos()), -0.5 * PI / ramp * (PI * s / ramp).sin())
                } else {
                    (1.0, 0.0)
                }
            }
            _ => (0.0, 0.0),
        }
    }

    pub fn z(&self, t: f64) -> f64 {
        match *self {
            Self::Static { z0 } => z0,
            Self::Sinusoidal { z0, epsilon, drive_frequency, .. } => {
                let (e, _) = self.envelope(t);
                z0 * (1.0 - epsilon * e * (drive_frequency * t).sin())
            }
            Self::Receding { a, kappa } => {
                if t <= 0.0 {
                    0.0
                } else {
                    -t - a * (-2.0 * kappa * t).exp() + a
                }
            }
        }
    }

    pub fn velocity(&self, t: f64) -> f64 {
        match *self {
            Self::Static { .. } => 0.0,
            Self::Sinusoidal { z0, epsilon, drive_frequency: w, .. } => {
                let (e, de) = self.envelope(t);
                -z0 * epsilon * (de * (w * t).sin() + e * w * (w * t).cos())
            }
            Self::Receding { a, kappa } => {
                if t <= 0.0 {
                    0.0
                } else {
                    -1.0 + 2.0 * kappa * a * (-2.0 * kappa * t).exp()
                }
            }
        }
    }

    /// Bounds `(z_min, z_max)` over all time (cavity kinds).
    pub fn z_bounds(&self) -> (f64, f64) {
        match *self {
            Self::Static { z0 } => (z0, z0),
            Self::Sinusoidal { z0, epsilon, .. } => (z0 * (1.0 - epsilon.abs()), z0 * (1.0 + epsilon.abs())),
            Self::Receding { .. } => (f64::NEG_INFINITY, 0.0),
        }
    }

    /// True when the mirror is at rest at `z0` from `t` onwards.
    pub fn static_from(&self, t: f64) -> bool {
        match *self {
            Self::Static { .. } => true,
            Self::Sinusoidal { epsilon, duration, .. } => epsilon == 0.0 || t >= duration,
            Self::Receding { .. } => false,
        }
    }
}

/// Fundamental cavity frequency `omega_n = pi n / z0`.
pub fn cavity_frequency(n: usize, z0: f64) -> f64 {
    PI * n as f64 / z0
}

/// Single resonant mode driven at twice its frequency:
/// `N = sinh^2(epsilon omega_0 t)`. The coefficients are those of a
/// degenerate amplifier, `alpha = cosh(epsilon omega_0 t)` and
/// `beta = sinh(epsilon omega_0 t)`; in the amplifier's convention
/// `alpha = cosh(2 eta t)` this is `eta = epsilon omega_0 / 2`.
pub fn single_mode_dce(epsilon: f64, omega0: f64, t: f64) -> (f64, BogoliubovMap) {
    let map = dpa_evolution(0.5 * epsilon * omega0, t);
    (map.mean_photon_number(), map)
}

/// Parametric oscillation threshold of a lossy cavity: `epsilon omega Q > 1`.
pub fn dce_threshold(epsilon: f64, omega: f64, q: f64) -> bool {
    epsilon * omega * q > 1.0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn threshold_is_strict() {
        assert!(dce_threshold(2.0, 1.0, 1.0));
        assert!(!dce_threshold(0.5, 1.0, 1.0));
        assert!(!dce_threshold(1.0, 1.0, 1.0));
    }

    #[test]
    fn single_mode_matches_amplifier() {
        assert_eq!(single_mode_dce(0.01, 3.0, 0.0).0, 0.0);
        for t in [0.5, 1.0, 2.0, 3.3] {
            let (n, map) = single_mode_dce(0.01, 3.0, t);
            let x = 0.01 * 3.0 * t;
            assert!((n / x.powi(2) - 1.0).abs() < 1e-2 * x.max(1e-3) / 0.1 + 1e-12);
            assert_eq!(map, dpa_evolution(0.015, t));
            assert_eq!(map.beta().re, x.sinh());
        }
    }

    #[test]
    fn trajectory_shapes() {
        let t = MirrorTrajectory::sinusoidal(1.0, 0.01, 2.0 * PI, 10.0).unwrap();
        assert_eq!(t.z(-1.0), 1.0);
        assert_eq!(t.z(11.0), 1.0);
        assert_eq!(t.velocity(0.0), 0.0);
        let h = 1e-6;
        for s in [0.3, 0.9, 4.2, 9.5] {
            let fd = (t.z(s + h) - t.z(s - h)) / (2.0 * h);
            assert!((fd - t.velocity(s)).abs() < 1e-8);
        }
        let r = MirrorTrajectory::Receding { a: 0.5, kappa: 1.0 };
        r.validate().unwrap();
        assert_eq!(r.z(0.0), 0.0);
        assert!(r.z(1e-9).abs() < 1e-12);
        assert!((r.velocity(50.0) + 1.0).abs() < 1e-12);
        assert!(MirrorTrajectory::Receding { a: 2.0, kappa: 1.0 }.validate().is_err());
        let fast = MirrorTrajectory::Sinusoidal { z0: 1.0, epsilon: 0.5, drive_frequency: 10.0, duration: 10.0, ramp: 1.0 };
        assert!(fast.validate().is_err());
    }
}
