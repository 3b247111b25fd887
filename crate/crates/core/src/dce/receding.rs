//! Thermal spectrum of a mirror receding towards the speed of light.

use num_complex::Complex64 as C64;

use super::{DceError, MirrorTrajectory};
use crate::horizon::{power_spectrum, with_planck_fit, SpectrumOptions, SpectrumSeries, StepBaseline, Window};
use crate::numerics::newton_bracketed;

/// Advanced time `v` of the incoming ray that leaves the mirror along the
/// outgoing null line `u`.
///
/// A ray `v = t + x` meets the mirror at `t_r` with `v = A (1 - e^{-2 kappa t_r})`
/// and leaves along `u = t_r - z(t_r)`. With `s = 2 kappa t_r` this is
/// `s / kappa - A (1 - e^{-s}) = u`, monotone in `s`. Before the mirror moves
/// (`u <= 0`) the reflection is trivial, `v = u`.
pub fn receding_ray(a: f64, kappa: f64, u: f64) -> f64 {
    if u <= 0.0 {
        return u;
    }
    let s = newton_bracketed(
        |s| s / kappa - a * (-(-s).exp_m1()) - u,
        |s| 1.0 / kappa - a * (-s).exp(),
        kappa * u,
        kappa * (u + a) + 1.0,
        1e-15 * (kappa * u).max(1.0),
    );
    -a * (-s).exp_m1()
}

/// Sampling of the reflected wave, times in units of `1 / kappa`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecedingSpectrumConfig {
    /// Record covers `u` in `[0, span / kappa]`.
    pub span: f64,
    pub samples: usize,
    pub pad_factor: usize,
    /// Incident frequency `Omega / kappa`; far above the band so that the
    /// static-mirror tone does not leak into it.
    pub probe_ratio: f64,
    pub taper: f64,
    pub step_centre: f64,
    pub step_width: f64,
    /// Fit band `omega / kappa`.
    pub band: (f64, f64),
}

impl Default for RecedingSpectrumConfig {
    fn default() -> Self {
        Self {
            span: 30.0,
            samples: 1 << 19,
            pad_factor: 4,
            probe_ratio: 1e4,
            taper: 4.0,
            step_centre: 10.0,
            step_width: 0.5,
            band: (0.5, 3.0),
        }
    }
}

/// Spectrum of the reflected wave `exp(-i Omega v(u))` with its Planck fit
/// attached (natural units, `hbar = k_B = 1`).
///
/// Late rays pile up against the horizon `v = A` as
/// `v ~ A - A e^{-kappa (u + A)}`, an exponential red shift with rate
/// `kappa`, hence a Planck spectrum at `T = kappa / 2 pi`.
pub fn receding_mirror_spectrum(a: f64, kappa: f64, cfg: &RecedingSpectrumConfig) -> Result<SpectrumSeries, DceError> {
    MirrorTrajectory::Receding { a, kappa }.validate()?;
    if cfg.samples < 2 || cfg.span <= 0.0 {
        return Err(DceError::InvalidArgument("receding spectrum needs a positive span and >= 2 samples".into()));
    }
    let omega = cfg.probe_ratio * kappa;
    let dt = cfg.span / kappa / cfg.samples as f64;
    let samples: Vec<C64> =
        (0..cfg.samples).map(|k| C64::from_polar(1.0, -omega * receding_ray(a, kappa, k as f64 * dt))).collect();
    let opts = SpectrumOptions {
        window: Window::PlanckTaperLeft { width: cfg.taper / kappa },
        pad_factor: cfg.pad_factor,
        baseline: Some(StepBaseline {
            level: C64::from_polar(1.0, -omega * a),
            centre: cfg.step_centre / kappa,
            width: cfg.step_width / kappa,
        }),
    };
    let mut s = power_spectrum(&samples, 0.0, dt, &opts)?;
    s.insufficient_window = cfg.span < 8.0;
    Ok(with_planck_fit(s, (cfg.band.0 * kappa, cfg.band.1 * kappa), 1.0)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ray_tracing_is_consistent() {
        let (a, kappa) = (0.5, 2.0);
        let traj = MirrorTrajectory::Receding { a, kappa };
        for u in [0.01, 0.3, 2.0, 10.0] {
            let v = receding_ray(a, kappa, u);
            // reflection event: t_r + z(t_r) = v and t_r - z(t_r) = u
            let t_r = 0.5 * (u + v);
            assert!((t_r + traj.z(t_r) - v).abs() < 1e-12);
            assert!(v < a);
        }
        assert_eq!(receding_ray(a, kappa, -1.0), -1.0);
    }
}
