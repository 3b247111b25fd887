//! Horizons: uniformly accelerated observers and Schwarzschild black holes.
//!
//! An observer with proper acceleration `a` sees a monochromatic plane wave
//! as `exp[i (Omega / alpha) e^{-alpha tau}]` with `alpha = a / c`; its
//! spectrum has Planckian weight at negative frequency with temperature
//! `hbar alpha / (2 pi k_B)`. The same exponential red shift at a black-hole
//! horizon gives the Hawking temperature with `alpha` replaced by
//! `gamma = kappa / c`.

mod spectrum;

pub use spectrum::{
    planck_1d, planck_fit_1d, power_spectrum, with_planck_fit, SpectrumOptions, SpectrumSeries, StepBaseline, Window,
};

use std::f64::consts::PI;

use num_complex::Complex64 as C64;
use thiserror::Error;

use crate::constants::PhysicalConstants;

/// Nominal solar mass, kg.
pub const SOLAR_MASS: f64 = 1.989e30;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HorizonError {
    #[error("radius {r:e} m is not outside the horizon r_s = {r_s:e} m")]
    InsideHorizon { r: f64, r_s: f64 },
    #[error("Planck fit ran to the edge of its search range (T = {temperature:e}, upper bound {upper:e})")]
    FitDiverged { temperature: f64, upper: f64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// Proper acceleration `a`, its rate `alpha = a / c` and the Rindler vertex
/// distance `xi = c^2 / a`, so that `alpha xi = c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AccelerationParams {
    pub proper_accel: f64,
    pub accel_param: f64,
    pub vertex_distance: f64,
}

impl AccelerationParams {
    pub fn from_acceleration(a: f64, consts: &PhysicalConstants) -> Result<Self, HorizonError> {
        if !(a > 0.0 && a.is_finite()) {
            return Err(HorizonError::InvalidArgument(format!("acceleration must be positive, got {a}")));
        }
        Ok(Self { proper_accel: a, accel_param: a / consts.c, vertex_distance: consts.c * consts.c / a })
    }

    pub fn from_rate(alpha: f64, consts: &PhysicalConstants) -> Result<Self, HorizonError> {
        Self::from_acceleration(alpha * consts.c, consts)
    }
}

/// Minkowski position `(ct, x)` of the observer at proper time `tau`.
pub fn rindler_to_minkowski(tau: f64, params: &AccelerationParams) -> (f64, f64) {
    let (xi, a) = (params.vertex_distance, params.accel_param);
    (xi * (a * tau).sinh(), xi * (a * tau).cosh())
}

/// Coordinate velocity `d(ct)/dx` along the worldline, `coth(alpha tau)`'s
/// reciprocal `tanh(alpha tau)`.
pub fn coordinate_velocity(tau: f64, params: &AccelerationParams) -> f64 {
    (params.accel_param * tau).tanh()
}

/// `exp[i (Omega / alpha) e^{-alpha tau}]` on the given proper times.
pub fn chirped_waveform(omega_probe: f64, params: &AccelerationParams, taus: &[f64]) -> Vec<C64> {
    let a = params.accel_param;
    taus.iter().map(|&t| C64::from_polar(1.0, omega_probe / a * (-a * t).exp())).collect()
}

/// Sampling and windowing of the chirped-waveform spectrum, with times in
/// units of `1 / alpha`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChirpSpectrumConfig {
    /// Record start, `-left / alpha`.
    pub left: f64,
    /// Record end, `right / alpha`.
    pub right: f64,
    pub samples: usize,
    pub pad_factor: usize,
    /// Width of the subtracted tanh step, centred at `tau = 0`.
    pub step_width: f64,
    /// Length of the smooth rise at the start of the record.
    pub taper: f64,
    /// Probe frequency `Omega / alpha`.
    pub probe_ratio: f64,
}

impl Default for ChirpSpectrumConfig {
    fn default() -> Self {
        Self { left: 8.0, right: 30.0, samples: 1 << 17, pad_factor: 4, step_width: 0.5, taper: 3.0, probe_ratio: 1.0 }
    }
}

/// Spectrum of the chirped waveform seen by an accelerated observer.
///
/// For `alpha tau >> 1` the waveform settles to 1, so the record carries a
/// smooth step that is removed before the transform and added back
/// analytically (see [`StepBaseline`]); the early, rapidly oscillating end
/// is rolled in with a smooth taper.
pub fn unruh_spectrum(params: &AccelerationParams, cfg: &ChirpSpectrumConfig) -> Result<SpectrumSeries, HorizonError> {
    let a = params.accel_param;
    let t0 = -cfg.left / a;
    let dt = (cfg.left + cfg.right) / a / cfg.samples as f64;
    let taus: Vec<f64> = (0..cfg.samples).map(|k| t0 + k as f64 * dt).collect();
    let samples = chirped_waveform(cfg.probe_ratio * a, params, &taus);
    let opts = SpectrumOptions {
        window: Window::PlanckTaperLeft { width: cfg.taper / a },
        pad_factor: cfg.pad_factor,
        baseline: Some(StepBaseline { level: C64::new(1.0, 0.0), centre: 0.0, width: cfg.step_width / a }),
    };
    let mut s = power_spectrum(&samples, t0, dt, &opts)?;
    s.insufficient_window = cfg.left + cfg.right < 5.0;
    Ok(s)
}

/// Exact absorption-side power `2 pi / (omega alpha) / (e^{2 pi omega / alpha} - 1)`.
pub fn unruh_power_exact(omega: f64, alpha: f64) -> f64 {
    2.0 * PI / (omega * alpha) / (2.0 * PI * omega / alpha).exp_m1()
}

/// `T_U = hbar alpha / (2 pi k_B)`.
pub fn unruh_temperature(params: &AccelerationParams, consts: &PhysicalConstants) -> f64 {
    consts.hbar * params.accel_param / (2.0 * PI * consts.k_b)
}

/// `exp(-hbar omega / k_B T)`.
pub fn detailed_balance_ratio(omega01: f64, temperature: f64, consts: &PhysicalConstants) -> Result<f64, HorizonError> {
    if !(temperature > 0.0) {
        return Err(HorizonError::InvalidArgument(format!("temperature must be positive, got {temperature}")));
    }
    Ok((-consts.hbar * omega01 / (consts.k_b * temperature)).exp())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlackHole {
    mass: f64,
}

impl BlackHole {
    pub fn new(mass: f64) -> Result<Self, HorizonError> {
        if !(mass > 0.0 && mass.is_finite()) {
            return Err(HorizonError::InvalidArgument(format!("mass must be positive, got {mass}")));
        }
        Ok(Self { mass })
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }
}

/// `r_s = 2 G M / c^2`.
pub fn schwarzschild_radius(bh: &BlackHole, consts: &PhysicalConstants) -> f64 {
    2.0 * consts.g * bh.mass / (consts.c * consts.c)
}

/// Surface gravity `kappa = c^4 / (4 G M)` (m/s^2) and `gamma = kappa / c` (1/s).
pub fn surface_gravity(bh: &BlackHole, consts: &PhysicalConstants) -> (f64, f64) {
    let kappa = consts.c.powi(4) / (4.0 * consts.g * bh.mass);
    (kappa, kappa / consts.c)
}

/// `T_H = hbar gamma / (2 pi k_B)`.
pub fn hawking_temperature(bh: &BlackHole, consts: &PhysicalConstants) -> f64 {
    let (_, gamma) = surface_gravity(bh, consts);
    consts.hbar * gamma / (2.0 * PI * consts.k_b)
}

/// Red-shift factor `V(r) = sqrt(1 - r_s / r)`.
pub fn redshift_factor(bh: &BlackHole, r: f64, consts: &PhysicalConstants) -> Result<f64, HorizonError> {
    let r_s = schwarzschild_radius(bh, consts);
    if !(r > r_s) {
        return Err(HorizonError::InsideHorizon { r, r_s });
    }
    Ok((1.0 - r_s / r).sqrt())
}

/// Acceleration of a static observer, `G M / (r^2 V(r))`.
pub fn static_acceleration(bh: &BlackHole, r: f64, consts: &PhysicalConstants) -> Result<f64, HorizonError> {
    let v = redshift_factor(bh, r, consts)?;
    Ok(consts.g * bh.mass / (r * r * v))
}

/// Temperature measured by a static observer, `T_H / V(r)`.
pub fn local_temperature(bh: &BlackHole, r: f64, consts: &PhysicalConstants) -> Result<f64, HorizonError> {
    Ok(hawking_temperature(bh, consts) / redshift_factor(bh, r, consts)?)
}

/// Bekenstein-Hawking entropy `k_B c^3 A / (4 hbar G)`, `A = 4 pi r_s^2`.
pub fn bh_entropy(bh: &BlackHole, consts: &PhysicalConstants) -> f64 {
    let r_s = schwarzschild_radius(bh, consts);
    let area = 4.0 * PI * r_s * r_s;
    consts.k_b * consts.c.powi(3) * area / (4.0 * consts.hbar * consts.g)
}

/// Power radiated into one spatial dimension, `pi k_B^2 T^2 / (12 hbar)`.
pub fn power_1d(temperature: f64, consts: &PhysicalConstants) -> f64 {
    PI * (consts.k_b * temperature).powi(2) / (12.0 * consts.hbar)
}

/// Painleve-Gullstrand in-fall velocity from rest at infinity, `c sqrt(r_s / r)`.
pub fn pg_freefall_velocity(bh: &BlackHole, r: f64, consts: &PhysicalConstants) -> Result<f64, HorizonError> {
    if !(r > 0.0) {
        return Err(HorizonError::InvalidArgument(format!("radius must be positive, got {r}")));
    }
    Ok(consts.c * (schwarzschild_radius(bh, consts) / r).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{planck_scales, CODATA_2018};

    const K: PhysicalConstants = CODATA_2018;

    #[test]
    fn rindler_hyperbola() {
        let p = AccelerationParams::from_acceleration(9.8, &K).unwrap();
        assert!((p.accel_param * p.vertex_distance / K.c - 1.0).abs() < 1e-15);
        assert_eq!(rindler_to_minkowski(0.0, &p), (0.0, p.vertex_distance));
        for tau in [-1e7, -3.0, 0.5, 1e6, 2e7] {
            let (ct, x) = rindler_to_minkowski(tau, &p);
            assert!(((x * x - ct * ct) / p.vertex_distance.powi(2) - 1.0).abs() < 1e-9);
        }
        assert!(1.0 - coordinate_velocity(20.0 / p.accel_param, &p) < 1e-15);
    }

    #[test]
    fn chirp_is_unimodular_and_halves_its_frequency() {
        let p = AccelerationParams::from_rate(2.0, &K).unwrap();
        let dt = 1e-4;
        let taus: Vec<f64> = (0..20000).map(|k| k as f64 * dt).collect();
        let w = chirped_waveform(5.0, &p, &taus);
        assert!(w.iter().all(|s| (s.norm() - 1.0).abs() < 1e-14));
        let inst = |k: usize| -((w[k + 1] / w[k - 1]).arg()) / (2.0 * dt);
        let k_half = (2f64.ln() / 2.0 / dt).round() as usize;
        assert!((inst(1) / 5.0 - 1.0).abs() < 1e-3);
        assert!((inst(k_half) / inst(1) - 0.5).abs() < 1e-3);
    }

    #[test]
    fn unruh_temperature_of_standard_gravity() {
        let p = AccelerationParams::from_acceleration(9.8, &K).unwrap();
        let t = unruh_temperature(&p, &K);
        assert!((t / 4.0e-20 - 1.0).abs() < 0.01, "{t}");
    }

    #[test]
    fn detailed_balance_limits() {
        let t = 2.0;
        let w = K.k_b * t / K.hbar;
        assert!((detailed_balance_ratio(w, t, &K).unwrap() - (-1f64).exp()).abs() < 1e-15);
        assert!(1.0 - detailed_balance_ratio(1.0, 1e12, &K).unwrap() < 1e-20);
        assert!(detailed_balance_ratio(1.0, 0.0, &K).is_err());
    }

    #[test]
    fn schwarzschild_values() {
        let sun = BlackHole::new(SOLAR_MASS).unwrap();
        assert!((schwarzschild_radius(&sun, &K) / 2.95e3 - 1.0).abs() < 2e-3);
        let mp = BlackHole::new(planck_scales(&K).mass_kg).unwrap();
        let lp = planck_scales(&K).length_m;
        assert!((schwarzschild_radius(&mp, &K) / (2.0 * lp) - 1.0).abs() < 1e-12);
        let big = BlackHole::new(2.0 * SOLAR_MASS).unwrap();
        assert!((surface_gravity(&big, &K).0 * 2.0 / surface_gravity(&sun, &K).0 - 1.0).abs() < 1e-15);
    }

    #[test]
    fn solar_hawking_temperature() {
        let t = hawking_temperature(&BlackHole::new(SOLAR_MASS).unwrap(), &K);
        assert!((t / 6.17e-8 - 1.0).abs() < 0.01, "{t}");
    }

    #[test]
    fn hawking_is_unruh_with_gamma() {
        let bh = BlackHole::new(1e12).unwrap();
        let (_, gamma) = surface_gravity(&bh, &K);
        let p = AccelerationParams::from_rate(gamma, &K).unwrap();
        assert!((unruh_temperature(&p, &K) / hawking_temperature(&bh, &K) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn static_observers() {
        let bh = BlackHole::new(SOLAR_MASS).unwrap();
        let r_s = schwarzschild_radius(&bh, &K);
        let gm = K.g * SOLAR_MASS;
        let a2 = static_acceleration(&bh, 2.0 * r_s, &K).unwrap();
        assert!((a2 / (gm / (4.0 * r_s * r_s * 0.5f64.sqrt())) - 1.0).abs() < 1e-14);
        let far = 1e9 * r_s;
        assert!((static_acceleration(&bh, far, &K).unwrap() / (gm / (far * far)) - 1.0).abs() < 1e-8);
        assert!(matches!(static_acceleration(&bh, r_s, &K), Err(HorizonError::InsideHorizon { .. })));
        assert!(local_temperature(&bh, 0.5 * r_s, &K).is_err());
        let th = hawking_temperature(&bh, &K);
        for r in [1.5 * r_s, 3.0 * r_s, 1e3 * r_s] {
            let v = redshift_factor(&bh, r, &K).unwrap();
            assert!((local_temperature(&bh, r, &K).unwrap() * v / th - 1.0).abs() < 1e-15);
        }
        assert!((local_temperature(&bh, 1e6 * r_s, &K).unwrap() / th - 1.0).abs() < 1e-6);
    }

    #[test]
    fn freefall_velocity() {
        let bh = BlackHole::new(10.0 * SOLAR_MASS).unwrap();
        let r_s = schwarzschild_radius(&bh, &K);
        assert!((pg_freefall_velocity(&bh, r_s, &K).unwrap() / K.c - 1.0).abs() < 1e-15);
        assert!((pg_freefall_velocity(&bh, 4.0 * r_s, &K).unwrap() / (0.5 * K.c) - 1.0).abs() < 1e-15);
        assert!(pg_freefall_velocity(&bh, 1e20 * r_s, &K).unwrap() < 1e-1);
    }

    #[test]
    fn one_dimensional_power() {
        assert_eq!(power_1d(0.0, &K), 0.0);
        assert!((power_1d(2.0, &K) / power_1d(1.0, &K) - 4.0).abs() < 1e-14);
    }
}
