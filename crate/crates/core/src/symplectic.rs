//! Bogoliubov transformations and the statistics of squeezed states.
//!
//! A [`BogoliubovMap`] stores the coefficients of `f_out = alpha f_in + beta
//! conj(f_in)` for mode functions, equivalently `a_out = alpha a_in -
//! conj(beta) a_in^dagger` for ladder operators. Starting from the input
//! vacuum the output holds `|beta|^2` quanta.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64 as C64;
use thiserror::Error;

use crate::constants::PhysicalConstants;

pub const DEFAULT_SYMPLECTIC_TOL: f64 = 1e-9;
pub const DEFAULT_TAIL_TOL: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SymplecticError {
    #[error("symplectic constraint violated: ||alpha|^2 - |beta|^2 - 1| = {residual:e} exceeds {tol:e}")]
    SymplecticViolation { residual: f64, tol: f64 },
    #[error("tolerance must be positive (got {0})")]
    InvalidTolerance(f64),
    #[error("zero squeezing has zero effective temperature")]
    ZeroSqueezing,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// Validated Bogoliubov coefficient pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BogoliubovMap {
    alpha: C64,
    beta: C64,
    tol: f64,
}

/// `| |alpha|^2 - |beta|^2 - 1 |`.
pub fn symplectic_residual(alpha: C64, beta: C64) -> f64 {
    (alpha.norm_sqr() - beta.norm_sqr() - 1.0).abs()
}

pub fn make_bogoliubov(alpha: C64, beta: C64, tol: f64) -> Result<BogoliubovMap, SymplecticError> {
    if !(tol > 0.0) {
        return Err(SymplecticError::InvalidTolerance(tol));
    }
    // Large squeezing loses absolute precision in the difference; measure the
    // residual against |alpha|^2 once it exceeds one.
    let residual = symplectic_residual(alpha, beta) / alpha.norm_sqr().max(1.0);
    if !(residual <= tol) {
        return Err(SymplecticError::SymplecticViolation { residual, tol });
    }
    Ok(BogoliubovMap { alpha, beta, tol })
}

impl BogoliubovMap {
    pub fn identity() -> Self {
        Self { alpha: C64::new(1.0, 0.0), beta: C64::new(0.0, 0.0), tol: DEFAULT_SYMPLECTIC_TOL }
    }

    pub fn new(alpha: C64, beta: C64) -> Result<Self, SymplecticError> {
        make_bogoliubov(alpha, beta, DEFAULT_SYMPLECTIC_TOL)
    }

    /// Canonical single-mode squeeze: `alpha = cosh r` real, the phase on beta.
    pub fn squeeze(spec: SqueezeSpec) -> Self {
        Self {
            alpha: C64::new(spec.r.cosh(), 0.0),
            beta: C64::from_polar(spec.r.sinh(), spec.phase),
            tol: DEFAULT_SYMPLECTIC_TOL,
        }
    }

    pub fn alpha(&self) -> C64 {
        self.alpha
    }

    pub fn beta(&self) -> C64 {
        self.beta
    }

    pub fn tolerance(&self) -> f64 {
        self.tol
    }

    pub fn residual(&self) -> f64 {
        symplectic_residual(self.alpha, self.beta)
    }

    pub fn inverse(&self) -> Self {
        Self { alpha: self.alpha.conj(), beta: -self.beta, tol: self.tol }
    }

    pub fn mean_photon_number(&self) -> f64 {
        mean_photon_number(self)
    }
}

/// Map of applying `first` and then `second`.
///
/// In the mode-function basis `(f, conj f)` a map acts as the matrix
/// `[[alpha, beta], [conj beta, conj alpha]]`; composition is the product
/// `second * first`.
pub fn compose(first: &BogoliubovMap, second: &BogoliubovMap) -> Result<BogoliubovMap, SymplecticError> {
    let alpha = second.alpha * first.alpha + second.beta * first.beta.conj();
    let beta = second.alpha * first.beta + second.beta * first.alpha.conj();
    let tol = 10.0 * first.tol.max(second.tol);
    make_bogoliubov(alpha, beta, tol)
}

pub fn mean_photon_number(map: &BogoliubovMap) -> f64 {
    map.beta.norm_sqr()
}

/// Squeezing parameter with its phase folded into `[0, 2 pi)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SqueezeSpec {
    pub r: f64,
    pub phase: f64,
}

impl SqueezeSpec {
    pub fn new(r: f64, phase: f64) -> Result<Self, SymplecticError> {
        if !(r >= 0.0 && r.is_finite()) {
            return Err(SymplecticError::InvalidArgument(format!("squeezing r must be >= 0, got {r}")));
        }
        Ok(Self { r, phase: phase.rem_euclid(TAU) })
    }
}

/// Degenerate parametric amplifier after time `t`:
/// `alpha = cosh(2 eta t)`, `beta = sinh(2 eta t)`.
pub fn dpa_evolution(eta: f64, t: f64) -> BogoliubovMap {
    let x = 2.0 * eta * t;
    BogoliubovMap { alpha: C64::new(x.cosh(), 0.0), beta: C64::new(x.sinh(), 0.0), tol: DEFAULT_SYMPLECTIC_TOL }
}

/// Non-degenerate amplifier: the signal/idler pair map with
/// `alpha = cosh(eta t)`, `beta = sinh(eta t)`. Each mode ends with
/// `sinh^2(eta t)` quanta.
pub fn ndpa_evolution(eta: f64, t: f64) -> BogoliubovMap {
    let x = eta * t;
    BogoliubovMap { alpha: C64::new(x.cosh(), 0.0), beta: C64::new(x.sinh(), 0.0), tol: DEFAULT_SYMPLECTIC_TOL }
}

/// Photon numbers `(N_signal, N_idler)` of the NDPA from vacuum.
pub fn ndpa_photon_numbers(eta: f64, t: f64) -> (f64, f64) {
    let n = mean_photon_number(&ndpa_evolution(eta, t));
    (n, n)
}

/// Quadrature variances `(<X1^2>, <X2^2>)` of the DPA output for vacuum input
/// with `<X^2> = 1`.
pub fn quadrature_variances(eta: f64, t: f64) -> (f64, f64) {
    let x = 4.0 * eta * t;
    (x.exp(), (-x).exp())
}

/// Power ratio in decibels, `10 log10(p1 / p2)`.
pub fn decibels(p1: f64, p2: f64) -> f64 {
    10.0 * (p1 / p2).log10()
}

/// Two-mode squeezed state `sum_n c_n |n, n>` truncated in Fock space.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoModeState {
    pub r: f64,
    pub mode_frequency: Option<f64>,
    pub fock_amplitudes: Vec<f64>,
    /// Probability carried by the discarded levels `n > n_max`.
    pub truncation_error: f64,
}

/// Fock amplitudes `c_n = tanh^n(r) / cosh(r)`, kept up to the first `n_max`
/// whose discarded tail probability `tanh^(2 (n_max + 1))(r)` drops below
/// `tail_tol`.
pub fn two_mode_amplitudes(r: f64, tail_tol: f64) -> Result<TwoModeState, SymplecticError> {
    if !(r >= 0.0 && r.is_finite()) {
        return Err(SymplecticError::InvalidArgument(format!("squeezing r must be >= 0, got {r}")));
    }
    if !(tail_tol > 0.0 && tail_tol < 1.0) {
        return Err(SymplecticError::InvalidTolerance(tail_tol));
    }
    let t = r.tanh();
    let t2 = t * t;
    let c0 = 1.0 / r.cosh();
    let mut amps = vec![c0];
    let mut tail = t2;
    let mut c = c0;
    while tail >= tail_tol {
        c *= t;
        amps.push(c);
        tail *= t2;
    }
    Ok(TwoModeState { r, mode_frequency: None, fock_amplitudes: amps, truncation_error: tail })
}

/// Temperature `T` of the reduced single-mode state, from
/// `tanh^2 r = exp(-hbar omega_s / k_B T)`.
pub fn invert_effective_temperature(r: f64, omega_s: f64, consts: &PhysicalConstants) -> Result<f64, SymplecticError> {
    if r == 0.0 {
        return Err(SymplecticError::ZeroSqueezing);
    }
    if !(r > 0.0) || !(omega_s > 0.0) {
        return Err(SymplecticError::InvalidArgument(format!("need r > 0 and omega_s > 0 (r = {r}, omega_s = {omega_s})")));
    }
    let x = -2.0 * r.tanh().ln();
    Ok(consts.hbar * omega_s / (consts.k_b * x))
}

/// Von Neumann entropy (nats) of one half of a two-mode squeezed state,
/// written as the thermal entropy of an oscillator at the effective
/// temperature: `S = -ln(1 - e^{-x}) + x / (e^x - 1)`, `x = hbar w / k_B T`.
pub fn entanglement_entropy(r: f64, omega_s: f64, consts: &PhysicalConstants) -> Result<f64, SymplecticError> {
    if r == 0.0 {
        return Ok(0.0);
    }
    let temp = invert_effective_temperature(r, omega_s, consts)?;
    let x = consts.hbar * omega_s / (consts.k_b * temp);
    Ok(-(-(-x).exp_m1()).ln() + x / x.exp_m1())
}

/// Effective squeezing of the Unruh-basis transformation,
/// `r = artanh(exp(-pi omega / alpha))` with `alpha = a / c`.
pub fn unruh_squeezing(omega: f64, accel_param: f64) -> Result<f64, SymplecticError> {
    if !(omega > 0.0) || !(accel_param >= 0.0) {
        return Err(SymplecticError::InvalidArgument(format!(
            "need omega > 0 and accel_param >= 0 (omega = {omega}, accel_param = {accel_param})"
        )));
    }
    if accel_param == 0.0 {
        return Ok(0.0);
    }
    Ok((-PI * omega / accel_param).exp().atanh())
}
