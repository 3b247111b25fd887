//! Classical parametric amplification of a swing.

use num_complex::Complex64 as C64;

use super::{evolve_from, FrequencyProfile, ModeOdeError, Oscillator};
use crate::constants::STANDARD_GRAVITY;

/// `omega_s = sqrt(g / l)`.
pub fn swing_frequency(l: f64) -> f64 {
    (STANDARD_GRAVITY / l).sqrt()
}

/// Unmodulated small-angle pendulum,
/// `theta(0) cos(omega_s t) + L(0) / (m omega_s l) sin(omega_s t)`.
pub fn simple_pendulum(theta0: f64, l0: f64, m: f64, l: f64, t: f64) -> f64 {
    parametric_swing(theta0, l0, m, l, 0.0, t)
}

/// Swing whose frequency is modulated at twice its natural frequency,
/// `omega_s(t) = omega_s + epsilon sin(2 omega_s t)`: the in-phase amplitude
/// grows as `e^{epsilon t / 2}` and the quadrature decays.
pub fn parametric_swing(theta0: f64, l0: f64, m: f64, l: f64, epsilon: f64, t: f64) -> f64 {
    let ws = swing_frequency(l);
    let g = (0.5 * epsilon * t).exp();
    theta0 * g * (ws * t).cos() + l0 / (m * ws * l) / g * (ws * t).sin()
}

/// Direct integration of `theta'' + omega_s(t)^2 theta = 0` with the same
/// modulation and initial data as [`parametric_swing`]; the initial rate is
/// `L(0) / (m l)` so that both agree at `epsilon = 0`. Valid for
/// `epsilon << omega_s`, where the averaged formula applies.
pub fn modulated_pendulum(theta0: f64, l0: f64, m: f64, l: f64, epsilon: f64, t: f64, tol: f64) -> Result<f64, ModeOdeError> {
    if !(m > 0.0 && l > 0.0) {
        return Err(ModeOdeError::InvalidArgument(format!("need m > 0 and l > 0 (m = {m}, l = {l})")));
    }
    if t == 0.0 {
        return Ok(theta0);
    }
    let ws = swing_frequency(l);
    let profile = FrequencyProfile::SinusoidalPump { omega0: ws, depth: epsilon / ws, pump_frequency: 2.0 * ws };
    let traj = evolve_from(&profile, 0.0, t, C64::new(theta0, 0.0), C64::new(l0 / (m * l), 0.0), &Oscillator::unit(), tol)?;
    Ok(traj.last().1.re)
}
