//! dc-SQUID array transmission line as an analogue black hole.
//!
//! Each cell of the array is a SQUID inductor `L(I, Phi_ext)` with
//! capacitance `C0` to ground, so the local speed of light is
//! `c_s = dx / sqrt(L C0)`. A flux pulse moving at `u` slows the line
//! behind its edge; in the frame comoving with the pulse a horizon sits where
//! `c_s(x) = u` and radiates at `T_H = hbar |dc_s/dx| / (2 pi k_B)`.
//!
//! Fluxes are given as fractions of the flux quantum `Phi_0`. The profile is
//! evaluated at the linear operating point `I = 0`.

use std::f64::consts::PI;

use thiserror::Error;

use crate::constants::PhysicalConstants;
use crate::horizon::{power_1d, SpectrumSeries, Window};
use crate::numerics::bisect;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SquidError {
    #[error("SQUID critical current vanishes at flux {flux_phi0} Phi_0")]
    SuppressedJunction { flux_phi0: f64 },
    #[error("current {current:e} A reaches the critical current {critical:e} A")]
    OverCritical { current: f64, critical: f64 },
    #[error("no horizon: pulse velocity {velocity:e} m/s outside the profile range ({c_min:e}, {c_max:e}) m/s")]
    NoHorizon { velocity: f64, c_min: f64, c_max: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Circuit parameters of one array cell (SI units).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SquidParams {
    pub junction_critical_current: f64,
    pub junction_capacitance: f64,
    pub ground_capacitance: f64,
    pub cell_spacing: f64,
    /// Inductance per unit length of the waveguide the SQUID terminates.
    pub waveguide_inductance_per_length: f64,
}

impl SquidParams {
    pub fn new(
        junction_critical_current: f64,
        junction_capacitance: f64,
        ground_capacitance: f64,
        cell_spacing: f64,
        waveguide_inductance_per_length: f64,
    ) -> Result<Self, SquidError> {
        let p = Self {
            junction_critical_current,
            junction_capacitance,
            ground_capacitance,
            cell_spacing,
            waveguide_inductance_per_length,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), SquidError> {
        let fields = [
            ("junction_critical_current", self.junction_critical_current),
            ("junction_capacitance", self.junction_capacitance),
            ("ground_capacitance", self.ground_capacitance),
            ("cell_spacing", self.cell_spacing),
            ("waveguide_inductance_per_length", self.waveguide_inductance_per_length),
        ];
        for (name, v) in fields {
            if !(v > 0.0 && v.is_finite()) {
                return Err(SquidError::InvalidParameter(format!("{name} must be positive, got {v}")));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PulseShape {
    None,
    TanhStep,
}

/// Flux pulse `Phi(x) = (amplitude / 2) [1 + tanh(steepness x)]` in the
/// comoving coordinate `x`, moving along the array at `velocity`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FluxPulse {
    pub shape: PulseShape,
    /// Plateau flux in units of `Phi_0`, in `[0, 1/2)`.
    pub amplitude_phi0: f64,
    pub velocity: f64,
    /// Inverse edge width, 1/m.
    pub steepness: f64,
}

impl FluxPulse {
    pub fn tanh_step(amplitude_phi0: f64, velocity: f64, steepness: f64) -> Result<Self, SquidError> {
        let p = Self { shape: PulseShape::TanhStep, amplitude_phi0, velocity, steepness };
        p.validate()?;
        Ok(p)
    }

    /// No flux anywhere; the line is uniform.
    pub fn none(velocity: f64) -> Self {
        Self { shape: PulseShape::None, amplitude_phi0: 0.0, velocity, steepness: 1.0 }
    }

    pub fn validate(&self) -> Result<(), SquidError> {
        if !(0.0..0.5).contains(&self.amplitude_phi0) {
            return Err(SquidError::InvalidParameter(format!(
                "amplitude must lie in [0, 0.5) Phi_0, got {}",
                self.amplitude_phi0
            )));
        }
        if !(self.steepness > 0.0 && self.steepness.is_finite()) {
            return Err(SquidError::InvalidParameter(format!("steepness must be positive, got {}", self.steepness)));
        }
        if !self.velocity.is_finite() {
            return Err(SquidError::InvalidParameter(format!("velocity must be finite, got {}", self.velocity)));
        }
        Ok(())
    }

    /// Flux at `x` in units of `Phi_0`.
    pub fn flux(&self, x: f64) -> f64 {
        match self.shape {
            PulseShape::None => 0.0,
            PulseShape::TanhStep => 0.5 * self.amplitude_phi0 * (1.0 + (self.steepness * x).tanh()),
        }
    }

    /// `dPhi/dx` in `Phi_0` per metre.
    pub fn flux_gradient(&self, x: f64) -> f64 {
        match self.shape {
            PulseShape::None => 0.0,
            PulseShape::TanhStep => {
                let sech = (self.steepness * x).cosh().recip();
                0.5 * self.amplitude_phi0 * self.steepness * sech * sech
            }
        }
    }

    /// Largest flux reached anywhere on the profile.
    pub fn max_flux(&self) -> f64 {
        match self.shape {
            PulseShape::None => 0.0,
            PulseShape::TanhStep => self.amplitude_phi0,
        }
    }
}

/// `I_c^s = 2 I_c cos(pi Phi / Phi_0)`.
pub fn squid_critical_current(i_c: f64, flux_phi0: f64) -> Result<f64, SquidError> {
    let ics = 2.0 * i_c * (PI * flux_phi0).cos();
    if !(ics > 1e-12 * i_c.abs()) {
        return Err(SquidError::SuppressedJunction { flux_phi0 });
    }
    Ok(ics)
}

/// `L = [Phi_0 / (2 pi I_c^s)] arcsin(I / I_c^s) / (I / I_c^s)`.
pub fn squid_inductance(current: f64, i_c_s: f64, consts: &PhysicalConstants) -> Result<f64, SquidError> {
    if !(i_c_s > 0.0) {
        return Err(SquidError::InvalidParameter(format!("critical current must be positive, got {i_c_s}")));
    }
    let x = current / i_c_s;
    if x.abs() >= 1.0 {
        return Err(SquidError::OverCritical { current, critical: i_c_s });
    }
    let shape = if x.abs() < 1e-8 { 1.0 + x * x / 6.0 } else { x.asin() / x };
    Ok(consts.flux_quantum / (2.0 * PI * i_c_s) * shape)
}

/// `omega_p^s = sqrt(2 pi I_c^s / (2 C_J Phi_0))`.
pub fn plasma_frequency(i_c_s: f64, c_j: f64, consts: &PhysicalConstants) -> f64 {
    (2.0 * PI * i_c_s / (2.0 * c_j * consts.flux_quantum)).sqrt()
}

fn zero_current_inductance(params: &SquidParams, flux_phi0: f64, consts: &PhysicalConstants) -> Result<f64, SquidError> {
    squid_inductance(0.0, squid_critical_current(params.junction_critical_current, flux_phi0)?, consts)
}

/// `c_s(x) = dx / sqrt(L[Phi(x)] C0)`.
pub fn speed_of_light_profile(
    params: &SquidParams,
    pulse: &FluxPulse,
    x: f64,
    consts: &PhysicalConstants,
) -> Result<f64, SquidError> {
    let l = zero_current_inductance(params, pulse.flux(x), consts)?;
    Ok(params.cell_spacing / (l * params.ground_capacitance).sqrt())
}

/// `dc_s/dx`. At `I = 0`, `c_s` is proportional to `sqrt(cos(pi Phi))`, so
/// `dc_s/dx = -(pi / 2) tan(pi Phi) dPhi/dx c_s`.
pub fn speed_gradient(params: &SquidParams, pulse: &FluxPulse, x: f64, consts: &PhysicalConstants) -> Result<f64, SquidError> {
    let c = speed_of_light_profile(params, pulse, x, consts)?;
    Ok(-0.5 * PI * (PI * pulse.flux(x)).tan() * pulse.flux_gradient(x) * c)
}

/// Central difference of [`speed_of_light_profile`] with a step set by the
/// edge width.
pub fn speed_gradient_fd(params: &SquidParams, pulse: &FluxPulse, x: f64, consts: &PhysicalConstants) -> Result<f64, SquidError> {
    let h = 1e-4 / pulse.steepness;
    let hi = speed_of_light_profile(params, pulse, x + h, consts)?;
    let lo = speed_of_light_profile(params, pulse, x - h, consts)?;
    Ok((hi - lo) / (2.0 * h))
}

/// Comoving-frame metric `ds^2 = g_tt dtau^2 + 2 g_tx dx dtau + g_xx dx^2`
/// with `g_tt = -(c_s^2 - u^2)`, `g_tx = u`, `g_xx = 1`.
pub fn effective_metric(
    params: &SquidParams,
    pulse: &FluxPulse,
    x: f64,
    consts: &PhysicalConstants,
) -> Result<(f64, f64, f64), SquidError> {
    let c = speed_of_light_profile(params, pulse, x, consts)?;
    let u = pulse.velocity;
    Ok((-(c * c - u * u), u, 1.0))
}

/// Horizon found on a pulse edge.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HorizonReport {
    /// Comoving position of the horizon, m.
    pub position: f64,
    /// `|dc_s/dx|` at the horizon (analytic), 1/s.
    pub gradient: f64,
    /// Same gradient by central differences.
    pub gradient_fd: f64,
    pub temperature: f64,
    /// One-dimensional emitted power at `temperature`, W.
    pub power: f64,
    /// Largest `|dc_s/dx|` along the profile, the frequency scale of the edge.
    pub max_frequency_scale: f64,
    /// `min(omega_p^s, c_s / dx)` along the profile.
    pub cutoff_frequency: f64,
    /// True when `max_frequency_scale <= cutoff_frequency / 10`, the regime
    /// where the lumped-inductor model holds.
    pub valid: bool,
}

fn profile_range(params: &SquidParams, pulse: &FluxPulse, consts: &PhysicalConstants) -> Result<(f64, f64), SquidError> {
    let l0 = zero_current_inductance(params, 0.0, consts)?;
    let l1 = zero_current_inductance(params, pulse.max_flux(), consts)?;
    let c = |l: f64| params.cell_spacing / (l * params.ground_capacitance).sqrt();
    Ok((c(l1), c(l0)))
}

/// Locates `c_s(x) = u` by bisection (relative accuracy `1e-10` in `c_s`),
/// then evaluates the gradient, temperature and power there.
pub fn find_horizon(params: &SquidParams, pulse: &FluxPulse, consts: &PhysicalConstants) -> Result<HorizonReport, SquidError> {
    params.validate()?;
    pulse.validate()?;
    let u = pulse.velocity;
    if !(u > 0.0) {
        return Err(SquidError::InvalidParameter(format!("pulse velocity must be positive, got {u}")));
    }
    let (c_min, c_max) = profile_range(params, pulse, consts)?;
    if !(u > c_min && u < c_max) {
        return Err(SquidError::NoHorizon { velocity: u, c_min, c_max });
    }
    let k = pulse.steepness;
    let f = |x: f64| speed_of_light_profile(params, pulse, x, consts).map(|c| c - u).unwrap_or(f64::NAN);
    let mut half = 1.0 / k;
    while f(-half) <= 0.0 || f(half) >= 0.0 {
        half *= 2.0;
        if half * k > 1e3 {
            return Err(SquidError::NoHorizon { velocity: u, c_min, c_max });
        }
    }
    let x_h = bisect(f, -half, half, 1e-14 * half).ok_or(SquidError::NoHorizon { velocity: u, c_min, c_max })?;
    let c_h = speed_of_light_profile(params, pulse, x_h, consts)?;
    if (c_h - u).abs() / u >= 1e-10 {
        return Err(SquidError::InvalidParameter(format!(
            "horizon root not converged: |c_s - u| / u = {:e}",
            (c_h - u).abs() / u
        )));
    }
    let gradient = speed_gradient(params, pulse, x_h, consts)?.abs();
    let gradient_fd = speed_gradient_fd(params, pulse, x_h, consts)?.abs();
    let temperature = consts.hbar * gradient / (2.0 * PI * consts.k_b);

    let mut max_frequency_scale: f64 = 0.0;
    for j in 0..=4000 {
        let x = (-10.0 + 20.0 * j as f64 / 4000.0) / k;
        max_frequency_scale = max_frequency_scale.max(speed_gradient(params, pulse, x, consts)?.abs());
    }
    let i_min = squid_critical_current(params.junction_critical_current, pulse.max_flux())?;
    let cutoff_frequency = plasma_frequency(i_min, params.junction_capacitance, consts).min(c_min / params.cell_spacing);
    Ok(HorizonReport {
        position: x_h,
        gradient,
        gradient_fd,
        temperature,
        power: power_1d(temperature, consts),
        max_frequency_scale,
        cutoff_frequency,
        valid: max_frequency_scale <= 0.1 * cutoff_frequency,
    })
}

/// `T_H = hbar |dc_s/dx| / (2 pi k_B)` at the horizon.
pub fn analogue_hawking_temperature(
    params: &SquidParams,
    pulse: &FluxPulse,
    consts: &PhysicalConstants,
) -> Result<f64, SquidError> {
    Ok(find_horizon(params, pulse, consts)?.temperature)
}

/// Bose occupancy `1 / (e^{hbar omega / k_B T} - 1)`.
pub fn planck_occupancy(omega: f64, temperature: f64, consts: &PhysicalConstants) -> f64 {
    (consts.hbar * omega / (consts.k_b * temperature)).exp_m1().recip()
}

/// Emitted one-dimensional spectrum: `power[i]` is the spectral power
/// density `hbar omega n(omega) / 2 pi` (W per rad/s), which integrates to
/// [`power_1d`].
pub fn analogue_spectrum(temperature: f64, omega_grid: &[f64], consts: &PhysicalConstants) -> Result<SpectrumSeries, SquidError> {
    if !(temperature > 0.0) {
        return Err(SquidError::InvalidParameter(format!("temperature must be positive, got {temperature}")));
    }
    if omega_grid.iter().any(|&w| !(w > 0.0)) || omega_grid.windows(2).any(|p| p[1] <= p[0]) {
        return Err(SquidError::InvalidParameter("frequency grid must be positive and increasing".into()));
    }
    let power = omega_grid.iter().map(|&w| consts.hbar * w * planck_occupancy(w, temperature, consts) / (2.0 * PI)).collect();
    Ok(SpectrumSeries {
        frequencies: omega_grid.to_vec(),
        power,
        window: Window::Rectangular,
        fitted_temperature: None,
        fit_residual: None,
        insufficient_window: false,
    })
}

/// Effective distance `L / L0` of the mirror imposed by a SQUID termination.
pub fn squid_effective_length(inductance: f64, l0_per_length: f64) -> Result<f64, SquidError> {
    if !(inductance > 0.0 && l0_per_length > 0.0) {
        return Err(SquidError::InvalidParameter(format!(
            "inductance and L0 must be positive (got {inductance}, {l0_per_length})"
        )));
    }
    Ok(inductance / l0_per_length)
}

/// Electrical length of a SQUID-array resonator of length `length` whose
/// inductance per length has moved from `l_rest` to `l_now`:
/// `length sqrt(l_rest / l_now)`.
pub fn array_effective_length(length: f64, l_rest: f64, l_now: f64) -> Result<f64, SquidError> {
    if !(length > 0.0 && l_rest > 0.0 && l_now > 0.0) {
        return Err(SquidError::InvalidParameter("length and inductances must be positive".into()));
    }
    Ok(length * (l_rest / l_now).sqrt())
}

/// Reference parameter set for the analogue horizon, chosen so that the
/// steepest part of the pulse edge sits just below a tenth of the plasma
/// frequency: `I_c = 3.3 uA`, `C_J = 10 fF`, `C0 = 5 fF`, `dx = 1 um`,
/// `L0 = 4.2e-7 H/m`, a `0.2 Phi_0` tanh step with steepness `7.5e5 /m`
/// moving at `0.95 c_s(0)`.
pub fn reference_set(consts: &PhysicalConstants) -> (SquidParams, FluxPulse) {
    let params = SquidParams {
        junction_critical_current: 3.3e-6,
        junction_capacitance: 10e-15,
        ground_capacitance: 5e-15,
        cell_spacing: 1e-6,
        waveguide_inductance_per_length: 4.2e-7,
    };
    let c0 = speed_of_light_profile(&params, &FluxPulse::none(0.0), 0.0, consts).unwrap_or(f64::NAN);
    let pulse = FluxPulse { shape: PulseShape::TanhStep, amplitude_phi0: 0.2, velocity: 0.95 * c0, steepness: 7.5e5 };
    (params, pulse)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::CODATA_2018;

    const C: PhysicalConstants = CODATA_2018;

    #[test]
    fn critical_current_examples() {
        assert_eq!(squid_critical_current(1e-6, 0.0).unwrap(), 2e-6);
        assert!(matches!(squid_critical_current(1e-6, 0.5), Err(SquidError::SuppressedJunction { .. })));
        let r = squid_critical_current(1.0, 0.2).unwrap();
        assert!((r - 2.0 * (0.2 * PI).cos()).abs() < 1e-15);
        assert!((r - 1.618_034).abs() < 1e-6);
    }

    #[test]
    fn inductance_limits_and_monotonicity() {
        let ics = 2e-6;
        let l0 = C.flux_quantum / (2.0 * PI * ics);
        assert_eq!(squid_inductance(0.0, ics, &C).unwrap(), l0);
        let near = squid_inductance(ics * (1.0 - 1e-12), ics, &C).unwrap();
        assert!((near / (0.5 * PI * l0) - 1.0).abs() < 1e-5);
        assert!(matches!(squid_inductance(ics, ics, &C), Err(SquidError::OverCritical { .. })));
        let mut prev = 0.0;
        for j in 1..1000 {
            let l = squid_inductance(ics * j as f64 / 1000.0, ics, &C).unwrap();
            assert!(l > prev);
            prev = l;
        }
    }

    #[test]
    fn plasma_frequency_scaling() {
        let w = plasma_frequency(1e-6, 1e-14, &C);
        assert!((plasma_frequency(4e-6, 1e-14, &C) / w - 2.0).abs() < 1e-14);
        let ic = 3.0e-6;
        let ratio = plasma_frequency(squid_critical_current(ic, 0.2).unwrap(), 1e-14, &C)
            / plasma_frequency(squid_critical_current(ic, 0.0).unwrap(), 1e-14, &C);
        assert!((ratio - (0.2 * PI).cos().sqrt()).abs() < 1e-14);
    }

    #[test]
    fn profile_limits() {
        let (p, pulse) = reference_set(&C);
        let flat = FluxPulse::none(1.0);
        let c0 = speed_of_light_profile(&p, &flat, 0.0, &C).unwrap();
        for x in [-1.0, 0.0, 3e-3] {
            assert_eq!(speed_of_light_profile(&p, &flat, x, &C).unwrap(), c0);
        }
        let zero = FluxPulse { amplitude_phi0: 0.0, ..pulse };
        assert_eq!(speed_of_light_profile(&p, &zero, 1e-6, &C).unwrap(), c0);
        let deep = speed_of_light_profile(&p, &pulse, 1e-3, &C).unwrap();
        assert!((deep / c0 - (0.2 * PI).cos().sqrt()).abs() < 1e-12);
        assert!(((0.2 * PI).cos().sqrt() - 0.9).abs() < 0.01);
        let mut prev = f64::INFINITY;
        for j in 0..200 {
            let c = speed_of_light_profile(&p, &pulse, (-20.0 + 0.2 * j as f64) / pulse.steepness, &C).unwrap();
            assert!(c <= prev);
            prev = c;
        }
    }

    #[test]
    fn metric_vanishes_at_horizon() {
        let (p, pulse) = reference_set(&C);
        let h = find_horizon(&p, &pulse, &C).unwrap();
        let (gtt, gtx, gxx) = effective_metric(&p, &pulse, h.position, &C).unwrap();
        assert!(gtt.abs() < 1e-9 * pulse.velocity.powi(2));
        assert_eq!((gtx, gxx), (pulse.velocity, 1.0));
        let still = FluxPulse { velocity: 0.0, ..pulse };
        assert_eq!(effective_metric(&p, &still, 0.0, &C).unwrap().1, 0.0);
    }

    #[test]
    fn effective_lengths() {
        assert_eq!(squid_effective_length(2.0, 4.0).unwrap() * 2.0, squid_effective_length(4.0, 4.0).unwrap());
        let ic = 3e-6;
        let l = |f| squid_inductance(0.0, squid_critical_current(ic, f).unwrap(), &C).unwrap();
        let ratio = squid_effective_length(l(0.2), 1e-6).unwrap() / squid_effective_length(l(0.0), 1e-6).unwrap();
        assert!((ratio * (0.2 * PI).cos() - 1.0).abs() < 1e-14);
        assert_eq!(array_effective_length(2.0, 1.0, 4.0).unwrap(), 1.0);
    }

    #[test]
    fn occupancy_at_thermal_energy() {
        let t = 0.12;
        let w = C.k_b * t / C.hbar;
        assert!((planck_occupancy(w, t, &C) - 1.0 / (std::f64::consts::E - 1.0)).abs() < 1e-12);
    }
}
