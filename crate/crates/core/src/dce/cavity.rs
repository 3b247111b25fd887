//! Cavity modes and their Bogoliubov matrices.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;

use super::{DceError, MirrorTrajectory, RFunction};
use crate::numerics::composite_gauss_legendre;

/// `phi_n(x, t) = (4 pi n)^{-1/2} [e^{-i pi n R(t + x)} - e^{-i pi n R(t - x)}]`.
pub fn cavity_mode(r: &RFunction, n: usize, x: f64, t: f64) -> Result<C64, DceError> {
    if n == 0 {
        return Err(DceError::InvalidArgument("mode index starts at 1".into()));
    }
    let k = PI * n as f64;
    let c = (4.0 * k).sqrt().recip();
    let plus = C64::from_polar(1.0, -k * r.eval(t + x)?);
    let minus = C64::from_polar(1.0, -k * r.eval(t - x)?);
    Ok((plus - minus) * c)
}

/// Time derivative of [`cavity_mode`].
pub fn cavity_mode_dt(r: &RFunction, n: usize, x: f64, t: f64) -> Result<C64, DceError> {
    if n == 0 {
        return Err(DceError::InvalidArgument("mode index starts at 1".into()));
    }
    let k = PI * n as f64;
    let c = (4.0 * k).sqrt().recip();
    let (rp, dp) = r.eval_with_slope(t + x)?;
    let (rm, dm) = r.eval_with_slope(t - x)?;
    let e = C64::new(0.0, -k);
    Ok((C64::from_polar(dp, -k * rp) - C64::from_polar(dm, -k * rm)) * e * c)
}

/// Static cavity mode `psi_m = i (pi m)^{-1/2} sin(omega_m x) e^{-i omega_m t}`
/// and its time derivative.
pub fn static_mode(m: usize, z0: f64, x: f64, t: f64) -> (C64, C64) {
    let w = PI * m as f64 / z0;
    let psi = C64::new(0.0, (PI * m as f64).sqrt().recip() * (w * x).sin()) * C64::from_polar(1.0, -w * t);
    (psi, psi * C64::new(0.0, -w))
}

/// `alpha[n][m]` and `beta[n][m]` (0-based storage of 1-based indices) with
/// `phi_n = sum_m (alpha_nm psi_m + beta_nm conj psi_m)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BogoliubovMatrices {
    pub alpha: Vec<Vec<C64>>,
    pub beta: Vec<Vec<C64>>,
    pub evaluation_time: f64,
    /// `sum_n (|alpha_nm|^2 - |beta_nm|^2) - 1` for every `m`; the truncation
    /// at `n_max` shows up here.
    pub unitarity_residual: Vec<f64>,
}

impl BogoliubovMatrices {
    pub fn n_max(&self) -> usize {
        self.alpha.len()
    }
}

/// Projects the modes generated by `r` onto the static cavity modes at time
/// `t` with the field Klein-Gordon product
/// `<f, g> = i integral_0^z0 (conj f dg/dt - g d(conj f)/dt) dx`:
/// `alpha_nm = <psi_m, phi_n>`, `beta_nm = conj <psi_m, conj phi_n>`.
///
/// The quadrature uses `points_per_half_wave` Gauss-Legendre nodes per half
/// wavelength of the fastest local oscillation, `pi n_max max R'`.
/// Unitarity of rows `m <= n_max / 2` is enforced to `1e-3`.
pub fn dce_bogoliubov(
    r: &RFunction,
    traj: &MirrorTrajectory,
    t: f64,
    n_max: usize,
    points_per_half_wave: usize,
) -> Result<BogoliubovMatrices, DceError> {
    if n_max == 0 || points_per_half_wave == 0 {
        return Err(DceError::InvalidArgument("n_max and points_per_half_wave must be positive".into()));
    }
    if !traj.static_from(t) {
        return Err(DceError::InvalidArgument(format!("mirror is still moving at t = {t}")));
    }
    let z0 = r.z0;
    // sample R' to size the quadrature
    let mut slope_max: f64 = 1.0 / z0;
    for k in 0..=512 {
        let u = t - z0 + 2.0 * z0 * k as f64 / 512.0;
        slope_max = slope_max.max(r.eval_with_slope(u)?.1);
    }
    let half_waves = (n_max as f64 * slope_max * z0).ceil() as usize;
    let order = points_per_half_wave.min(64);
    let panels = (half_waves * points_per_half_wave).div_ceil(order).max(1);
    let (xs, ws) = composite_gauss_legendre(0.0, z0, panels, order);

    // e^{-i pi R(t +- x)} and R'(t +- x) at the nodes
    let mut ep = Vec::with_capacity(xs.len());
    let mut em = Vec::with_capacity(xs.len());
    let mut dp = Vec::with_capacity(xs.len());
    let mut dm = Vec::with_capacity(xs.len());
    for &x in &xs {
        let (a, da) = r.eval_with_slope(t + x)?;
        let (b, db) = r.eval_with_slope(t - x)?;
        ep.push(C64::from_polar(1.0, -PI * a));
        em.push(C64::from_polar(1.0, -PI * b));
        dp.push(da);
        dm.push(db);
    }
    let psis: Vec<Vec<(C64, C64)>> = (1..=n_max).map(|m| xs.iter().map(|&x| static_mode(m, z0, x, t)).collect()).collect();

    let mut alpha = vec![vec![C64::new(0.0, 0.0); n_max]; n_max];
    let mut beta = vec![vec![C64::new(0.0, 0.0); n_max]; n_max];
    let mut pp = vec![C64::new(1.0, 0.0); xs.len()];
    let mut pm = vec![C64::new(1.0, 0.0); xs.len()];
    let i = C64::new(0.0, 1.0);
    for n in 1..=n_max {
        for j in 0..xs.len() {
            pp[j] *= ep[j];
            pm[j] *= em[j];
        }
        let k = PI * n as f64;
        let c = (4.0 * k).sqrt().recip();
        for (m, psi) in psis.iter().enumerate() {
            let mut a = C64::new(0.0, 0.0);
            let mut b = C64::new(0.0, 0.0);
            for j in 0..xs.len() {
                let phi = (pp[j] - pm[j]) * c;
                let dphi = (pp[j] * dp[j] - pm[j] * dm[j]) * C64::new(0.0, -k) * c;
                let (s, ds) = psi[j];
                a += (s.conj() * dphi - phi * ds.conj()) * ws[j];
                b += (s.conj() * dphi.conj() - phi.conj() * ds.conj()) * ws[j];
            }
            alpha[n - 1][m] = i * a;
            beta[n - 1][m] = (i * b).conj();
        }
    }
    let unitarity_residual: Vec<f64> =
        (0..n_max).map(|m| (0..n_max).map(|n| alpha[n][m].norm_sqr() - beta[n][m].norm_sqr()).sum::<f64>() - 1.0).collect();
    for (m, res) in unitarity_residual.iter().enumerate().take(n_max / 2) {
        if res.abs() > 1e-3 {
            return Err(DceError::UnitarityLoss { mode: m + 1, residual: *res });
        }
    }
    Ok(BogoliubovMatrices { alpha, beta, evaluation_time: t, unitarity_residual })
}

/// `N_m = sum_n |beta_nm|^2` (1-based `m`).
pub fn photon_number_out(mats: &BogoliubovMatrices, m: usize) -> Result<f64, DceError> {
    if m == 0 || m > mats.n_max() {
        return Err(DceError::InvalidArgument(format!("mode {m} outside 1..={}", mats.n_max())));
    }
    Ok(mats.beta.iter().map(|row| row[m - 1].norm_sqr()).sum())
}
