//! Moore's equation for a cavity with one moving mirror.

use super::{DceError, MirrorTrajectory};
use crate::numerics::newton_bracketed;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MooreOptions {
    /// Spacing of the time grid whose images `t + z(t)` carry the nodes.
    pub grid_step: f64,
    /// Largest accepted residual on the refinement grid.
    pub tol: f64,
}

impl MooreOptions {
    /// Grid step `z0 / 512`, tolerance `1e-6`.
    pub fn for_cavity(z0: f64) -> Self {
        Self { grid_step: z0 / 512.0, tol: 1e-6 }
    }
}

/// Solution of Moore's equation on `u <= u_max`.
///
/// Below `z0` the mirror has always been static and `R(u) = u / z0`.
/// Above it `R` is a cubic Hermite interpolant through nodes at
/// `u_k = t_k + z(t_k)` whose values and slopes are exact.
#[derive(Debug, Clone, PartialEq)]
pub struct RFunction {
    pub z0: f64,
    pub u: Vec<f64>,
    pub r: Vec<f64>,
    pub slope: Vec<f64>,
    /// Largest residual found on the refinement grid.
    pub residual: f64,
}

/// Exact `R(u)` and `R'(u)` by following the characteristic back through
/// successive reflections until it leaves the static past.
pub(crate) fn trace(traj: &MirrorTrajectory, u: f64) -> (f64, f64) {
    let z0 = traj.z0();
    let (z_min, z_max) = traj.z_bounds();
    let mut u = u;
    let mut bounces = 0.0;
    let mut factor = 1.0;
    while u > z0 {
        let t =
            newton_bracketed(|t| t + traj.z(t) - u, |t| 1.0 + traj.velocity(t), u - z_max, u - z_min, 1e-15 * u.abs().max(1.0));
        let v = traj.velocity(t);
        factor *= (1.0 - v) / (1.0 + v);
        u = t - traj.z(t);
        bounces += 1.0;
    }
    (u / z0 + 2.0 * bounces, factor / z0)
}

impl RFunction {
    pub fn u_max(&self) -> f64 {
        *self.u.last().unwrap_or(&self.z0)
    }

    /// `(R(u), R'(u))`.
    pub fn eval_with_slope(&self, u: f64) -> Result<(f64, f64), DceError> {
        let z0 = self.z0;
        if u <= z0 {
            return Ok((u / z0, 1.0 / z0));
        }
        if u > self.u_max() {
            return Err(DceError::OutOfGrid { u, lo: f64::NEG_INFINITY, hi: self.u_max() });
        }
        let i = (self.u.partition_point(|&x| x < u)).clamp(1, self.u.len() - 1) - 1;
        let (x0, x1) = (self.u[i], self.u[i + 1]);
        let (y0, y1) = (self.r[i], self.r[i + 1]);
        let h = x1 - x0;
        let (m0, m1) = limited_slopes(self.slope[i], self.slope[i + 1], (y1 - y0) / h);
        let s = (u - x0) / h;
        let (s2, s3) = (s * s, s * s * s);
        let value =
            (2.0 * s3 - 3.0 * s2 + 1.0) * y0 + (s3 - 2.0 * s2 + s) * h * m0 + (-2.0 * s3 + 3.0 * s2) * y1 + (s3 - s2) * h * m1;
        let deriv = ((6.0 * s2 - 6.0 * s) * y0 + (-6.0 * s2 + 6.0 * s) * y1) / h
            + (3.0 * s2 - 4.0 * s + 1.0) * m0
            + (3.0 * s2 - 2.0 * s) * m1;
        Ok((value, deriv))
    }

    pub fn eval(&self, u: f64) -> Result<f64, DceError> {
        Ok(self.eval_with_slope(u)?.0)
    }

    /// `R(t + z(t)) - R(t - z(t)) - 2`.
    pub fn residual_at(&self, traj: &MirrorTrajectory, t: f64) -> Result<f64, DceError> {
        let z = traj.z(t);
        Ok(self.eval(t + z)? - self.eval(t - z)? - 2.0)
    }

    /// Largest residual over a grid of spacing `step` on `[t0, t1]`.
    pub fn max_residual(&self, traj: &MirrorTrajectory, t0: f64, t1: f64, step: f64) -> Result<f64, DceError> {
        let n = ((t1 - t0) / step).floor() as usize;
        let mut worst: f64 = 0.0;
        for k in 0..=n {
            worst = worst.max(self.residual_at(traj, t0 + k as f64 * step)?.abs());
        }
        Ok(worst)
    }
}

/// Fritsch-Carlson limiter: keeps the Hermite cubic monotone on an interval
/// with secant `delta`.
fn limited_slopes(m0: f64, m1: f64, delta: f64) -> (f64, f64) {
    if delta <= 0.0 {
        return (0.0, 0.0);
    }
    let (a, b) = (m0.max(0.0) / delta, m1.max(0.0) / delta);
    let norm = a * a + b * b;
    if norm > 9.0 {
        let tau = 3.0 / norm.sqrt();
        (tau * a * delta, tau * b * delta)
    } else {
        (m0.max(0.0), m1.max(0.0))
    }
}

/// Solves Moore's equation up to `u = t_end + z(t_end)`. Cavity modes at
/// time `T` need `R` on `[T - z0, T + z0]`, so pass `t_end = T + z0`.
///
/// Every node is exact; the residual is then measured on a grid twice as fine
/// as the solver grid, offset from the nodes, over `t` in `[0, t_end - z_max]`.
pub fn solve_moore(traj: &MirrorTrajectory, t_end: f64, opts: &MooreOptions) -> Result<RFunction, DceError> {
    traj.validate()?;
    if matches!(traj, MirrorTrajectory::Receding { .. }) {
        return Err(DceError::InvalidTrajectory("Moore's equation needs a cavity trajectory".into()));
    }
    if !(t_end > 0.0 && opts.grid_step > 0.0 && opts.tol > 0.0) {
        return Err(DceError::InvalidArgument(format!(
            "need t_end > 0, grid_step > 0, tol > 0 (got {t_end}, {}, {})",
            opts.grid_step, opts.tol
        )));
    }
    let n = (t_end / opts.grid_step).ceil() as usize;
    let h = t_end / n as f64;
    let mut u = Vec::with_capacity(n + 1);
    let mut r = Vec::with_capacity(n + 1);
    let mut slope = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let t = k as f64 * h;
        let uk = t + traj.z(t);
        let (rk, sk) = trace(traj, uk);
        if let (Some(&u_prev), Some(&r_prev)) = (u.last(), r.last()) {
            if !(uk > u_prev && rk > r_prev) {
                return Err(DceError::NonMonotone { u0: u_prev, u1: uk });
            }
        }
        u.push(uk);
        r.push(rk);
        slope.push(sk);
    }
    let mut rf = RFunction { z0: traj.z0(), u, r, slope, residual: 0.0 };
    let (_, z_max) = traj.z_bounds();
    let check_end = t_end - z_max;
    rf.residual = if check_end > 0.25 * h { rf.max_residual(traj, 0.25 * h, check_end, 0.5 * h)? } else { 0.0 };
    if rf.residual > opts.tol {
        return Err(DceError::ResidualExceeded { residual: rf.residual, tol: opts.tol });
    }
    Ok(rf)
}
