//! Two-sided power spectra of sampled waveforms and one-dimensional Planck
//! fits.
//!
//! The transform is `F(omega) = integral phi(tau) e^{+i omega tau} d tau`
//! without a `1/sqrt(2 pi)` prefactor, so the absorption side of a
//! red-shifted waveform sits at negative frequency and its power reads
//! `2 pi / (omega alpha) / (e^{2 pi omega / alpha} - 1)` directly.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;
use rustfft::FftPlanner;

use super::HorizonError;
use crate::numerics::golden_section_min;

/// Sample weighting applied before the transform.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Window {
    Rectangular,
    Hann,
    /// Cosine tapers over `fraction / 2` of the record at each end.
    Tukey {
        fraction: f64,
    },
    /// Smooth (C-infinity) rise from 0 to 1 over `width` time units at the
    /// start of the record; flat afterwards.
    PlanckTaperLeft {
        width: f64,
    },
}

impl Window {
    pub fn weights(&self, n: usize, dt: f64) -> Vec<f64> {
        let nf = (n.max(2) - 1) as f64;
        (0..n)
            .map(|k| {
                let kf = k as f64;
                match *self {
                    Window::Rectangular => 1.0,
                    Window::Hann => 0.5 * (1.0 - (2.0 * PI * kf / nf).cos()),
                    Window::Tukey { fraction } => {
                        let edge = 0.5 * fraction.clamp(0.0, 1.0) * nf;
                        let d = kf.min(nf - kf);
                        if d >= edge {
                            1.0
                        } else {
                            0.5 * (1.0 - (PI * d / edge).cos())
                        }
                    }
                    Window::PlanckTaperLeft { width } => planck_rise(kf * dt / width),
                }
            })
            .collect()
    }
}

fn planck_rise(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else if x >= 1.0 {
        1.0
    } else {
        let z = 1.0 / x - 1.0 / (1.0 - x);
        if z > 700.0 {
            0.0
        } else {
            1.0 / (z.exp() + 1.0)
        }
    }
}

/// A smooth step `level (1 + tanh((tau - centre) / width)) / 2` removed from
/// the samples before the transform and restored analytically afterwards.
///
/// A waveform that settles to a nonzero constant has a DC tail the finite
/// record cuts off; subtracting the step leaves a signal that decays at both
/// ends and the step's own transform
/// `i level (pi width / 2) / sinh(pi omega width / 2) e^{i omega centre}`
/// is exact.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepBaseline {
    pub level: C64,
    pub centre: f64,
    pub width: f64,
}

impl StepBaseline {
    pub fn value(&self, tau: f64) -> C64 {
        self.level * (0.5 * (1.0 + ((tau - self.centre) / self.width).tanh()))
    }

    /// Fourier transform; zero at `omega = 0`, where it is a delta function.
    pub fn transform(&self, omega: f64) -> C64 {
        if omega == 0.0 {
            return C64::new(0.0, 0.0);
        }
        let a = 0.5 * PI * self.width;
        self.level * C64::new(0.0, a / (a * omega).sinh()) * C64::from_polar(1.0, omega * self.centre)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumOptions {
    pub window: Window,
    /// Zero padding factor (total length = `pad_factor * samples`).
    pub pad_factor: usize,
    pub baseline: Option<StepBaseline>,
}

impl Default for SpectrumOptions {
    fn default() -> Self {
        Self { window: Window::Hann, pad_factor: 1, baseline: None }
    }
}

/// Power on a signed, increasing frequency grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumSeries {
    pub frequencies: Vec<f64>,
    pub power: Vec<f64>,
    pub window: Window,
    pub fitted_temperature: Option<f64>,
    pub fit_residual: Option<f64>,
    /// Set when the record is too short for the physical time scale.
    pub insufficient_window: bool,
}

impl SpectrumSeries {
    /// Power at `omega`, interpolated linearly in `ln P` between bins.
    pub fn power_at(&self, omega: f64) -> Option<f64> {
        let f = &self.frequencies;
        if f.len() < 2 || omega < f[0] || omega > f[f.len() - 1] {
            return None;
        }
        let i = f.partition_point(|&x| x <= omega).clamp(1, f.len() - 1);
        let (x0, x1) = (f[i - 1], f[i]);
        let (p0, p1) = (self.power[i - 1], self.power[i]);
        let s = (omega - x0) / (x1 - x0);
        if p0 > 0.0 && p1 > 0.0 {
            Some((p0.ln() * (1.0 - s) + p1.ln() * s).exp())
        } else {
            Some(p0 * (1.0 - s) + p1 * s)
        }
    }

    /// `(omega, P(-omega), P(omega))` for every bin with `omega` in `band`,
    /// read directly off mirrored bins.
    pub fn mirrored_bins(&self, band: (f64, f64)) -> Vec<(f64, f64, f64)> {
        let f = &self.frequencies;
        f.iter()
            .enumerate()
            .filter(|(_, &w)| w > 0.0 && w >= band.0 && w <= band.1)
            .filter_map(|(i, &w)| {
                let j = f.partition_point(|&x| x < -w);
                (j < f.len() && (f[j] + w).abs() <= 1e-9 * w).then(|| (w, self.power[j], self.power[i]))
            })
            .collect()
    }

    /// `P(-omega) / P(omega)`.
    pub fn detailed_balance(&self, omega: f64) -> Option<f64> {
        Some(self.power_at(-omega)? / self.power_at(omega)?)
    }
}

/// Windowed, zero-padded FFT of `samples` taken at `tau_k = t0 + k dt`.
pub fn power_spectrum(samples: &[C64], t0: f64, dt: f64, opts: &SpectrumOptions) -> Result<SpectrumSeries, HorizonError> {
    let n = samples.len();
    if n < 2 || !(dt > 0.0) {
        return Err(HorizonError::InvalidArgument(format!("need >= 2 samples and dt > 0 (n = {n}, dt = {dt})")));
    }
    let pad = opts.pad_factor.max(1);
    let total = n * pad;
    let weights = opts.window.weights(n, dt);
    let mut buf = vec![C64::new(0.0, 0.0); total];
    for (k, (s, w)) in samples.iter().zip(&weights).enumerate() {
        let base = opts.baseline.map_or(C64::new(0.0, 0.0), |b| b.value(t0 + k as f64 * dt));
        buf[k] = (s - base) * w;
    }
    // unnormalised inverse FFT computes sum_k x_k e^{+2 pi i j k / N}
    FftPlanner::<f64>::new().plan_fft_inverse(total).process(&mut buf);

    let d_omega = 2.0 * PI / (total as f64 * dt);
    let half = total / 2;
    let mut frequencies = Vec::with_capacity(total);
    let mut power = Vec::with_capacity(total);
    for idx in 0..total {
        // fftshift: most negative frequency first
        let j = (idx + total - half) % total;
        let signed = if j >= total - half { j as isize - total as isize } else { j as isize };
        let omega = signed as f64 * d_omega;
        let mut f = buf[j] * dt * C64::from_polar(1.0, omega * t0);
        if let Some(b) = opts.baseline {
            f += b.transform(omega);
        }
        frequencies.push(omega);
        power.push(f.norm_sqr());
    }
    Ok(SpectrumSeries {
        frequencies,
        power,
        window: opts.window,
        fitted_temperature: None,
        fit_residual: None,
        insufficient_window: false,
    })
}

/// Shape of the 1D Planck absorption power, `1 / (omega (e^{hbar omega / k_B T} - 1))`.
pub fn planck_1d(omega: f64, temperature: f64, hbar_over_kb: f64) -> f64 {
    1.0 / (omega * (hbar_over_kb * omega / temperature).exp_m1())
}

/// Fits `ln P(-omega)` for `omega` in `band` to
/// `ln A - ln omega - ln(e^{hbar omega / k_B T} - 1)` with the amplitude
/// profiled out. Returns `(T, rms log residual)`.
///
/// `hbar_over_kb` sets the temperature unit: `hbar / k_B` for kelvin, `1` for
/// natural units.
pub fn planck_fit_1d(spectrum: &SpectrumSeries, band: (f64, f64), hbar_over_kb: f64) -> Result<(f64, f64), HorizonError> {
    let (lo, hi) = band;
    if !(lo > 0.0 && hi > lo) {
        return Err(HorizonError::InvalidArgument(format!("band must satisfy 0 < lo < hi (got {lo}, {hi})")));
    }
    let (w, lp): (Vec<f64>, Vec<f64>) = spectrum
        .frequencies
        .iter()
        .zip(&spectrum.power)
        .filter(|(&f, &p)| -f >= lo && -f <= hi && p > 0.0)
        .map(|(&f, &p)| (-f, p.ln()))
        .unzip();
    if w.len() < 3 {
        return Err(HorizonError::InvalidArgument(format!("only {} usable bins in the fit band", w.len())));
    }
    let cost = |log_t: f64| -> f64 {
        let t = log_t.exp();
        let r: Vec<f64> = w.iter().zip(&lp).map(|(&o, &l)| l + o.ln() + (hbar_over_kb * o / t).exp_m1().ln()).collect();
        let mean = r.iter().sum::<f64>() / r.len() as f64;
        r.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / r.len() as f64
    };
    let t_hi = 10.0 * hbar_over_kb * hi;
    let t_lo = 1e-3 * hbar_over_kb * lo;
    let (a, b) = (t_lo.ln(), t_hi.ln());
    let (log_t, c) = golden_section_min(cost, a, b, 1e-12);
    let edge = 1e-6 * (b - a);
    if log_t - a < edge || b - log_t < edge || !c.is_finite() {
        return Err(HorizonError::FitDiverged { temperature: log_t.exp(), upper: t_hi });
    }
    Ok((log_t.exp(), c.sqrt()))
}

/// Attaches a Planck fit to the spectrum.
pub fn with_planck_fit(
    mut spectrum: SpectrumSeries,
    band: (f64, f64),
    hbar_over_kb: f64,
) -> Result<SpectrumSeries, HorizonError> {
    let (t, r) = planck_fit_1d(&spectrum, band, hbar_over_kb)?;
    spectrum.fitted_temperature = Some(t);
    spectrum.fit_residual = Some(r);
    Ok(spectrum)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pure_tone_peaks_at_its_frequency() {
        let w0 = 3.0;
        let dt = 0.01;
        let samples: Vec<C64> = (0..4096).map(|k| C64::from_polar(1.0, -w0 * k as f64 * dt)).collect();
        let s = power_spectrum(&samples, 0.0, dt, &SpectrumOptions::default()).unwrap();
        let imax = (0..s.power.len()).max_by(|&a, &b| s.power[a].total_cmp(&s.power[b])).unwrap();
        // e^{+i omega tau} transform of e^{-i w0 tau} peaks at omega = +w0
        assert!((s.frequencies[imax] - w0).abs() < 2.0 * PI / (4096.0 * dt));
        assert!(s.frequencies.windows(2).all(|p| p[1] > p[0]));
        assert!(s.power.iter().all(|&p| p >= 0.0));
    }

    #[test]
    fn gaussian_pulse_normalisation() {
        // exp(-(tau - 1)^2 / 2) transforms to sqrt(2 pi) e^{-omega^2 / 2} e^{i omega}
        let dt = 0.01;
        let t0 = -15.0;
        let samples: Vec<C64> = (0..4096).map(|k| C64::new((-(t0 + k as f64 * dt - 1.0).powi(2) / 2.0).exp(), 0.0)).collect();
        let opts = SpectrumOptions { window: Window::Rectangular, pad_factor: 2, baseline: None };
        let s = power_spectrum(&samples, t0, dt, &opts).unwrap();
        for (f, p) in s.frequencies.iter().zip(&s.power).filter(|(f, _)| f.abs() < 4.0) {
            let exact = 2.0 * PI * (-f * f).exp();
            assert!((p - exact).abs() < 1e-10, "{f}: {p} vs {exact}");
        }
    }

    #[test]
    fn subtracted_step_is_restored_exactly() {
        let b = StepBaseline { level: C64::new(0.3, 0.4), centre: 2.0, width: 0.5 };
        let dt = 0.005;
        let samples: Vec<C64> = (0..8192).map(|k| b.value(-10.0 + k as f64 * dt)).collect();
        let opts = SpectrumOptions { window: Window::Rectangular, pad_factor: 1, baseline: Some(b) };
        let s = power_spectrum(&samples, -10.0, dt, &opts).unwrap();
        for (f, p) in s.frequencies.iter().zip(&s.power).filter(|(f, _)| f.abs() > 0.0 && f.abs() < 5.0) {
            let exact = b.transform(*f).norm_sqr();
            assert!((p / exact - 1.0).abs() < 1e-12, "{f}: {p} vs {exact}");
        }
    }

    #[test]
    fn planck_fit_recovers_synthetic_temperature() {
        let t = 0.37;
        let frequencies: Vec<f64> = (-400..=400).map(|k| k as f64 * 0.01).collect();
        let power = frequencies.iter().map(|&f| if f < 0.0 { 5.0 * planck_1d(-f, t, 1.0) } else { 1.0 }).collect();
        let s = SpectrumSeries {
            frequencies,
            power,
            window: Window::Rectangular,
            fitted_temperature: None,
            fit_residual: None,
            insufficient_window: false,
        };
        let (fit, r) = planck_fit_1d(&s, (0.5, 3.0), 1.0).unwrap();
        assert!((fit / t - 1.0).abs() < 1e-3);
        assert!(r < 1e-8);
    }

    #[test]
    fn flat_spectrum_diverges() {
        let frequencies: Vec<f64> = (-100..=100).map(|k| k as f64 * 0.05).collect();
        let power = frequencies.iter().map(|&f| if f < 0.0 { 1.0 / -f } else { 1.0 }).collect();
        let s = SpectrumSeries {
            frequencies,
            power,
            window: Window::Rectangular,
            fitted_temperature: None,
            fit_residual: None,
            insufficient_window: false,
        };
        assert!(matches!(planck_fit_1d(&s, (0.5, 3.0), 1.0), Err(HorizonError::FitDiverged { .. })));
    }

    #[test]
    fn window_shapes() {
        let h = Window::Hann.weights(5, 1.0);
        assert_eq!(h[0], 0.0);
        assert!((h[2] - 1.0).abs() < 1e-15);
        let p = Window::PlanckTaperLeft { width: 3.0 }.weights(10, 1.0);
        assert_eq!(p[0], 0.0);
        assert!(p.windows(2).all(|w| w[1] >= w[0]));
        assert_eq!(p[5], 1.0);
        let t = Window::Tukey { fraction: 0.5 }.weights(101, 1.0);
        assert_eq!(t[50], 1.0);
        assert_eq!(t[0], 0.0);
    }
}
