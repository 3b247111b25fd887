use std::f64::consts::PI;

use vacuum_core::constants::{PhysicalConstants, CODATA_2018};
use vacuum_core::horizon::*;
use vacuum_core::numerics::composite_gauss_legendre;

const K: PhysicalConstants = CODATA_2018;

#[test]
fn chirp_spectrum_is_planckian_across_two_decades() {
    for alpha in [1e6, 1e7, 1e8] {
        let p = AccelerationParams::from_rate(alpha, &K).unwrap();
        let s = unruh_spectrum(&p, &ChirpSpectrumConfig::default()).unwrap();
        assert!(!s.insufficient_window);
        let bins = s.mirrored_bins((0.5 * alpha, 3.0 * alpha));
        assert!(bins.len() > 20);
        for (w, neg, pos) in bins {
            let balance = neg / pos / (-2.0 * PI * w / alpha).exp();
            assert!((balance - 1.0).abs() < 0.01, "alpha {alpha}, w/alpha {}: {balance}", w / alpha);
            let form = neg / unruh_power_exact(w, alpha);
            assert!((form - 1.0).abs() < 0.02, "alpha {alpha}, w/alpha {}: {form}", w / alpha);
        }
        let (t, _) = planck_fit_1d(&s, (0.5 * alpha, 3.0 * alpha), K.hbar / K.k_b).unwrap();
        assert!((t / unruh_temperature(&p, &K) - 1.0).abs() < 0.01);
        let ratio = s.detailed_balance(alpha).unwrap();
        let expected = detailed_balance_ratio(alpha, unruh_temperature(&p, &K), &K).unwrap();
        assert!((ratio / expected - 1.0).abs() < 0.02);
    }
}

#[test]
fn short_record_is_flagged() {
    let p = AccelerationParams::from_rate(1.0, &K).unwrap();
    let cfg = ChirpSpectrumConfig { left: 1.0, right: 3.0, samples: 1 << 12, pad_factor: 1, taper: 0.5, ..Default::default() };
    assert!(unruh_spectrum(&p, &cfg).unwrap().insufficient_window);
}

#[test]
fn hawking_mass_product_is_constant() {
    let expected = K.hbar * K.c.powi(3) / (8.0 * PI * K.g * K.k_b);
    assert!((expected / 1.227e23 - 1.0).abs() < 1e-3);
    for e in 0..=10 {
        let m = 1e20 * 10f64.powi(e);
        let bh = BlackHole::new(m).unwrap();
        assert!((hawking_temperature(&bh, &K) * m / expected - 1.0).abs() < 1e-12);
    }
}

#[test]
fn first_law_by_finite_differences() {
    for m in [1e12, SOLAR_MASS, 1e40] {
        let h = 1e-4 * m;
        let s = |m: f64| bh_entropy(&BlackHole::new(m).unwrap(), &K);
        let ds_dm = (s(m + h) - s(m - h)) / (2.0 * h);
        let t = hawking_temperature(&BlackHole::new(m).unwrap(), &K);
        assert!((t * ds_dm / (K.c * K.c) - 1.0).abs() < 1e-6);
        // dA = (4 G hbar / (k_B c^3)) dS
        let area = |m: f64| 4.0 * PI * schwarzschild_radius(&BlackHole::new(m).unwrap(), &K).powi(2);
        let da = area(m + h) - area(m - h);
        let lambda = da / (s(m + h) - s(m - h)) * K.k_b * K.c.powi(3) / (K.g * K.hbar);
        assert!((lambda / 4.0 - 1.0).abs() < 1e-9);
    }
}

#[test]
fn near_horizon_temperature_approaches_unruh_form() {
    let bh = BlackHole::new(SOLAR_MASS).unwrap();
    let r_s = schwarzschild_radius(&bh, &K);
    let (kappa, _) = surface_gravity(&bh, &K);
    let mut prev = f64::INFINITY;
    for d in [1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6] {
        let r = r_s * (1.0 + d);
        let a = static_acceleration(&bh, r, &K).unwrap();
        let unruh = K.hbar * (a / K.c) / (2.0 * PI * K.k_b);
        let dev = (local_temperature(&bh, r, &K).unwrap() / unruh - 1.0).abs();
        assert!(dev < prev);
        prev = dev;
        // V(r) a(r) -> kappa
        let v = redshift_factor(&bh, r, &K).unwrap();
        assert!((v * a / kappa - 1.0).abs() < 3.0 * d);
    }
    assert!(prev < 1e-3, "{prev}");
}

#[test]
fn power_matches_planck_flux_quadrature() {
    for t in [1e-3, 1.0, 1e3] {
        let wt = K.k_b * t / K.hbar;
        let (x, w) = composite_gauss_legendre(0.0, 80.0, 80, 16);
        let integral: f64 =
            x.iter().zip(&w).map(|(&x, &w)| if x == 0.0 { 0.0 } else { w * x / x.exp_m1() }).sum::<f64>() * K.hbar * wt * wt;
        let oracle = integral / (2.0 * PI);
        assert!((power_1d(t, &K) / oracle - 1.0).abs() < 1e-3);
    }
}
