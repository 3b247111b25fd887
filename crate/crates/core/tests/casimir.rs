use std::f64::consts::PI;

use vacuum_core::dce::*;

const Z0: f64 = 1.0;
const EPS: f64 = 0.01;

fn resonant(duration: f64, ramp: f64) -> MirrorTrajectory {
    MirrorTrajectory::Sinusoidal { z0: Z0, epsilon: EPS, drive_frequency: 2.0 * PI / Z0, duration, ramp }
}

#[test]
fn driven_residual_converges_at_high_order() {
    let traj = resonant(50.0, 1.0);
    let mut residuals = Vec::new();
    for div in [128.0, 256.0, 512.0] {
        let rf = solve_moore(&traj, 51.0, &MooreOptions { grid_step: Z0 / div, tol: 1e-3 }).unwrap();
        residuals.push(rf.residual);
    }
    eprintln!("{residuals:?}");
    assert!(residuals[0] / residuals[1] > 4.0 && residuals[1] / residuals[2] > 4.0);
}

#[test]
fn refinement_changes_shrink() {
    let traj = resonant(20.0, 1.0);
    let sols: Vec<RFunction> = [64.0, 128.0, 256.0]
        .iter()
        .map(|d| solve_moore(&traj, 21.0, &MooreOptions { grid_step: Z0 / d, tol: 1e-3 }).unwrap())
        .collect();
    let diff = |a: &RFunction, b: &RFunction| {
        (0..4000)
            .map(|k| 1.0 + 20.0 * k as f64 / 4000.0)
            .map(|u| (a.eval(u).unwrap() - b.eval(u).unwrap()).abs())
            .fold(0.0, f64::max)
    };
    let d1 = diff(&sols[0], &sols[1]);
    let d2 = diff(&sols[1], &sols[2]);
    eprintln!("{d1:e} {d2:e}");
    assert!(d1 / d2 >= 4.0);
}

#[test]
fn modes_vanish_on_both_mirrors() {
    let traj = resonant(20.0, 1.0);
    let rf = solve_moore(&traj, 21.0, &MooreOptions { grid_step: Z0 / 512.0, tol: 1e-5 }).unwrap();
    for n in 1..=10 {
        for t in [2.0, 7.3, 15.1, 19.0] {
            assert_eq!(cavity_mode(&rf, n, 0.0, t).unwrap().norm(), 0.0);
            let edge = cavity_mode(&rf, n, traj.z(t), t).unwrap().norm();
            assert!(edge < 1e2 * rf.residual.max(1e-15), "n {n}, t {t}: {edge:e} vs {:e}", rf.residual);
        }
    }
}

#[test]
fn static_cavity_modes_reduce_to_standing_waves() {
    let traj = MirrorTrajectory::Static { z0: 2.0 };
    let rf = solve_moore(&traj, 6.0, &MooreOptions::for_cavity(2.0)).unwrap();
    for n in [1, 3, 7] {
        for (x, t) in [(0.3, 1.0), (1.1, 3.7)] {
            let phi = cavity_mode(&rf, n, x, t).unwrap();
            let (psi, _) = static_mode(n, 2.0, x, t);
            assert!((phi + psi).norm() < 1e-12);
        }
    }
    let m = dce_bogoliubov(&rf, &traj, 4.0, 8, 16).unwrap();
    for n in 0..8 {
        for k in 0..8 {
            let expected = if n == k { -1.0 } else { 0.0 };
            assert!((m.alpha[n][k] - expected).norm() < 1e-10);
            assert!(m.beta[n][k].norm() < 1e-10);
        }
    }
    assert_eq!(photon_number_out(&m, 1).unwrap(), m.beta.iter().map(|r| r[0].norm_sqr()).sum::<f64>());
}

#[test]
fn zero_amplitude_drive_creates_nothing() {
    let traj = MirrorTrajectory::Sinusoidal { z0: Z0, epsilon: 0.0, drive_frequency: 2.0 * PI, duration: 6.0, ramp: 1.0 };
    let rf = solve_moore(&traj, 7.0, &MooreOptions::for_cavity(Z0)).unwrap();
    let m = dce_bogoliubov(&rf, &traj, 6.0, 8, 16).unwrap();
    assert!(photon_number_out(&m, 1).unwrap() < 1e-10);
}

#[test]
fn driven_rows_are_unitary() {
    let traj = resonant(8.0, 1.0);
    let rf = solve_moore(&traj, 9.0, &MooreOptions::for_cavity(Z0)).unwrap();
    let m = dce_bogoliubov(&rf, &traj, 8.0, 32, 16).unwrap();
    for res in m.unitarity_residual.iter().take(16) {
        assert!(res.abs() < 1e-3);
    }
    assert!(photon_number_out(&m, 1).unwrap() > 1e-3);
}

#[test]
fn short_time_growth_is_quadratic() {
    let w1 = PI / Z0;
    let mut ts = Vec::new();
    let mut ns = Vec::new();
    for t in [2.0, 3.0, 4.0, 5.0, 6.0, 8.0] {
        let traj = resonant(t, 0.0);
        let rf = solve_moore(&traj, t + Z0, &MooreOptions { grid_step: Z0 / 512.0, tol: 1e-3 }).unwrap();
        let m = dce_bogoliubov(&rf, &traj, t, 32, 16).unwrap();
        let n1 = photon_number_out(&m, 1).unwrap();
        eprintln!("T = {t}: N1 = {n1:e}, N1 / (eps w1 T / 2)^2 = {}", n1 / (EPS * w1 * t / 2.0).powi(2));
        ts.push(t.ln());
        ns.push(n1.ln());
    }
    let (slope, _) = vacuum_core::numerics::linear_fit(&ts, &ns);
    assert!((slope - 2.0).abs() < 0.05, "{slope}");
}

#[test]
fn receding_mirror_is_thermal() {
    let kappa = 1.0;
    let s = receding_mirror_spectrum(0.5 / kappa, kappa, &RecedingSpectrumConfig::default()).unwrap();
    let t = s.fitted_temperature.unwrap();
    assert!((t / (kappa / (2.0 * PI)) - 1.0).abs() < 0.02, "{t}");
    for (w, neg, pos) in s.mirrored_bins((0.5 * kappa, 3.0 * kappa)) {
        let ratio = neg / pos / (-w / t).exp();
        assert!((ratio - 1.0).abs() < 0.02, "{w}: {ratio}");
    }
}
