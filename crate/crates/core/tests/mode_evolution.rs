use vacuum_core::modeode::*;
use vacuum_core::C64;

const TOL: f64 = 1e-11;

#[test]
fn quench_converges_to_mode_matching() {
    let osc = Oscillator::unit();
    for ratio in [1.1, 2.0, 3.5, 6.0, 10.0] {
        let exact = sudden_step_beta_sq(1.0, ratio);
        let mut errors = Vec::new();
        for width in [1e-2, 1e-3, 1e-4] {
            let p = FrequencyProfile::SuddenStep { omega_in: 1.0, omega_out: ratio, width };
            let m = quench_bogoliubov(&p, &osc, TOL).unwrap();
            errors.push((m.mean_photon_number() / exact - 1.0).abs());
        }
        assert!(errors[2] < 1e-6, "ratio {ratio}: {errors:?}");
        assert!(errors[1] < errors[0]);
    }
}

#[test]
fn quench_is_mass_and_hbar_independent() {
    let p = FrequencyProfile::sudden(2.0e9, 5.0e9);
    let a = quench_bogoliubov(&p, &Oscillator::unit(), TOL).unwrap();
    let b = quench_bogoliubov(&p, &Oscillator::new(1e-20, 1.054_571_817e-34).unwrap(), TOL).unwrap();
    assert!((a.mean_photon_number() / b.mean_photon_number() - 1.0).abs() < 1e-7);
}

#[test]
fn adiabatic_ramps_produce_no_quanta() {
    let osc = Oscillator::unit();
    let mut prev = f64::INFINITY;
    for ramp in [0.3, 1.0, 3.0, 10.0, 100.0] {
        let p = FrequencyProfile::TanhRamp { omega_in: 1.0, omega_out: 2.0, ramp_time: ramp };
        let n = quench_bogoliubov(&p, &osc, TOL).unwrap().mean_photon_number();
        assert!(n < prev, "ramp {ramp}: {n} !< {prev}");
        prev = n;
    }
    assert!(prev < 1e-6);
}

#[test]
fn constant_profile_extracts_a_phase() {
    let osc = Oscillator::unit();
    let p = FrequencyProfile::Constant { omega: 1.5 };
    let traj = evolve_mode(&p, -3.0, 7.0, &osc, TOL).unwrap();
    let m = extract_bogoliubov(&traj, 1.5).unwrap();
    assert!((m.alpha().norm() - 1.0).abs() < 1e-9);
    assert!(m.beta().norm() < 1e-9);
}

#[test]
fn step_trajectory_is_continuous() {
    let osc = Oscillator::unit();
    let p = FrequencyProfile::sudden(1.0, 3.0);
    let traj = evolve_mode(&p, -5.0, 5.0, &osc, TOL).unwrap();
    let i = traj.times.iter().position(|&t| t > 0.0).unwrap();
    let df = (traj.f[i] - traj.f[i - 1]).norm();
    let dfd = (traj.fdot[i] - traj.fdot[i - 1]).norm();
    assert!(df < 1e-3 && dfd < 1e-3, "{df} {dfd}");
    assert!(traj.max_norm_drift() < 1e-7);
}

#[test]
fn time_reversal_recovers_initial_data() {
    let osc = Oscillator::unit();
    let p = FrequencyProfile::TanhRamp { omega_in: 1.0, omega_out: 2.5, ramp_time: 0.7 };
    let fwd = evolve_mode(&p, -10.0, 10.0, &osc, TOL).unwrap();
    let (t1, f1, fd1) = fwd.last();
    let back = evolve_from(&p, t1, -10.0, f1, fd1, &osc, TOL).unwrap();
    let (_, f0, fd0) = back.last();
    assert!((f0 - fwd.f[0]).norm() < 10.0 * TOL * 1e2, "{}", (f0 - fwd.f[0]).norm());
    assert!((fd0 - fwd.fdot[0]).norm() < 10.0 * TOL * 1e2);
}

#[test]
fn pumped_mode_follows_amplifier_form() {
    let osc = Oscillator::unit();
    let (w0, eps) = (1.0, 0.02);
    let p = FrequencyProfile::SinusoidalPump { omega0: w0, depth: eps, pump_frequency: 2.0 * w0 };
    let traj = evolve_mode(&p, 0.0, 1200.0, &osc, 1e-10).unwrap();
    let rate = fit_growth_rate(&traj, w0).unwrap();
    let eta = rate / 2.0;
    // |beta| ~ sinh(2 eta t) at the end, within the projection ripple of order eps
    let (t, f, fd) = traj.last();
    let beta = project(f, fd, t, w0, &osc).1.norm();
    assert!((beta / (2.0 * eta * t).sinh() - 1.0).abs() < 0.1, "{beta}");
    let m = extract_bogoliubov(&traj, w0).unwrap();
    assert!(m.residual() / m.alpha().norm_sqr() < 1e-6);
}

#[test]
fn kg_inner_is_sesquilinear() {
    let osc = Oscillator::new(2.0, 0.5).unwrap();
    let (f, fd) = (C64::new(0.3, -0.2), C64::new(1.1, 0.4));
    let (g, gd) = (C64::new(-0.7, 0.9), C64::new(0.2, -1.3));
    let a = C64::new(0.6, -1.7);
    let lhs = kg_inner(f, fd, g * a, gd * a, &osc);
    assert!((lhs - a * kg_inner(f, fd, g, gd, &osc)).norm() < 1e-14);
    let anti = kg_inner(f * a, fd * a, g, gd, &osc);
    assert!((anti - a.conj() * kg_inner(f, fd, g, gd, &osc)).norm() < 1e-14);
}
