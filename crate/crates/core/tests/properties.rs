//! Structural invariants as randomized properties.

mod common;

use common::{s_double_quadrature, Gaussian};
use proptest::prelude::*;
use std::f64::consts::PI;
use xp_spectra::cli::{format_g, Options};
use xp_spectra::riemann::{riemann_boundary_default, RiemannConfig, Truncation};
use xp_spectra::special_fn::{erfc, exp_2i_theta_complex, omega_minus, omega_plus, theta, Parity};
use xp_spectra::spectral_solver::{find_bound_states, jost_value, s_integral, BoundarySpectrum};
use xp_spectra::wavefn::{jost_bk_exact_complex, psi_spectral};
use xp_spectra::Complex64;

fn gaussian() -> impl Strategy<Value = Gaussian> {
    (0.5..2.0f64, -1.0..1.0f64, 0.3..1.5f64).prop_map(|(alpha, mu, sigma)| Gaussian { alpha, mu, sigma })
}

/// Winding number of `f` around the rectangle [x0, x1] × [y0, y1], traversed counterclockwise.
fn winding<F: Fn(Complex64) -> Complex64>(f: F, x0: f64, x1: f64, y0: f64, y1: f64) -> f64 {
    let corners = [
        Complex64::new(x0, y0),
        Complex64::new(x1, y0),
        Complex64::new(x1, y1),
        Complex64::new(x0, y1),
        Complex64::new(x0, y0),
    ];
    let mut total = 0.0;
    for w in corners.windows(2) {
        let n = ((w[1] - w[0]).norm() / 0.01).ceil() as usize;
        let mut prev = f(w[0]);
        for k in 1..=n {
            let z = w[0] + (w[1] - w[0]) * (k as f64 / n as f64);
            let v = f(z);
            total += (v / prev).arg();
            prev = v;
        }
    }
    total / (2.0 * PI)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn shuffle_relation_with_quadrature_oracle(f in gaussian(), g in gaussian(), e in -5.0..5.0f64) {
        let fh = move |w: f64| f.hat(w);
        let gh = move |w: f64| g.hat(w);
        let s_fg = s_integral(fh, gh, e).unwrap();
        let s_gf = s_integral(gh, fh, -e).unwrap();
        prop_assert!((s_fg + s_gf - f.hat(e) * g.hat(-e)).norm() <= 1e-8);
        prop_assert!((s_fg - s_double_quadrature(&f, &g, e)).norm() <= 1e-7);
        prop_assert!((s_gf - s_double_quadrature(&g, &f, -e)).norm() <= 1e-7);
    }

    #[test]
    fn no_zeros_above_the_real_axis(a0 in 0.3..2.0f64, b0 in -2.0..2.0f64, q in 0.3..2.0f64, x0 in 1.0..30.0f64) {
        let trap = BoundarySpectrum::trap(a0, b0, q, 0.0);
        let g = a0 * b0;
        let f_trap = move |z: Complex64| 1.0 + 0.25 * g * g + g * (Complex64::i() * z * q).exp();
        prop_assert!((f_trap(Complex64::new(x0, 0.0)) - jost_value(&trap, x0).unwrap()).norm() < 1e-12);
        prop_assert_eq!(winding(f_trap, x0, x0 + 8.0, 0.05, 5.0).round(), 0.0);
        let bk = |z: Complex64| jost_bk_exact_complex(2.0, Parity::Plus, z).unwrap();
        prop_assert_eq!(winding(bk, x0, x0 + 8.0, 0.05, 5.0).round(), 0.0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn jost_symmetry_and_unimodularity(a0 in 0.2..2.0f64, b0 in -2.0..2.0f64, q in 0.1..3.0f64, e in 0.0..60.0f64) {
        let spectra = [
            BoundarySpectrum::trap(a0, b0, q, 0.0),
            BoundarySpectrum::bk_canonical(true),
            BoundarySpectrum::bk_canonical(false),
            riemann_boundary_default(RiemannConfig::canonical(Truncation::RsMain)),
        ];
        for bs in &spectra {
            let (fp, fm) = (jost_value(bs, e).unwrap(), jost_value(bs, -e).unwrap());
            prop_assert!((fp.conj() - fm).norm() <= 1e-9);
            if fp.norm() > 1e-6 {
                prop_assert!(((fp / fm).norm() - 1.0).abs() <= 1e-9);
            }
        }
    }

    #[test]
    fn n_fl_is_odd(t in 7.0..200.0f64, k in 2.0..8.0f64) {
        for tr in [Truncation::MainSum, Truncation::RsMain, Truncation::BkSmoothed { k }] {
            let (up, down) = (tr.value(t), tr.value(-t));
            if let (Ok(up), Ok(down)) = (up, down) {
                if (up.n_fl.abs() - 1.0).abs() > 1e-9 {
                    prop_assert!((up.n_fl + down.n_fl).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn phase_split_and_parity(e in -80.0..80.0f64) {
        prop_assert!((theta(e) + theta(-e)).abs() < 1e-12);
        let full = Complex64::from_polar(1.0, 2.0 * theta(e));
        prop_assert!((omega_plus(e) + omega_minus(e) - full).norm() < 1e-12);
        let z = Complex64::new(e, 0.0);
        prop_assert!((exp_2i_theta_complex(z, Parity::Plus).unwrap() - full).norm() < 1e-10);
    }

    #[test]
    fn erfc_symmetries(x in -5.0..5.0f64, y in -5.0..5.0f64) {
        let z = Complex64::new(x, y);
        let v = erfc(z);
        prop_assert!((erfc(-z) - (2.0 - v)).norm() <= 1e-12 * (1.0 + v.norm()));
        prop_assert!((erfc(z.conj()) - v.conj()).norm() <= 1e-12 * (1.0 + v.norm()));
    }

    #[test]
    fn delta_coefficient_vanishes_only_at_bound_states(e in 0.5..20.0f64, w in -10.0..10.0f64) {
        let bs = BoundarySpectrum::trap_epsilon(-1.0, 1.0);
        prop_assume!((w - e).abs() > 1e-6);
        let c = psi_spectral(&bs, e, w).unwrap();
        let bound = jost_value(&bs, e).unwrap().norm() <= 1e-8;
        prop_assert_eq!(c.delta_coefficient == 0.0, bound);
        let n = (e / (2.0 * PI)).round().max(1.0);
        let c = psi_spectral(&bs, 2.0 * PI * n, w).unwrap();
        prop_assert_eq!(c.delta_coefficient, 0.0);
    }

    #[test]
    fn trap_levels_follow_q(q in 0.4..3.0f64) {
        let bs = BoundarySpectrum::trap_epsilon(-1.0, q);
        let found = find_bound_states(&bs, 1.0, 20.0, 0.01).unwrap();
        let expected: Vec<f64> = (1..).map(|n| 2.0 * PI * n as f64 / q).take_while(|e| *e < 20.0).filter(|e| *e > 1.0).collect();
        prop_assert_eq!(found.len(), expected.len());
        for (s, e) in found.iter().zip(expected) {
            prop_assert!((s.energy - e).abs() < 1e-8);
        }
    }

    #[test]
    fn csv_numbers_round_trip(v in -1e6..1e6f64, p in -8i32..8) {
        let x = v * 10f64.powi(p);
        let back: f64 = format_g(x, 12).parse().unwrap();
        prop_assert!((back - x).abs() <= 5e-12 * x.abs());
    }

    #[test]
    fn flags_override_config(flag in 0.0..100.0f64, file in 0.0..100.0f64, step in 0.001..1.0f64) {
        let from_file = Options::from_config_str(&format!("e_min = {file}\nstep = {step}\n")).unwrap();
        let flags = Options { e_min: Some(flag), ..Default::default() };
        let merged = flags.or(from_file);
        prop_assert_eq!(merged.e_min, Some(flag));
        prop_assert_eq!(merged.step, Some(step));
    }
}

#[test]
fn winding_detects_real_zeros() {
    let f = |z: Complex64| 2.0 * (1.0 - (Complex64::i() * z).exp());
    assert_eq!(winding(f, 5.0, 8.0, -0.5, 1.0).round(), 1.0);
    assert_eq!(winding(f, 5.0, 14.0, -0.5, 1.0).round(), 2.0);
}
