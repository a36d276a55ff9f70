//! Acceptance suite: one PASS/FAIL line per criterion, tolerances as stated in the criteria.
//!
//! Run with `cargo test --test acceptance`. The process exits non-zero if any criterion fails.

mod common;

use std::f64::consts::PI;
use std::time::Instant;

use common::*;
use rand::{rngs::StdRng, Rng, SeedableRng};
use xp_spectra::riemann::{
    count_qm, riemann_boundary_default, zeta_factorized, RiemannConfig, Staircase, Truncation,
};
use xp_spectra::semiclassical::{boundary_from_nfl, nfl_semiclassical, FluctuationDensity, PhaseBoundary};
use xp_spectra::special_fn::{hilbert_pv, omega_minus, omega_plus, theta, theta_asymptotic};
use xp_spectra::spectral_solver::{default_grid_step, find_bound_states, s_integral, BoundarySpectrum};
use xp_spectra::wavefn::{bound_norm, psi_bound_smooth, smooth_zero};
use xp_spectra::Complex64;

type Outcome = Result<(bool, String), String>;

fn within(got: &[f64], want: &[f64], tol: f64) -> (bool, f64) {
    if got.len() < want.len() {
        return (false, f64::INFINITY);
    }
    let worst = got.iter().zip(want).map(|(g, w)| (g - w).abs()).fold(0.0, f64::max);
    (worst <= tol, worst)
}

fn energies(bs: &BoundarySpectrum, a: f64, b: f64) -> Result<Vec<f64>, String> {
    Ok(find_bound_states(bs, a, b, default_grid_step(b))
        .map_err(|e| e.to_string())?
        .iter()
        .map(|s| s.energy)
        .collect())
}

fn smooth_zeros() -> Outcome {
    let start = Instant::now();
    let got = energies(&BoundarySpectrum::bk_canonical(true), 10.0, 30.0)?;
    let secs = start.elapsed().as_secs_f64();
    let (ok, worst) = within(&got, &[14.5179, 20.654, 25.4915], 0.001);
    Ok((ok && secs < 1.0, format!("max deviation {worst:.2e} (tol 1e-3), {secs:.3} s (limit 1 s)")))
}

fn riemann_bound_states() -> Outcome {
    let want = [14.1347, 21.022, 25.0109];
    let start = Instant::now();
    let rs = energies(&riemann_boundary_default(RiemannConfig::canonical(Truncation::RsMain)), 10.0, 30.0)?;
    let bk = energies(
        &riemann_boundary_default(RiemannConfig::canonical(Truncation::BkSmoothed { k: 4.0 })),
        10.0,
        30.0,
    )?;
    let secs = start.elapsed().as_secs_f64();
    let (ok_rs, w_rs) = within(&rs, &want, 0.01);
    let (ok_bk, w_bk) = within(&bk, &want, 0.003);
    Ok((
        ok_rs && ok_bk && rs.len() == 3 && bk.len() == 3 && secs < 10.0,
        format!("rs max dev {w_rs:.2e} (tol 1e-2), bk max dev {w_bk:.2e} (tol 3e-3), {secs:.2} s (limit 10 s)"),
    ))
}

fn trap_spectrum() -> Outcome {
    let minus = energies(&BoundarySpectrum::trap_epsilon(-1.0, 1.0), 1.0, 20.0)?;
    let plus = energies(&BoundarySpectrum::trap_epsilon(1.0, 1.0), 1.0, 20.0)?;
    let want_minus: Vec<f64> = (1..=3).map(|n| 2.0 * PI * n as f64).collect();
    let want_plus: Vec<f64> = (0..3).map(|n| 2.0 * PI * (n as f64 + 0.5)).collect();
    let (ok_m, w_m) = within(&minus, &want_minus, 1e-8);
    let (ok_p, w_p) = within(&plus, &want_plus, 1e-8);
    Ok((
        ok_m && ok_p && minus.len() == 3 && plus.len() == 3,
        format!("eps=-1 max dev {w_m:.1e}, eps=+1 max dev {w_p:.1e} (tol 1e-8)"),
    ))
}

fn counting_agreement() -> Outcome {
    let excluded = |t: f64| {
        ZETA_ZEROS.iter().any(|z| (t - z).abs() < 0.05)
            || (1..=3).map(|k| 2.0 * PI * (k * k) as f64).any(|p| (t - p).abs() < 0.05)
    };
    let mut details = Vec::new();
    let mut ok = true;
    for trunc in [Truncation::BkSmoothed { k: 4.0 }, Truncation::RsMain] {
        let st = Staircase::scan(40.0, trunc).map_err(|e| e.to_string())?;
        let cfg = RiemannConfig::canonical(trunc);
        let mut worst: f64 = 0.0;
        let mut worst_at = 0.0;
        for k in 0..=3000 {
            let t = 10.0 + 0.01 * k as f64;
            if excluded(t) {
                continue;
            }
            let d = (count_qm(&cfg, t).map_err(|e| e.to_string())? - st.count(t) as f64).abs();
            if d > worst {
                worst = d;
                worst_at = t;
            }
        }
        ok &= worst <= 0.6;
        let n30 = st.count(30.0);
        ok &= n30 == 3;
        details.push(format!("{}: max |N_QM-N_R| {worst:.3} at E={worst_at:.2} (tol 0.6), N_R(30)={n30}", trunc.label()));
    }
    let oracle = oracle_zero_count(10.0, 30.0);
    ok &= oracle == 3;
    details.push(format!("oracle N_R(30)={oracle}"));
    Ok((ok, details.join("; ")))
}

fn factorization() -> Outcome {
    let grid: Vec<f64> = (0..=1800).map(|k| 10.0 + 0.05 * k as f64).filter(|t| *t < 100.0).collect();
    let worst = |trunc: Truncation| -> Result<f64, String> {
        let cfg = RiemannConfig::canonical(trunc);
        let mut w: f64 = 0.0;
        for &t in &grid {
            let oracle = zeta_em(Complex64::new(0.5, -t));
            w = w.max((oracle - zeta_factorized(&cfg, t).map_err(|e| e.to_string())?).norm());
        }
        Ok(w)
    };
    let rs = worst(Truncation::RsMain)?;
    let mut ok = rs <= 0.05;
    let mut details = vec![format!("rs max {rs:.4} (tol 0.05)")];
    for k in [3.0, 4.0, 6.0] {
        let w = worst(Truncation::BkSmoothed { k })?;
        ok &= w <= 0.02;
        details.push(format!("bk K={k} max {w:.4} (tol 0.02)"));
    }
    Ok((ok, details.join(", ")))
}

fn shuffle_relation() -> Outcome {
    let mut rng = StdRng::seed_from_u64(20240611);
    let gaussian = |rng: &mut StdRng| Gaussian {
        alpha: rng.gen_range(0.5..2.0),
        mu: rng.gen_range(-1.0..1.0),
        sigma: rng.gen_range(0.3..1.5),
    };
    let mut shuffle: f64 = 0.0;
    let mut oracle: f64 = 0.0;
    for _ in 0..10 {
        let (f, g) = (gaussian(&mut rng), gaussian(&mut rng));
        let (fh, gh) = (move |w: f64| f.hat(w), move |w: f64| g.hat(w));
        for _ in 0..20 {
            let e = rng.gen_range(-5.0..5.0);
            let s_fg = s_integral(fh, gh, e).map_err(|e| e.to_string())?;
            let s_gf = s_integral(gh, fh, -e).map_err(|e| e.to_string())?;
            shuffle = shuffle.max((s_fg + s_gf - f.hat(e) * g.hat(-e)).norm());
            oracle = oracle.max((s_fg - s_double_quadrature(&f, &g, e)).norm());
            oracle = oracle.max((s_gf - s_double_quadrature(&g, &f, -e)).norm());
        }
    }
    Ok((
        shuffle <= 1e-8 && oracle <= 1e-8,
        format!("200 samples: shuffle residual {shuffle:.1e}, |S - double quadrature| {oracle:.1e} (tol 1e-8)"),
    ))
}

fn hilbert_identities() -> Outcome {
    let mut constant: f64 = 0.0;
    for e in [-7.0, 0.0, 3.3, 25.0] {
        for c in [Complex64::new(1.0, 0.0), Complex64::new(2.0, -1.0)] {
            constant = constant.max(hilbert_pv(|_| c, e, 40.0).map_err(|e| e.to_string())?.norm());
        }
    }
    let mut omega: f64 = 0.0;
    for k in 0..10 {
        let e = -20.0 + 6.5 * k as f64;
        let hp = hilbert_pv(omega_plus, e, 40.0).map_err(|e| e.to_string())?;
        let hm = hilbert_pv(omega_minus, e, 40.0).map_err(|e| e.to_string())?;
        omega = omega.max((hp - omega_plus(e)).norm()).max((hm + omega_minus(e)).norm());
    }
    Ok((
        constant <= 1e-8 && omega <= 1e-6,
        format!("H[const] {constant:.1e} (tol 1e-8), H[Omega+-] -+ Omega+- {omega:.1e} at 10 energies (tol 1e-6)"),
    ))
}

fn wave_function_decay() -> Outcome {
    let bs = BoundarySpectrum::bk_canonical(true);
    let mut ok = true;
    let mut details = Vec::new();
    for m in 1..=3 {
        let e = smooth_zero(m).map_err(|e| e.to_string())?;
        let scale = bound_norm(&bs, e).map_err(|e| e.to_string())?.norm_density.sqrt();
        let psi = |x: f64| psi_bound_smooth(e, x).map(|p| p.norm() / scale).map_err(|e| e.to_string());
        let tail = 50f64.sqrt() * psi(50.0)?;
        let mut peak: f64 = 0.0;
        let mut forbidden: f64 = 0.0;
        for k in 1..=5000 {
            let x = 0.01 * k as f64;
            let v = psi(x)?;
            peak = peak.max(v);
            if x < 0.5 {
                forbidden = forbidden.max(v);
            }
        }
        for k in 1..=100 {
            forbidden = forbidden.max(psi(1e-4 * k as f64)?);
        }
        let ratio = forbidden / peak;
        ok &= tail <= 0.05 && ratio <= 0.02;
        details.push(format!("E={e:.4}: |sqrt(x)psi(50)| {tail:.4} (tol 0.05), max_(x<0.5)|psi|/max|psi| {ratio:.3} (tol 0.02)"));
    }
    Ok((ok, details.join("; ")))
}

fn norms() -> Outcome {
    let bs = BoundarySpectrum::bk_canonical(true);
    let mut gaps = Vec::new();
    for m in 1..=3 {
        let e = smooth_zero(m).map_err(|e| e.to_string())?;
        gaps.push(bound_norm(&bs, e).map_err(|e| e.to_string())?.relative_gap);
    }
    let mut trap: f64 = 0.0;
    for (eps, q) in [(-1.0, 1.0), (1.0, 1.0), (-1.0, 2.5)] {
        let bs = BoundarySpectrum::trap_epsilon(eps, q);
        let e = if eps < 0.0 { 2.0 * PI / q } else { PI / q };
        trap = trap.max((bound_norm(&bs, e).map_err(|e| e.to_string())?.norm_quadrature - 2.0 * q).abs());
    }
    let worst_gap = gaps.iter().cloned().fold(0.0, f64::max);
    Ok((
        worst_gap <= 0.05 && trap <= 1e-6,
        format!(
            "smooth-zero gaps {:.2}% {:.2}% {:.2}% (tol 5%), trap |norm - 2q| {trap:.1e} (tol 1e-6)",
            100.0 * gaps[0],
            100.0 * gaps[1],
            100.0 * gaps[2]
        ),
    ))
}

fn semiclassical_round_trip() -> Outcome {
    let eps = 0.001;
    let profiles: [(&str, FluctuationDensity); 3] = [
        (
            "sin^3(E/2)",
            FluctuationDensity::new(move |e| eps * (e / 2.0).sin().powi(3), move |e| {
                1.5 * eps * (e / 2.0).sin().powi(2) * (e / 2.0).cos()
            }),
        ),
        (
            "sin(E)sin^2(E/2)",
            FluctuationDensity::new(move |e| eps * e.sin() * (e / 2.0).sin().powi(2), move |e| {
                eps * (e.cos() * (e / 2.0).sin().powi(2) + 0.5 * e.sin().powi(2))
            }),
        ),
        (
            "sin(3E/2)sin^2(E/2)",
            FluctuationDensity::new(move |e| eps * (1.5 * e).sin() * (e / 2.0).sin().powi(2), move |e| {
                eps * (1.5 * (1.5 * e).cos() * (e / 2.0).sin().powi(2) + 0.5 * (1.5 * e).sin() * e.sin())
            }),
        ),
    ];
    let grid: Vec<f64> = (0..6400).map(|k| 2.0 * PI + 0.01 * k as f64).collect();
    let mut ok = true;
    let mut details = Vec::new();
    for (name, d) in &profiles {
        let b = boundary_from_nfl(d, 1.0, 2.0 * PI, &grid).map_err(|e| e.to_string())?;
        let mut worst: f64 = 0.0;
        for k in 0..=200 {
            let e = 10.0 + 0.25 * k as f64;
            worst = worst.max((nfl_semiclassical(&b, e).map_err(|e| e.to_string())? - d.n_fl(e)).abs());
        }
        ok &= worst <= 1e-3;
        details.push(format!("{name} {worst:.1e}"));
    }
    let bk = PhaseBoundary::berry_keating(1.0).map_err(|e| e.to_string())?;
    let mut bk_worst: f64 = 0.0;
    for k in 0..=186 {
        let e = 7.0 + 0.5 * k as f64;
        bk_worst = bk_worst.max(nfl_semiclassical(&bk, e).map_err(|e| e.to_string())?.abs());
    }
    ok &= bk_worst <= 1e-10;
    Ok((ok, format!("round trip {} (tol 1e-3); BK n_fl {bk_worst:.1e} (tol 1e-10)", details.join(", "))))
}

fn asymptotic_phase() -> Outcome {
    let mut worst: f64 = 0.0;
    for k in 0..=960 {
        let e = 20.0 + 0.5 * k as f64;
        worst = worst.max((theta(e) - theta_asymptotic(e).map_err(|e| e.to_string())?).abs() * e);
    }
    Ok((worst <= 1.0, format!("max |theta - theta_asym| E on [20, 500] = {worst:.4} (tol 1.0)")))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("smooth zeros", smooth_zeros),
        ("Riemann zeros as bound states", riemann_bound_states),
        ("trap spectrum", trap_spectrum),
        ("counting agreement", counting_agreement),
        ("factorization", factorization),
        ("shuffle relation", shuffle_relation),
        ("Hilbert identities", hilbert_identities),
        ("wave-function decay", wave_function_decay),
        ("norms", norms),
        ("semiclassical round trip", semiclassical_round_trip),
        ("asymptotic phase", asymptotic_phase),
    ];
    let mut failures = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let (ok, detail) = match check() {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        if !ok {
            failures += 1;
        }
        println!("{} [{:>2}] {name}: {detail}", if ok { "PASS" } else { "FAIL" }, k + 1);
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
