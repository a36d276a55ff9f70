use std::f64::consts::PI;
use std::io::Write;

use rayon::prelude::*;

use super::{Command, Kind, Options, Profile, Table, TruncationArg};
use crate::config::TOL;
use crate::error::{Result, XpError};
use crate::riemann::{
    count_qm, euler_truncated, n_fl_exact_with, riemann_boundary_default, smooth_count, RiemannConfig,
    Staircase,
};
use crate::semiclassical::{boundary_from_nfl, nfl_semiclassical, solve_intersections, FluctuationDensity, PhaseBoundary};
use crate::spectral_solver::{
    default_grid_step, find_bound_states, jost_value, scattering_phase, trap_wavefunction, BoundState,
    BoundarySpectrum,
};
use crate::special_fn::phase::PhaseUnwrapper;
use crate::wavefn::{bound_norm, psi_bound_smooth, TruncatedWaveFunction};
use crate::Complex64;

/// Runs a command on merged options. Notes go to `log`.
pub fn execute(cmd: Command, o: &Options, log: &mut dyn Write) -> Result<Table> {
    match cmd {
        Command::Count => count(o),
        Command::Zeros => zeros(o),
        Command::Wavefn => wavefn(o, log),
        Command::Euler => euler(o),
        Command::Trap => trap(o),
        Command::Boundary => boundary(o),
    }
}

/// Tags an error with the module and energy it came from.
fn at(module: &'static str, e: f64) -> impl Fn(XpError) -> XpError {
    move |err| match err {
        XpError::Numerical { .. } | XpError::Usage(_) | XpError::Io(_) => err,
        other => XpError::Numerical {
            module,
            energy: e,
            detail: other.to_string(),
        },
    }
}

fn range(o: &Options, lo: f64, hi: f64) -> Result<(f64, f64)> {
    let (a, b) = (o.e_min.unwrap_or(lo), o.e_max.unwrap_or(hi));
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(XpError::Usage(format!("empty energy range [{a}, {b}]: need --e-min < --e-max")));
    }
    Ok((a, b))
}

fn positive(name: &str, v: f64) -> Result<f64> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(XpError::Usage(format!("{name} must be positive, got {v}")))
    }
}

/// Largest grid a command will allocate.
pub const MAX_GRID: usize = 2_000_000;

/// Largest energy accepted by commands that evaluate f(t).
pub const MAX_RIEMANN_ENERGY: f64 = 1e4;

/// a, a + h, ... up to b inclusive (within 1e−9 steps).
pub fn energy_grid(a: f64, b: f64, h: f64) -> Result<Vec<f64>> {
    let n = ((b - a) / h + 1e-9).floor();
    if !(n < MAX_GRID as f64) {
        return Err(XpError::Usage(format!(
            "grid from {a} to {b} with step {h} exceeds {MAX_GRID} points"
        )));
    }
    Ok((0..=n as usize).map(|k| a + k as f64 * h).collect())
}

fn riemann_range(a: f64, b: f64) -> Result<()> {
    if b > MAX_RIEMANN_ENERGY || a < -MAX_RIEMANN_ENERGY {
        return Err(XpError::Usage(format!("energies beyond {MAX_RIEMANN_ENERGY} are not supported")));
    }
    Ok(())
}

fn trap_params(o: &Options) -> Result<(f64, f64)> {
    let eps = o.epsilon.unwrap_or(-1.0);
    if eps.abs() != 1.0 {
        return Err(XpError::Usage(format!("--epsilon must be +1 or -1, got {eps}")));
    }
    Ok((eps, positive("--q-ab", o.q_ab.unwrap_or(1.0))?))
}

fn spectrum(o: &Options, kind: Kind) -> Result<(BoundarySpectrum, &'static str)> {
    Ok(match kind {
        Kind::Smooth => (BoundarySpectrum::bk_canonical(true), "smooth"),
        Kind::Riemann => (
            riemann_boundary_default(RiemannConfig::canonical(o.truncation_or(TruncationArg::Bk)?)),
            "riemann",
        ),
        Kind::Trap => {
            let (eps, q) = trap_params(o)?;
            (BoundarySpectrum::trap_epsilon(eps, q), "trap")
        }
    })
}

fn count(o: &Options) -> Result<Table> {
    let (a, b) = range(o, 10.0, 40.0)?;
    if a < 0.0 {
        return Err(XpError::Usage("count needs --e-min >= 0".into()));
    }
    let h = positive("--step", o.step.unwrap_or(0.01))?;
    riemann_range(a, b)?;
    let trunc = o.truncation_or(TruncationArg::Bk)?;
    let cfg = RiemannConfig::canonical(trunc);
    let st = Staircase::scan(b, trunc).map_err(at("riemann::counting", b))?;
    let grid = energy_grid(a, b, h)?;
    let rows = grid
        .par_iter()
        .map(|&e| {
            let n_fl = if e.abs() <= 2.0 * PI { 0.0 } else { trunc.value(e).map_err(at("riemann::siegel", e))?.n_fl };
            let smooth = smooth_count(e);
            Ok(vec![
                e.into(),
                st.count(e).into(),
                smooth.into(),
                (smooth + 0.5).into(),
                count_qm(&cfg, e).map_err(at("riemann", e))?.into(),
                n_fl.into(),
                n_fl_exact_with(&st, e).value.into(),
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    let mut t = Table::new(&["E", "N_R", "N_smooth", "N_smooth_plus_half", "N_QM", "n_fl", "N_fl_exact"]);
    rows.into_iter().for_each(|r| t.push(r));
    Ok(t)
}

fn default_range(kind: Kind) -> (f64, f64) {
    match kind {
        Kind::Trap => (1.0, 20.0),
        _ => (10.0, 30.0),
    }
}

fn find(bs: &BoundarySpectrum, a: f64, b: f64, step: Option<f64>) -> Result<Vec<BoundState>> {
    let h = match step {
        Some(h) => positive("--step", h)?,
        None => default_grid_step(b),
    };
    find_bound_states(bs, a, b, h).map_err(at("spectral_solver::bound", a))
}

fn zeros(o: &Options) -> Result<Table> {
    let kind = o.kind.unwrap_or(Kind::Riemann);
    let (lo, hi) = default_range(kind);
    let (a, b) = range(o, lo, hi)?;
    if kind == Kind::Riemann {
        riemann_range(a, b)?;
    }
    let (bs, label) = spectrum(o, kind)?;
    let mut t = Table::new(&["index", "E", "residual", "kind"]);
    for (k, s) in find(&bs, a, b, o.step)?.iter().enumerate() {
        t.push(vec![(k + 1).into(), s.energy.into(), s.residual.into(), label.into()]);
    }
    Ok(t)
}

/// 60 geometric points on [0.01, 1) followed by a linear grid from 1 to x_max.
pub fn x_grid(x_max: f64, h: f64) -> Result<Vec<f64>> {
    let mut xs: Vec<f64> = (0..60).map(|k| 0.01 * 100f64.powf(k as f64 / 60.0)).collect();
    xs.extend(energy_grid(1.0, x_max, h)?);
    Ok(xs)
}

fn select_state(bs: &BoundarySpectrum, kind: Kind, o: &Options, log: &mut dyn Write) -> Result<f64> {
    if let Some(e) = o.energy {
        if kind == Kind::Riemann {
            riemann_range(e, e)?;
        }
        let near = find(bs, e - 0.05, e + 0.05, Some(0.005))?;
        if let Some(s) = near.iter().min_by(|x, y| (x.energy - e).abs().total_cmp(&(y.energy - e).abs())) {
            if (s.energy - e).abs() > 1e-12 {
                let _ = writeln!(log, "note: using the zero at E = {:.12} nearest to {e}", s.energy);
            }
            return Ok(s.energy);
        }
        let wide = find(bs, (e - 5.0).max(1e-3), e + 5.0, None)?;
        let nearest = wide
            .iter()
            .map(|s| s.energy)
            .min_by(|x, y| (x - e).abs().total_cmp(&(y - e).abs()));
        return Err(XpError::NotARoot {
            energy: e,
            residual: jost_value(bs, e)?.norm(),
            nearest,
        });
    }
    let index = o.index.unwrap_or(1);
    if index == 0 {
        return Err(XpError::Usage("--index is 1-based".into()));
    }
    let (lo, hi) = match kind {
        Kind::Trap => (0.1, 50.0),
        _ => (10.0, 50.0),
    };
    let (a, b) = range(o, lo, hi)?;
    let all = find(bs, a, b, None)?;
    all.get(index - 1).map(|s| s.energy).ok_or_else(|| {
        XpError::Usage(format!("--index {index}: only {} bound states in [{a}, {b}]", all.len()))
    })
}

fn wavefn(o: &Options, log: &mut dyn Write) -> Result<Table> {
    let kind = o.kind.unwrap_or(Kind::Smooth);
    let (bs, _) = spectrum(o, kind)?;
    let e = select_state(&bs, kind, o, log)?;
    let x_max = positive("--x-max", o.x_max.unwrap_or(10.0))?;
    if x_max <= 1.0 {
        return Err(XpError::Usage(format!("--x-max must exceed 1, got {x_max}")));
    }
    let xs = x_grid(x_max, positive("--step", o.step.unwrap_or(0.05))?)?;
    let psi: Vec<Complex64> = match kind {
        Kind::Smooth => {
            let scale = bound_norm(&bs, e).map_err(at("wavefn", e))?.norm_density.sqrt();
            xs.par_iter()
                .map(|&x| psi_bound_smooth(e, x).map(|p| p / scale).map_err(at("wavefn", e)))
                .collect::<Result<_>>()?
        }
        Kind::Riemann => {
            let lambda = positive("--lambda", o.lambda.unwrap_or(60.0))?;
            let scale = bound_norm(&bs, e).map_err(at("wavefn", e))?.norm_density.sqrt();
            let w = TruncatedWaveFunction::new(&bs, e, lambda).map_err(at("wavefn", e))?;
            w.samples(&xs).into_iter().map(|s| s.psi / scale).collect()
        }
        Kind::Trap => {
            // Unit L² norm: |x^{−1/2}|² integrates to q_ab over the well.
            let (eps, q) = trap_params(o)?;
            let a0 = (2.0 * eps.abs()).sqrt();
            xs.iter()
                .map(|&x| trap_wavefunction(a0, a0 * eps, q, 0.0, e, x).map(|p| p / q.sqrt()))
                .collect::<Result<_>>()
                .map_err(at("spectral_solver::trap", e))?
        }
    };
    let mut t = Table::new(&["x", "re_psi", "im_psi", "abs_psi"]);
    for (x, p) in xs.iter().zip(psi) {
        t.push(vec![(*x).into(), p.re.into(), p.im.into(), p.norm().into()]);
    }
    Ok(t)
}

fn euler(o: &Options) -> Result<Table> {
    let (a, b) = range(o, 50.0, 100.0)?;
    if !(a > 8.0 * PI) {
        return Err(XpError::Usage(format!(
            "euler needs --e-min > 8 pi = {:.6} so that the truncation keeps at least two terms",
            8.0 * PI
        )));
    }
    let h = positive("--step", o.step.unwrap_or(0.01))?;
    riemann_range(a, b)?;
    let trunc = o.truncation_or(TruncationArg::Main)?;
    let rows = energy_grid(a, b, h)?
        .par_iter()
        .map(|&e| {
            let f = trunc.f(e).map_err(at("riemann::siegel", e))?;
            let z = euler_truncated(e).map_err(at("riemann::euler", e))?;
            Ok(vec![e.into(), f.norm().into(), f.arg().into(), z.norm().into(), z.arg().into()])
        })
        .collect::<Result<Vec<_>>>()?;
    let mut t = Table::new(&["E", "abs_f", "arg_f", "abs_zeta_e", "arg_zeta_e"]);
    rows.into_iter().for_each(|r| t.push(r));
    Ok(t)
}

fn trap(o: &Options) -> Result<Table> {
    let (a, b) = range(o, 0.1, 20.0)?;
    let h = positive("--step", o.step.unwrap_or(0.01))?;
    let (eps, q) = trap_params(o)?;
    let bs = BoundarySpectrum::trap_epsilon(eps, q);
    let grid = energy_grid(a, b, h)?;
    let samples = grid
        .par_iter()
        .map(|&e| {
            let f = jost_value(&bs, e).map_err(at("spectral_solver::jost", e))?;
            let raw = if f.norm() <= TOL.root { f64::NAN } else { scattering_phase(&bs, e).map_err(at("spectral_solver::jost", e))? };
            Ok((f, raw))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut unwrap = PhaseUnwrapper::new();
    let mut t = Table::new(&["E", "re_F", "im_F", "abs_F", "scattering_phase"]);
    for (e, (f, raw)) in grid.iter().zip(samples) {
        let phase = if raw.is_nan() { f64::NAN } else { unwrap.push(raw).theta };
        t.push(vec![(*e).into(), f.re.into(), f.im.into(), f.norm().into(), phase.into()]);
    }
    Ok(t)
}

/// The synthetic fluctuation profile and its derivative.
pub fn profile_density(p: Profile, eps: f64) -> FluctuationDensity {
    match p {
        Profile::Bk => FluctuationDensity::new(|_| 0.0, |_| 0.0),
        Profile::Sin3 => FluctuationDensity::new(
            move |e| eps * (e / 2.0).sin().powi(3),
            move |e| 1.5 * eps * (e / 2.0).sin().powi(2) * (e / 2.0).cos(),
        ),
        Profile::SinSin2 => FluctuationDensity::new(
            move |e| eps * e.sin() * (e / 2.0).sin().powi(2),
            move |e| eps * (e.cos() * (e / 2.0).sin().powi(2) + 0.5 * e.sin().powi(2)),
        ),
        Profile::Sin3Half => FluctuationDensity::new(
            move |e| eps * (1.5 * e).sin() * (e / 2.0).sin().powi(2),
            move |e| eps * (1.5 * (1.5 * e).cos() * (e / 2.0).sin().powi(2) + 0.5 * (1.5 * e).sin() * e.sin()),
        ),
    }
}

fn boundary(o: &Options) -> Result<Table> {
    let (a, b) = range(o, 10.0, 60.0)?;
    if !(a > 2.0 * PI) {
        return Err(XpError::Usage(format!("boundary needs --e-min > 2 pi = {:.6}", 2.0 * PI)));
    }
    let h = positive("--step", o.step.unwrap_or(0.1))?;
    let profile = o.profile.unwrap_or(Profile::Sin3);
    let eps = o.amplitude.unwrap_or(0.001);
    let d = profile_density(profile, eps);
    let (l_x, l_p) = (1.0, 2.0 * PI);
    let bnd = match profile {
        Profile::Bk => PhaseBoundary::berry_keating(l_x)?,
        _ => {
            let table_grid = energy_grid(l_x * l_p, b + 5.0, 0.01)?;
            boundary_from_nfl(&d, l_x, l_p, &table_grid).map_err(|e| match e {
                XpError::Monotonicity(..) => XpError::Usage(format!("{e}; lower --amplitude")),
                other => other,
            })?
        }
    };
    let rows = energy_grid(a, b, h)?
        .par_iter()
        .map(|&e| {
            let ip = solve_intersections(&bnd, e).map_err(at("semiclassical", e))?;
            let n = nfl_semiclassical(&bnd, e).map_err(at("semiclassical", e))?;
            Ok(vec![e.into(), ip.x_m.into(), bnd.p_cl(ip.x_m).into(), d.n_fl(e).into(), n.into()])
        })
        .collect::<Result<Vec<_>>>()?;
    let mut t = Table::new(&["E", "x_M", "p_M", "n_fl_target", "n_fl_semiclassical"]);
    rows.into_iter().for_each(|r| t.push(r));
    Ok(t)
}
