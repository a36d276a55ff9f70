//! Real zeros of the Jost function.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::jost::jost_value;
use super::spectrum::BoundarySpectrum;
use crate::config::TOL;
use crate::error::{Result, XpError};

/// A bound-state energy and |F| there.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundState {
    pub energy: f64,
    pub residual: f64,
}

/// One twentieth of the mean level spacing 2π/log(E_max).
pub fn default_grid_step(e_max: f64) -> f64 {
    2.0 * PI / e_max.max(3.0).ln() / 20.0
}

/// Bound states in [e_min, e_max].
///
/// |F| is sampled on the grid (in parallel, merged in grid order); every local minimum
/// is refined by golden-section minimisation of |F|² over the neighbouring cells and then
/// Newton steps on Re(F/F'), and kept when |F| ≤ 1e−8. Roots closer than step/10 are merged.
pub fn find_bound_states(bs: &BoundarySpectrum, e_min: f64, e_max: f64, step: f64) -> Result<Vec<BoundState>> {
    if !(e_min < e_max) || !(step > 0.0) {
        return Err(XpError::InvalidRange(e_min, e_max));
    }
    let n = ((e_max - e_min) / step).ceil() as usize;
    let grid: Vec<f64> = (0..=n).map(|i| e_min + (e_max - e_min) * i as f64 / n as f64).collect();
    let mags = grid
        .par_iter()
        .map(|&e| jost_value(bs, e).map(|f| f.norm()))
        .collect::<Result<Vec<f64>>>()?;

    let candidates: Vec<usize> = (1..n).filter(|&i| mags[i] < mags[i - 1] && mags[i] <= mags[i + 1]).collect();
    let polished = candidates
        .par_iter()
        .map(|&i| polish(bs, grid[i - 1], grid[i + 1]))
        .collect::<Result<Vec<Option<BoundState>>>>()?;

    let mut out: Vec<BoundState> = Vec::new();
    for r in polished.into_iter().flatten() {
        if r.energy < e_min || r.energy > e_max {
            continue;
        }
        match out.last_mut() {
            Some(prev) if (r.energy - prev.energy).abs() < step / 10.0 => {
                if r.residual < prev.residual {
                    *prev = r;
                }
            }
            _ => out.push(r),
        }
    }
    Ok(out)
}

fn polish(bs: &BoundarySpectrum, lo: f64, hi: f64) -> Result<Option<BoundState>> {
    let f2 = |e: f64| jost_value(bs, e).map(|f| f.norm_sqr());
    let g = 0.5 * (5f64.sqrt() - 1.0);
    let (mut a, mut b) = (lo, hi);
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let (mut fc, mut fd) = (f2(c)?, f2(d)?);
    while b - a > 1e-7 * (1.0 + a.abs()) {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f2(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f2(d)?;
        }
    }
    let mut e = 0.5 * (a + b);
    let width = hi - lo;
    for _ in 0..30 {
        let h = 1e-6 * (1.0 + e.abs());
        let f = jost_value(bs, e)?;
        if f.norm() == 0.0 {
            break;
        }
        let fp = (jost_value(bs, e + h)? - jost_value(bs, e - h)?) / (2.0 * h);
        if fp.norm() == 0.0 {
            break;
        }
        let delta = (f / fp).re.clamp(-0.1 * width, 0.1 * width);
        let next = e - delta;
        if next < lo || next > hi {
            break;
        }
        if jost_value(bs, next)?.norm() > f.norm() {
            break;
        }
        e = next;
        if delta.abs() < 1e-14 * (1.0 + e.abs()) {
            break;
        }
    }
    let residual = jost_value(bs, e)?.norm();
    Ok((residual <= TOL.root).then_some(BoundState { energy: e, residual }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trap_levels() {
        let bs = BoundarySpectrum::trap_epsilon(-1.0, 1.0);
        let r = find_bound_states(&bs, 1.0, 20.0, 0.05).unwrap();
        let e: Vec<f64> = r.iter().map(|b| b.energy).collect();
        assert_eq!(e.len(), 3);
        for (k, x) in e.iter().enumerate() {
            assert!((x - 2.0 * PI * (k + 1) as f64).abs() < 1e-8);
        }
        let bs = BoundarySpectrum::trap_epsilon(1.0, 1.0);
        let r = find_bound_states(&bs, 1.0, 20.0, 0.05).unwrap();
        assert_eq!(r.len(), 3);
        assert!((r[0].energy - PI).abs() < 1e-8);
    }

    #[test]
    fn generic_trap_has_none() {
        let bs = BoundarySpectrum::trap(0.5, 0.9, 1.0, 0.0);
        assert!(find_bound_states(&bs, 0.5, 30.0, 0.05).unwrap().is_empty());
        let free = BoundarySpectrum::trap(0.0, 1.0, 1.0, 0.0);
        assert!(find_bound_states(&free, 0.5, 30.0, 0.05).unwrap().is_empty());
    }

    #[test]
    fn smooth_zeros() {
        let bs = BoundarySpectrum::bk_canonical(true);
        let r = find_bound_states(&bs, 10.0, 30.0, default_grid_step(30.0)).unwrap();
        let want = [14.517919628262, 20.654044969368, 25.491508214625, 29.738510300152];
        assert_eq!(r.len(), 4);
        for (b, w) in r.iter().zip(want) {
            assert!((b.energy - w).abs() < 1e-6, "{} vs {w}", b.energy);
        }
    }

    #[test]
    fn exact_bk_has_only_resonances() {
        let bs = BoundarySpectrum::bk_canonical(false);
        assert!(find_bound_states(&bs, 10.0, 30.0, 0.1).unwrap().is_empty());
    }
}
