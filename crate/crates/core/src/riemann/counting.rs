//! Zero staircase N_R(t), the exact fluctuation N_fl(t) and branch tracking of n_fl.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::siegel::{nu_unchecked, Truncation};
use crate::error::Result;
use crate::roots::{brackets, brent};
use crate::special_fn::phase::theta;

/// First ordinate scanned for zeros; there are none below 14.
pub const SCAN_START: f64 = 10.0;
const SCAN_STEP: f64 = 0.02;

/// Zeros of Z(t) = 2 Re(e^{iθ} f(t)) on (`SCAN_START`, t_max].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Staircase {
    zeros: Vec<f64>,
    t_max: f64,
}

impl Staircase {
    /// Sign changes of Z on a 0.02 grid, refined by Brent.
    /// Sign changes across discontinuities of the truncated Z (|Z| not small at the root) are dropped.
    pub fn scan(t_max: f64, truncation: Truncation) -> Result<Self> {
        Ok(Staircase {
            zeros: riemann_zeros(SCAN_START, t_max, truncation)?,
            t_max,
        })
    }

    pub fn zeros(&self) -> &[f64] {
        &self.zeros
    }

    pub fn t_max(&self) -> f64 {
        self.t_max
    }

    /// N_R(t): number of zeros ≤ t.
    pub fn count(&self, t: f64) -> usize {
        self.zeros.partition_point(|&z| z <= t)
    }

    /// Distance from t to the closest zero.
    pub fn distance_to_zero(&self, t: f64) -> f64 {
        self.zeros.iter().map(|z| (z - t).abs()).fold(f64::INFINITY, f64::min)
    }
}

/// Zeros of Z on [e_min, e_max].
pub fn riemann_zeros(e_min: f64, e_max: f64, truncation: Truncation) -> Result<Vec<f64>> {
    let n = ((e_max - e_min) / SCAN_STEP).ceil().max(1.0) as usize;
    let grid: Vec<f64> = (0..=n).map(|i| e_min + (e_max - e_min) * i as f64 / n as f64).collect();
    let z = |t: f64| truncation.hardy_z(t).unwrap_or(f64::NAN);
    let mut out = Vec::new();
    for (a, b) in brackets(z, &grid) {
        let r = brent(z, a, b, 1e-12)?;
        if z(r).abs() < 1e-6 {
            out.push(r);
        }
    }
    Ok(out)
}

/// N_fl(t) with a flag for t within 1e−4 of a zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NflExact {
    pub value: f64,
    pub near_zero: bool,
}

/// ⟨N(t)⟩ = θ(t)/π + 1.
pub fn smooth_count(t: f64) -> f64 {
    theta(t) / PI + 1.0
}

/// N_fl(t) = N_R(t) − ⟨N(t)⟩ from a precomputed staircase (t ≤ staircase.t_max()).
pub fn n_fl_exact_with(st: &Staircase, t: f64) -> NflExact {
    NflExact {
        value: st.count(t) as f64 - smooth_count(t),
        near_zero: st.distance_to_zero(t) < 1e-4,
    }
}

/// N_fl(t), scanning the zeros of Z below t first.
pub fn n_fl_exact(t: f64, truncation: Truncation) -> Result<NflExact> {
    let st = Staircase::scan(t + 1e-3, truncation)?;
    Ok(n_fl_exact_with(&st, t))
}

/// What caused a discontinuity of the principal n_fl.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum JumpKind {
    NuIncrement,
    AxisCrossing,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NflJump {
    pub t: f64,
    pub kind: JumpKind,
    /// Change of the principal n_fl across the grid cell.
    pub delta: f64,
}

/// Principal and unwound n_fl along a monotone grid (step ≤ 0.01 recommended).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NflTrack {
    pub principal: Vec<f64>,
    pub continuous: Vec<f64>,
    pub jumps: Vec<NflJump>,
}

/// Sequential pass over the grid: unwinds arg f / π and labels the discontinuities.
pub fn track_nfl(grid: &[f64], truncation: Truncation) -> Result<NflTrack> {
    let mut principal = Vec::with_capacity(grid.len());
    for &t in grid {
        principal.push(truncation.value(t)?.n_fl);
    }
    let mut continuous = Vec::with_capacity(grid.len());
    let mut jumps = Vec::new();
    let mut shift = 0.0;
    for (i, &p) in principal.iter().enumerate() {
        if i > 0 {
            let d = p - principal[i - 1];
            let (t0, t1) = (grid[i - 1], grid[i]);
            let nu_changed = nu_unchecked(t0) != nu_unchecked(t1);
            if d.abs() > 1.0 {
                shift -= 2.0 * d.signum();
                jumps.push(NflJump {
                    t: 0.5 * (t0 + t1),
                    kind: JumpKind::AxisCrossing,
                    delta: d,
                });
            } else if nu_changed && matches!(truncation, Truncation::MainSum | Truncation::RsMain) {
                jumps.push(NflJump {
                    t: 0.5 * (t0 + t1),
                    kind: JumpKind::NuIncrement,
                    delta: d,
                });
            }
        }
        continuous.push(p + shift);
    }
    Ok(NflTrack {
        principal,
        continuous,
        jumps,
    })
}
