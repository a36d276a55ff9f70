//! Phase-space counting for E = xp with Planck-cell boundaries.
//!
//! The region x ≥ p_cl-delimited, p ≥ x_cl-delimited, xp ≤ E contains N(E) states of
//! area 2π. With the Berry-Keating boundaries p ≥ l_p, x ≥ l_x this reproduces the smooth
//! Riemann count; general boundaries add a fluctuation term n_fl(E), and a prescribed
//! n_fl(E) can be turned back into a boundary.

use std::f64::consts::PI;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Result, XpError};
use crate::quad;
use crate::riemann::euler::primes_up_to;
use crate::roots::brent;
use crate::special_fn::phase::theta;

fn require_positive(what: &'static str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(XpError::Domain {
            what,
            value: v,
            expected: "a positive finite value",
        })
    }
}

/// Berry-Keating count (E/2π)(log(E/2π) − 1) + 1.
pub fn count_bk(e: f64) -> Result<f64> {
    require_positive("count_bk", e)?;
    let u = e / (2.0 * PI);
    Ok(u * (u.ln() - 1.0) + 1.0)
}

/// Constant added to θ(E)/π in the smooth count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CountOffset {
    /// ⟨N(E)⟩ = θ(E)/π + 1, the smooth part of the Riemann counting formula.
    One,
    /// θ(E)/π + 3/2, whose integer crossings are the smooth zeros cos θ = 0.
    ThreeHalves,
}

impl CountOffset {
    pub fn value(self) -> f64 {
        match self {
            CountOffset::One => 1.0,
            CountOffset::ThreeHalves => 1.5,
        }
    }
}

/// θ(E)/π + offset with the exact phase.
pub fn count_smooth(e: f64, offset: CountOffset) -> Result<f64> {
    require_positive("count_smooth", e)?;
    Ok(theta(e) / PI + offset.value())
}

/// Count with a Connes cutoff Λ: (E/π) log Λ − (E/2π)(log(E/2π) − 1).
pub fn count_connes(e: f64, lambda: f64) -> Result<f64> {
    require_positive("count_connes E", e)?;
    require_positive("count_connes Lambda", lambda)?;
    let u = e / (2.0 * PI);
    Ok(e / PI * lambda.ln() - u * (u.ln() - 1.0))
}

/// Prime-sum fluctuation −(1/π) Σ_{p ≤ p_max} Σ_{m ≤ m_max} sin(m E log p)/(m p^{m/2}).
pub fn nfl_prime_sum(e: f64, p_max: u64, m_max: u32) -> Result<f64> {
    if p_max < 2 {
        return Err(XpError::Domain {
            what: "nfl_prime_sum p_max",
            value: p_max as f64,
            expected: "p_max >= 2",
        });
    }
    if m_max < 1 {
        return Err(XpError::Domain {
            what: "nfl_prime_sum m_max",
            value: 0.0,
            expected: "m_max >= 1",
        });
    }
    let mut s = 0.0;
    for p in primes_up_to(p_max) {
        let lp = (p as f64).ln();
        for m in 1..=m_max {
            let mf = m as f64;
            s += (mf * e * lp).sin() / (mf * (0.5 * mf * lp).exp());
        }
    }
    Ok(-s / PI)
}

/// Monotone piecewise-cubic Hermite interpolant (Fritsch-Carlson slopes).
#[derive(Debug, Clone)]
pub struct MonotoneCubic {
    x: Vec<f64>,
    y: Vec<f64>,
    d: Vec<f64>,
}

impl MonotoneCubic {
    /// `x` must be strictly increasing with at least two points.
    pub fn new(x: Vec<f64>, y: Vec<f64>) -> Result<Self> {
        let n = x.len();
        if n < 2 || y.len() != n || x.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(XpError::Numerical {
                module: "semiclassical",
                energy: x.first().copied().unwrap_or(f64::NAN),
                detail: "interpolation table needs strictly increasing abscissae".into(),
            });
        }
        let delta: Vec<f64> = (0..n - 1).map(|i| (y[i + 1] - y[i]) / (x[i + 1] - x[i])).collect();
        let mut d = vec![0.0; n];
        d[0] = delta[0];
        d[n - 1] = delta[n - 2];
        for i in 1..n - 1 {
            if delta[i - 1] * delta[i] <= 0.0 {
                d[i] = 0.0;
            } else {
                let h0 = x[i] - x[i - 1];
                let h1 = x[i + 1] - x[i];
                let w1 = 2.0 * h1 + h0;
                let w2 = h1 + 2.0 * h0;
                d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
            }
        }
        Ok(MonotoneCubic { x, y, d })
    }

    fn segment(&self, t: f64) -> usize {
        match self.x.binary_search_by(|v| v.total_cmp(&t)) {
            Ok(i) => i.min(self.x.len() - 2),
            Err(i) => i.saturating_sub(1).min(self.x.len() - 2),
        }
    }

    /// Value at `t`; constant extension outside the table.
    pub fn eval(&self, t: f64) -> f64 {
        let n = self.x.len();
        if t <= self.x[0] {
            return self.y[0];
        }
        if t >= self.x[n - 1] {
            return self.y[n - 1];
        }
        let i = self.segment(t);
        let h = self.x[i + 1] - self.x[i];
        let s = (t - self.x[i]) / h;
        let s2 = s * s;
        let s3 = s2 * s;
        (2.0 * s3 - 3.0 * s2 + 1.0) * self.y[i]
            + (s3 - 2.0 * s2 + s) * h * self.d[i]
            + (-2.0 * s3 + 3.0 * s2) * self.y[i + 1]
            + (s3 - s2) * h * self.d[i + 1]
    }

    /// Exact integral over [a, b] (two-point Gauss is exact on each cubic piece).
    pub fn integral(&self, a: f64, b: f64) -> f64 {
        if b < a {
            return -self.integral(b, a);
        }
        let mut cuts = vec![a];
        cuts.extend(self.x.iter().copied().filter(|v| *v > a && *v < b));
        cuts.push(b);
        let g = 1.0 / 3f64.sqrt();
        cuts.windows(2)
            .map(|w| {
                let m = 0.5 * (w[0] + w[1]);
                let h = 0.5 * (w[1] - w[0]);
                h * (self.eval(m - g * h) + self.eval(m + g * h))
            })
            .sum()
    }
}

type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

#[derive(Clone)]
enum Profile {
    Function(RealFn),
    /// v ↦ value_scale · table(arg_scale · v)
    Table {
        table: Arc<MonotoneCubic>,
        arg_scale: f64,
        value_scale: f64,
    },
}

impl Profile {
    fn eval(&self, v: f64) -> f64 {
        match self {
            Profile::Function(f) => f(v),
            Profile::Table {
                table,
                arg_scale,
                value_scale,
            } => value_scale * table.eval(arg_scale * v),
        }
    }

    fn integral(&self, a: f64, b: f64) -> Result<f64> {
        match self {
            Profile::Function(f) => quad::adaptive(|v| f(v), a, b, 1e-11, 1e-13),
            Profile::Table {
                table,
                arg_scale,
                value_scale,
            } => Ok(value_scale / arg_scale * table.integral(arg_scale * a, arg_scale * b)),
        }
    }
}

/// Classical boundaries p ≥ p_cl(x) and x ≥ x_cl(p) of the counting region.
#[derive(Clone)]
pub struct PhaseBoundary {
    p_cl: Profile,
    x_cl: Profile,
    pub l_x: f64,
    pub l_p: f64,
}

impl std::fmt::Debug for PhaseBoundary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PhaseBoundary")
            .field("l_x", &self.l_x)
            .field("l_p", &self.l_p)
            .finish_non_exhaustive()
    }
}

impl PhaseBoundary {
    /// Boundary from two positive profiles; x_cl is evaluated at |p|.
    pub fn new<P, X>(p_cl: P, x_cl: X, l_x: f64, l_p: f64) -> Result<Self>
    where
        P: Fn(f64) -> f64 + Send + Sync + 'static,
        X: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        check_cell(l_x, l_p)?;
        let b = PhaseBoundary {
            p_cl: Profile::Function(Arc::new(p_cl)),
            x_cl: Profile::Function(Arc::new(move |p: f64| x_cl(p.abs()))),
            l_x,
            l_p,
        };
        b.check_positive()?;
        Ok(b)
    }

    /// The Berry-Keating boundaries p_cl ≡ l_p, x_cl ≡ l_x with l_p = 2π/l_x.
    pub fn berry_keating(l_x: f64) -> Result<Self> {
        require_positive("berry_keating l_x", l_x)?;
        let l_p = 2.0 * PI / l_x;
        Self::new(move |_| l_p, move |_| l_x, l_x, l_p)
    }

    fn check_positive(&self) -> Result<()> {
        for k in 0..64 {
            let s = 1.0 + 0.25 * k as f64;
            for (v, name) in [
                (self.p_cl(s * self.l_x), "p_cl"),
                (self.x_cl(s * self.l_p), "x_cl"),
            ] {
                if !(v > 0.0 && v.is_finite()) {
                    return Err(XpError::Domain {
                        what: if name == "p_cl" { "boundary p_cl" } else { "boundary x_cl" },
                        value: v,
                        expected: "positive boundary values",
                    });
                }
            }
        }
        Ok(())
    }

    pub fn p_cl(&self, x: f64) -> f64 {
        self.p_cl.eval(x)
    }

    pub fn x_cl(&self, p: f64) -> f64 {
        self.x_cl.eval(p.abs())
    }

    /// max(|x_cl(l_p) − l_x|, |p_cl(l_x) − l_p|): how far the boundaries miss the
    /// corner of the Planck cell.
    pub fn planck_cell_residual(&self) -> f64 {
        (self.x_cl(self.l_p) - self.l_x).abs().max((self.p_cl(self.l_x) - self.l_p).abs())
    }
}

fn check_cell(l_x: f64, l_p: f64) -> Result<()> {
    require_positive("l_x", l_x)?;
    require_positive("l_p", l_p)?;
    if ((l_x * l_p) / (2.0 * PI) - 1.0).abs() > 1e-12 {
        return Err(XpError::Domain {
            what: "l_x * l_p",
            value: l_x * l_p,
            expected: "l_x * l_p = 2 pi",
        });
    }
    Ok(())
}

/// Points where E = xp meets the boundaries and the diagonal x/l_x = p/l_p.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntersectionPoints {
    pub x_m: f64,
    pub p_m: f64,
    pub x_i: f64,
    pub p_i: f64,
    pub energy: f64,
}

/// Unique root of v·prof(v) = E on [lo, ∞).
fn hyperbola_root(prof: &Profile, lo: f64, e: f64) -> Result<f64> {
    let h = |v: f64| v * prof.eval(v) - e;
    if h(lo) > 0.0 {
        return Err(XpError::NoIntersection(e));
    }
    let mut hi = 2.0 * lo;
    while h(hi) <= 0.0 {
        hi *= 2.0;
        if hi > 1e15 * lo {
            return Err(XpError::NoIntersection(e));
        }
    }
    // Count crossings on a geometric grid to detect wiggles that cross E = xp repeatedly.
    let n = 4000;
    let ratio = (hi / lo).powf(1.0 / n as f64);
    let mut crossings = Vec::new();
    let mut a = lo;
    let mut ha = h(a);
    for _ in 0..n {
        let b = a * ratio;
        let hb = h(b);
        if (ha <= 0.0) != (hb <= 0.0) {
            crossings.push((a, b));
        }
        a = b;
        ha = hb;
    }
    let &(a, b) = crossings.first().ok_or(XpError::NoIntersection(e))?;
    let root = brent(h, a, b, 1e-14 * b)?;
    if crossings.len() > 1 {
        return Err(XpError::Multivalued {
            energy: e,
            roots: crossings.len(),
            first: root,
        });
    }
    Ok(root)
}

/// Solves E = x_M p_cl(x_M) = x_cl(p_M) p_M = x_I p_I with x_I/l_x = p_I/l_p.
pub fn solve_intersections(b: &PhaseBoundary, e: f64) -> Result<IntersectionPoints> {
    if !(e > b.l_x * b.l_p) {
        return Err(XpError::NoIntersection(e));
    }
    let x_m = hyperbola_root(&b.p_cl, b.l_x, e)?;
    let p_m = hyperbola_root(&b.x_cl, b.l_p, e)?;
    // The diagonal meets the hyperbola in closed form.
    let x_i = (e * b.l_x / b.l_p).sqrt();
    let p_i = e / x_i;
    Ok(IntersectionPoints {
        x_m,
        p_m,
        x_i,
        p_i,
        energy: e,
    })
}

/// n_fl(E) = −(E/2π)[log(p_cl(x_M)/l_p) + log(x_cl(p_M)/l_x)]
///          + (1/2π)[∫_{l_x}^{x_M} x p_cl'(x) dx + ∫_{l_p}^{p_M} p x_cl'(p) dp].
///
/// The integrals are taken after integration by parts,
/// ∫_{l_x}^{x_M} x p_cl' dx = E − l_x p_cl(l_x) − ∫_{l_x}^{x_M} p_cl dx,
/// so no derivative of the profiles is needed.
pub fn nfl_semiclassical(b: &PhaseBoundary, e: f64) -> Result<f64> {
    let ip = solve_intersections(b, e)?;
    let logs = (b.p_cl(ip.x_m) / b.l_p).ln() + (b.x_cl(ip.p_m) / b.l_x).ln();
    let ix = e - b.l_x * b.p_cl(b.l_x) - b.p_cl.integral(b.l_x, ip.x_m)?;
    let ipp = e - b.l_p * b.x_cl(b.l_p) - b.x_cl.integral(b.l_p, ip.p_m)?;
    Ok((-e * logs + ix + ipp) / (2.0 * PI))
}

/// Right-hand side of dn_fl/dE = −(1/2π)[log(p_cl(x_M)/l_p) + log(x_cl(p_M)/l_x)].
pub fn nfl_derivative(b: &PhaseBoundary, e: f64) -> Result<f64> {
    let ip = solve_intersections(b, e)?;
    Ok(-((b.p_cl(ip.x_m) / b.l_p).ln() + (b.x_cl(ip.p_m) / b.l_x).ln()) / (2.0 * PI))
}

/// An odd fluctuation term n_fl(E) and its derivative.
#[derive(Clone)]
pub struct FluctuationDensity {
    n_fl: RealFn,
    n_fl_prime: RealFn,
}

impl FluctuationDensity {
    pub fn new<N, D>(n_fl: N, n_fl_prime: D) -> Self
    where
        N: Fn(f64) -> f64 + Send + Sync + 'static,
        D: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        FluctuationDensity {
            n_fl: Arc::new(n_fl),
            n_fl_prime: Arc::new(n_fl_prime),
        }
    }

    /// n_fl(E) = εE.
    pub fn linear(eps: f64) -> Self {
        Self::new(move |e| eps * e, move |_| eps)
    }

    pub fn n_fl(&self, e: f64) -> f64 {
        (self.n_fl)(e)
    }

    pub fn n_fl_prime(&self, e: f64) -> f64 {
        (self.n_fl_prime)(e)
    }
}

/// xp-symmetric boundary whose semiclassical count has the prescribed fluctuation term.
///
/// On each grid energy x_M(E) = (E/l_p) e^{π n_fl'(E)} and p_cl(x_M) = E/x_M; p_cl is the
/// monotone cubic through these points, extended by constants, and
/// x_cl(p) = (l_x/l_p) p_cl(l_x p/l_p). The grid should start at E = l_x l_p so the table
/// reaches down to x = l_x.
pub fn boundary_from_nfl(d: &FluctuationDensity, l_x: f64, l_p: f64, grid: &[f64]) -> Result<PhaseBoundary> {
    check_cell(l_x, l_p)?;
    if grid.len() < 2 {
        return Err(XpError::InvalidRange(
            grid.first().copied().unwrap_or(f64::NAN),
            grid.last().copied().unwrap_or(f64::NAN),
        ));
    }
    let mut xs = Vec::with_capacity(grid.len());
    let mut ps = Vec::with_capacity(grid.len());
    for &e in grid {
        require_positive("boundary_from_nfl energy", e)?;
        let x_m = e / l_p * (PI * d.n_fl_prime(e)).exp();
        xs.push(x_m);
        ps.push(e / x_m);
    }
    // x_M increasing on the grid is the discrete form of 1 + πE n_fl''(E) > 0.
    for (k, w) in xs.windows(2).enumerate() {
        if !(w[1] > w[0]) {
            return Err(XpError::Monotonicity(grid[k], grid[k + 1]));
        }
    }
    let table = Arc::new(MonotoneCubic::new(xs, ps)?);
    Ok(PhaseBoundary {
        p_cl: Profile::Table {
            table: table.clone(),
            arg_scale: 1.0,
            value_scale: 1.0,
        },
        x_cl: Profile::Table {
            table,
            arg_scale: l_x / l_p,
            value_scale: l_x / l_p,
        },
        l_x,
        l_p,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counting_formulas() {
        assert!(count_bk(2.0 * PI).unwrap().abs() < 1e-15);
        assert!((count_bk(4.0 * PI).unwrap() - (2.0 * (2f64.ln() - 1.0) + 1.0)).abs() < 1e-15);
        assert!((count_connes(2.0 * PI, std::f64::consts::E).unwrap() - 3.0).abs() < 1e-14);
        assert!((count_connes(2.0 * PI, 1.0).unwrap() - 1.0).abs() < 1e-14);
        assert!((count_connes(4.0 * PI, 10.0).unwrap() - 9.824).abs() < 1e-3);
        assert!(count_bk(0.0).is_err());
        assert!(count_connes(1.0, -1.0).is_err());
    }

    #[test]
    fn prime_sum_single_term() {
        assert_eq!(nfl_prime_sum(0.0, 100, 3).unwrap(), 0.0);
        let e = 7.3;
        let v = nfl_prime_sum(e, 2, 1).unwrap();
        assert!((v + (e * 2f64.ln()).sin() / (PI * 2f64.sqrt())).abs() < 1e-15);
        assert!(nfl_prime_sum(1.0, 1, 1).is_err());
    }

    #[test]
    fn bk_intersections() {
        let b = PhaseBoundary::berry_keating(1.0).unwrap();
        let ip = solve_intersections(&b, 4.0 * PI).unwrap();
        assert!((ip.x_m - 2.0).abs() < 1e-12);
        assert!((ip.p_m - 4.0 * PI).abs() < 1e-11);
        assert!((ip.x_i - 2f64.sqrt()).abs() < 1e-15);
        assert!(solve_intersections(&b, 1.0).is_err());
        assert!(nfl_semiclassical(&b, 50.0).unwrap().abs() < 1e-10);
    }

    #[test]
    fn scaled_boundary() {
        let c = 1.5;
        let l_p = 2.0 * PI;
        let b = PhaseBoundary::new(move |_| c * l_p, move |_| c, 1.0, l_p).unwrap();
        let e = 30.0;
        let ip = solve_intersections(&b, e).unwrap();
        assert!((ip.x_m - e / (c * l_p)).abs() < 1e-12);
        let n = nfl_semiclassical(&b, e).unwrap();
        assert!((n + e / PI * c.ln()).abs() < 1e-9);
    }

    #[test]
    fn wiggly_boundary_is_rejected() {
        let l_p = 2.0 * PI;
        let b = PhaseBoundary::new(move |x| l_p * (1.0 + 0.9 * (40.0 * x).sin()), |_| 1.0, 1.0, l_p).unwrap();
        assert!(matches!(solve_intersections(&b, 40.0), Err(XpError::Multivalued { .. })));
    }

    #[test]
    fn monotone_cubic_is_exact_on_lines() {
        let x: Vec<f64> = (0..10).map(|k| k as f64).collect();
        let y: Vec<f64> = x.iter().map(|v| 2.0 * v + 1.0).collect();
        let m = MonotoneCubic::new(x, y).unwrap();
        assert!((m.eval(3.3) - 7.6).abs() < 1e-14);
        assert!((m.integral(0.5, 8.25) - (8.25f64.powi(2) + 8.25 - 0.25 - 0.5)).abs() < 1e-12);
    }

    #[test]
    fn linear_fluctuation_gives_constant_boundary() {
        let eps = 0.01;
        let grid: Vec<f64> = (0..200).map(|k| 2.0 * PI + 0.5 * k as f64).collect();
        let b = boundary_from_nfl(&FluctuationDensity::linear(eps), 1.0, 2.0 * PI, &grid).unwrap();
        assert!((b.p_cl(5.0) - 2.0 * PI * (-PI * eps).exp()).abs() < 1e-12);
    }

    #[test]
    fn non_monotone_fluctuation_is_rejected() {
        let d = FluctuationDensity::new(|e| -0.5 * (e * e).sin(), |e| -e * (e * e).cos());
        let grid: Vec<f64> = (0..200).map(|k| 2.0 * PI + 0.1 * k as f64).collect();
        assert!(matches!(boundary_from_nfl(&d, 1.0, 2.0 * PI, &grid), Err(XpError::Monotonicity(..))));
    }
}
