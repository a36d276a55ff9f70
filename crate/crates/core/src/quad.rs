//! Gauss-Legendre panels and adaptive Gauss-Kronrod quadrature.

use std::ops::{Add, AddAssign, Mul, Sub};
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_complex::Complex64;

use crate::error::{Result, XpError};

/// Values that quadrature can accumulate: `f64` and `Complex64`.
pub trait Scalar:
    Copy + Default + Add<Output = Self> + Sub<Output = Self> + AddAssign + Mul<f64, Output = Self>
{
    fn magnitude(self) -> f64;
}

impl Scalar for f64 {
    fn magnitude(self) -> f64 {
        self.abs()
    }
}

impl Scalar for Complex64 {
    fn magnitude(self) -> f64 {
        self.norm()
    }
}

/// Gauss-Legendre rule on [-1, 1].
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    /// Nodes by Newton iteration on P_n from the Chebyshev initial guess.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "Gauss-Legendre rule needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = (n + 1) / 2;
        for i in 0..m {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        GaussLegendre { nodes, weights }
    }

    /// Integral of `f` over [a, b] with a single application of the rule.
    pub fn integrate<T: Scalar, F: FnMut(f64) -> T>(&self, mut f: F, a: f64, b: f64) -> T {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut acc = T::default();
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            acc += f(mid + half * x) * (w * half);
        }
        acc
    }

    /// Mapped nodes and weights on [a, b].
    pub fn mapped(&self, a: f64, b: f64) -> impl Iterator<Item = (f64, f64)> + '_ {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(move |(x, w)| (mid + half * x, w * half))
    }
}

fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let p = if n == 0 { 1.0 } else { p1 };
    let d = n as f64 * (x * p - p0) / (x * x - 1.0);
    (p, d)
}

/// Cached rule of order `n`; each order is built once.
pub fn gl(n: usize) -> &'static GaussLegendre {
    static CACHE: OnceLock<Mutex<HashMap<usize, &'static GaussLegendre>>> = OnceLock::new();
    let mut map = CACHE
        .get_or_init(|| Mutex::new(HashMap::new()))
        .lock()
        .unwrap_or_else(|p| p.into_inner());
    map.entry(n)
        .or_insert_with(|| Box::leak(Box::new(GaussLegendre::new(n))))
}

/// Composite Gauss-Legendre over [a, b] with panels no wider than `width`.
pub fn panels<T: Scalar, F: FnMut(f64) -> T>(mut f: F, a: f64, b: f64, width: f64, order: usize) -> T {
    if b == a {
        return T::default();
    }
    let rule = gl(order);
    let count = ((b - a).abs() / width).ceil().max(1.0) as usize;
    let h = (b - a) / count as f64;
    let mut acc = T::default();
    for k in 0..count {
        let lo = a + k as f64 * h;
        let hi = if k + 1 == count { b } else { lo + h };
        acc += rule.integrate(&mut f, lo, hi);
    }
    acc
}

const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

fn gk15<T: Scalar, F: Fn(f64) -> T>(f: &F, a: f64, b: f64) -> (T, f64) {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let fc = f(mid);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let s = f(mid - dx) + f(mid + dx);
        kron += s * WGK[j];
        if j % 2 == 1 {
            gauss += s * WG[j / 2];
        }
    }
    let kron = kron * half;
    let gauss = gauss * half;
    (kron, (kron - gauss).magnitude())
}

/// Adaptive Gauss-Kronrod (7/15) with global bisection of the worst interval.
pub fn adaptive<T: Scalar, F: Fn(f64) -> T>(f: F, a: f64, b: f64, rel: f64, abs: f64) -> Result<T> {
    const MAX_INTERVALS: usize = 4000;
    if a == b {
        return Ok(T::default());
    }
    let (v, e) = gk15(&f, a, b);
    let mut parts: Vec<(f64, f64, T, f64)> = vec![(a, b, v, e)];
    loop {
        let mut total = T::default();
        let mut err = 0.0;
        for p in &parts {
            total += p.2;
            err += p.3;
        }
        if !err.is_finite() || !total.magnitude().is_finite() {
            return Err(XpError::NonFinite(0.5 * (a + b)));
        }
        if err <= abs.max(rel * total.magnitude()) {
            return Ok(total);
        }
        if parts.len() >= MAX_INTERVALS {
            return Err(XpError::Numerical {
                module: "quad",
                energy: 0.5 * (a + b),
                detail: format!("adaptive quadrature on [{a}, {b}] stalled at error {err:.3e}"),
            });
        }
        let (idx, _) = parts
            .iter()
            .enumerate()
            .fold((0, -1.0), |best, (i, p)| if p.3 > best.1 { (i, p.3) } else { best });
        let (lo, hi, _, _) = parts.swap_remove(idx);
        let m = 0.5 * (lo + hi);
        let (v1, e1) = gk15(&f, lo, m);
        let (v2, e2) = gk15(&f, m, hi);
        parts.push((lo, m, v1, e1));
        parts.push((m, hi, v2, e2));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_rule_is_exact_for_polynomials() {
        let r = GaussLegendre::new(10);
        let v: f64 = r.integrate(|x| x.powi(18) + 3.0 * x.powi(7), -1.0, 1.0);
        assert!((v - 2.0 / 19.0).abs() < 1e-15);
        let sum: f64 = r.weights.iter().sum();
        assert!((sum - 2.0).abs() < 1e-14);
    }

    #[test]
    fn panels_integrate_oscillations() {
        let v: Complex64 = panels(|t| Complex64::new(0.0, 3.0 * t).exp(), 0.0, 20.0, 1.0, 16);
        let exact = (Complex64::new(0.0, 60.0).exp() - 1.0) / Complex64::new(0.0, 3.0);
        assert!((v - exact).norm() < 1e-13);
    }

    #[test]
    fn adaptive_handles_endpoint_singularity() {
        let v = adaptive(|x: f64| 1.0 / x.sqrt(), 0.0, 1.0, 1e-10, 1e-12).unwrap();
        assert!((v - 2.0).abs() < 1e-8);
    }
}
