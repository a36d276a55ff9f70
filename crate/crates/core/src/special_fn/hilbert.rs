//! Principal-value and Cauchy-kernel integrals over the real line.
//!
//! ∫ g(t)/(t − z) dt is folded around Re z: with s = |t − Re z| the two halves pair into
//! g(x+s)/(s − iy) − g(x−s)/(s + iy), whose singular parts cancel exactly on the real axis.
//! The folded integrand is integrated with Gauss-Legendre panels out to `far`, multiplied
//! by a C∞ taper over [far/2, far] so oscillatory tails contribute nothing. The
//! non-oscillatory tail g ≈ g∞ + Σ c_k/t^k (k ≤ 3) is fitted on each side from bump-weighted
//! averages and integrated exactly where the taper removed it.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Result, XpError};
use crate::quad::gl;

/// Panel layout for the real-line integrals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PvOptions {
    /// Half-width of the finely resolved region around the singular point.
    pub window: f64,
    /// Outer extent of the numerically integrated region.
    pub far: f64,
    pub near_panel: f64,
    pub far_panel: f64,
    pub order: usize,
}

impl Default for PvOptions {
    fn default() -> Self {
        PvOptions {
            window: 40.0,
            far: 3000.0,
            near_panel: 0.5,
            far_panel: 2.0,
            order: 20,
        }
    }
}

pub(crate) fn smooth_step(u: f64) -> f64 {
    // 0 for u ≤ 0, 1 for u ≥ 1, C∞ in between.
    if u <= 0.0 {
        return 0.0;
    }
    if u >= 1.0 {
        return 1.0;
    }
    let a = (-1.0 / u).exp();
    let b = (-1.0 / (1.0 - u)).exp();
    a / (a + b)
}

fn bump(u: f64) -> f64 {
    if u <= 0.0 || u >= 1.0 {
        0.0
    } else {
        (-1.0 / (u * (1.0 - u))).exp()
    }
}

const TAIL_TERMS: usize = 4;

/// Asymptotic model g(t) ≈ g∞ + c₁/t + c₂/t² + c₃/t³ on one side of the real line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailModel {
    pub limit: Complex64,
    pub coeffs: [Complex64; TAIL_TERMS - 1],
}

impl TailModel {
    pub fn eval(&self, t: f64) -> Complex64 {
        let inv = 1.0 / t;
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = (acc + c) * inv;
        }
        self.limit + acc
    }
}

struct Moments {
    basis: [[f64; TAIL_TERMS]; TAIL_TERMS],
    rhs: [Complex64; TAIL_TERMS],
}

impl Moments {
    fn new() -> Self {
        Moments {
            basis: [[0.0; TAIL_TERMS]; TAIL_TERMS],
            rhs: [Complex64::new(0.0, 0.0); TAIL_TERMS],
        }
    }

    fn add(&mut self, window: usize, weight: f64, t: f64, g: Complex64) {
        let inv = 1.0 / t;
        let mut p = weight;
        for j in 0..TAIL_TERMS {
            self.basis[window][j] += p;
            p *= inv;
        }
        self.rhs[window] += g * weight;
    }

    /// Gaussian elimination with partial pivoting on the column-scaled system.
    fn solve(&self) -> TailModel {
        let mut m = self.basis;
        let mut r = self.rhs;
        let mut scale = [1.0; TAIL_TERMS];
        for j in 0..TAIL_TERMS {
            scale[j] = m.iter().map(|row| row[j].abs()).fold(0.0, f64::max).max(1e-300);
            for row in m.iter_mut() {
                row[j] /= scale[j];
            }
        }
        for col in 0..TAIL_TERMS {
            let piv = (col..TAIL_TERMS)
                .max_by(|a, b| m[*a][col].abs().total_cmp(&m[*b][col].abs()))
                .unwrap_or(col);
            m.swap(col, piv);
            r.swap(col, piv);
            for row in col + 1..TAIL_TERMS {
                let f = m[row][col] / m[col][col];
                for j in col..TAIL_TERMS {
                    m[row][j] -= f * m[col][j];
                }
                let rc = r[col];
                r[row] -= rc * f;
            }
        }
        let mut sol = [Complex64::new(0.0, 0.0); TAIL_TERMS];
        for row in (0..TAIL_TERMS).rev() {
            let mut acc = r[row];
            for j in row + 1..TAIL_TERMS {
                acc -= sol[j] * m[row][j];
            }
            sol[row] = acc / m[row][row];
        }
        for j in 0..TAIL_TERMS {
            sol[j] /= scale[j];
        }
        let mut coeffs = [Complex64::new(0.0, 0.0); TAIL_TERMS - 1];
        coeffs.copy_from_slice(&sol[1..]);
        TailModel { limit: sol[0], coeffs }
    }
}

/// Result of a real-line Cauchy integral with the fitted asymptotics on both sides.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CauchyIntegral {
    pub value: Complex64,
    pub plus: TailModel,
    pub minus: TailModel,
}

/// ∫ g(t)/(t − z) dt over the real line; a principal value when Im z = 0.
pub fn cauchy_integral<G: Fn(f64) -> Complex64>(g: G, z: Complex64, opts: &PvOptions) -> Result<CauchyIntegral> {
    let x = z.re;
    let y = z.im;
    let w = opts.window;
    let far = opts.far;
    let t1 = 0.5 * far;
    let kernel = |s: f64, gp: Complex64, gm: Complex64| gp / Complex64::new(s, -y) - gm / Complex64::new(s, y);
    let sample = |t: f64| -> Result<Complex64> {
        let v = g(t);
        if v.re.is_finite() && v.im.is_finite() {
            Ok(v)
        } else {
            Err(XpError::NonFinite(t))
        }
    };

    let rule = gl(opts.order);
    let mut total = Complex64::new(0.0, 0.0);

    let near_count = (w / opts.near_panel).ceil().max(1.0) as usize;
    let hn = w / near_count as f64;
    for k in 0..near_count {
        for (s, wt) in rule.mapped(k as f64 * hn, (k + 1) as f64 * hn) {
            total += kernel(s, sample(x + s)?, sample(x - s)?) * wt;
        }
    }

    // Bump windows (in s) used to fit the tail, doubling in width up to `far`.
    let windows: [(f64, f64); TAIL_TERMS] = std::array::from_fn(|k| {
        let hi = far / f64::powi(2.0, (TAIL_TERMS - 1 - k) as i32);
        (0.5 * hi, hi)
    });
    let mut mp = Moments::new();
    let mut mm = Moments::new();
    let far_count = ((far - w) / opts.far_panel).ceil().max(1.0) as usize;
    let hf = (far - w) / far_count as f64;
    for k in 0..far_count {
        let lo = w + k as f64 * hf;
        for (s, wt) in rule.mapped(lo, lo + hf) {
            let gp = sample(x + s)?;
            let gm = sample(x - s)?;
            let taper = 1.0 - smooth_step((s - t1) / (far - t1));
            total += kernel(s, gp, gm) * (wt * taper);
            for (i, (a, b)) in windows.iter().enumerate() {
                let bw = bump((s - a) / (b - a));
                if bw > 0.0 {
                    mp.add(i, wt * bw, x + s, gp);
                    mm.add(i, wt * bw, x - s, gm);
                }
            }
        }
    }
    let mut plus = mp.solve();
    let mut minus = mm.solve();
    let scale = 1.0 + plus.limit.norm().max(minus.limit.norm());
    if (plus.limit - minus.limit).norm() > 1e-6 * scale {
        return Err(XpError::TailDivergence {
            plus: plus.limit.norm(),
            minus: minus.limit.norm(),
        });
    }
    // Equal limits are the convergence condition; share the estimate so the constant
    // part of the model cancels exactly on the real axis.
    let limit = 0.5 * (plus.limit + minus.limit);
    plus.limit = limit;
    minus.limit = limit;

    let model = |s: f64| kernel(s, plus.eval(x + s), minus.eval(x - s));
    // The part of the model removed by the taper.
    let taper_count = ((far - t1) / opts.far_panel).ceil().max(1.0) as usize;
    let ht = (far - t1) / taper_count as f64;
    for k in 0..taper_count {
        let lo = t1 + k as f64 * ht;
        for (s, wt) in rule.mapped(lo, lo + ht) {
            total += model(s) * (wt * smooth_step((s - t1) / (far - t1)));
        }
    }
    // Beyond `far`: u = 1/s maps [far, ∞) onto (0, 1/far].
    for (u, wt) in gl(opts.order).mapped(0.0, 1.0 / far) {
        total += model(1.0 / u) * (wt / (u * u));
    }

    Ok(CauchyIntegral {
        value: total,
        plus,
        minus,
    })
}

/// P∫ dt/(πi) g(t)/(t − E) with the default layout and the given near window.
pub fn hilbert_pv<G: Fn(f64) -> Complex64>(g: G, e: f64, window: f64) -> Result<Complex64> {
    if !(window > 0.0) {
        return Err(XpError::Domain {
            what: "hilbert_pv window",
            value: window,
            expected: "window > 0",
        });
    }
    let opts = PvOptions {
        window,
        far: PvOptions::default().far.max(16.0 * window),
        ..PvOptions::default()
    };
    hilbert_pv_with(g, e, &opts)
}

/// P∫ dt/(πi) g(t)/(t − E) with an explicit layout.
pub fn hilbert_pv_with<G: Fn(f64) -> Complex64>(g: G, e: f64, opts: &PvOptions) -> Result<Complex64> {
    let r = cauchy_integral(g, Complex64::new(e, 0.0), opts)?;
    Ok(r.value / Complex64::new(0.0, PI))
}

/// P∫_{E−L}^{E+L} h(t)/(t − E) dt without any tail treatment.
pub fn pv_symmetric<H: Fn(f64) -> Complex64>(h: H, e: f64, half_width: f64, panel: f64, order: usize) -> Complex64 {
    let rule = gl(order);
    let count = (half_width / panel).ceil().max(1.0) as usize;
    let hp = half_width / count as f64;
    let mut total = Complex64::new(0.0, 0.0);
    for k in 0..count {
        for (s, wt) in rule.mapped(k as f64 * hp, (k + 1) as f64 * hp) {
            total += (h(e + s) - h(e - s)) * (wt / s);
        }
    }
    total
}

/// Bump-weighted average of g over [a, b]; removes oscillations much faster than 1/(b−a).
pub fn bump_average<G: Fn(f64) -> Complex64>(g: G, a: f64, b: f64, panel: f64) -> Complex64 {
    let rule = gl(20);
    let count = ((b - a) / panel).ceil().max(1.0) as usize;
    let h = (b - a) / count as f64;
    let mut num = Complex64::new(0.0, 0.0);
    let mut den = 0.0;
    for k in 0..count {
        let lo = a + k as f64 * h;
        for (t, wt) in rule.mapped(lo, lo + h) {
            let bw = bump((t - a) / (b - a)) * wt;
            num += g(t) * bw;
            den += bw;
        }
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special_fn::hypergeometric::{omega_minus, omega_plus};

    #[test]
    fn constant_has_zero_transform() {
        let v = hilbert_pv(|_| Complex64::new(2.5, -1.0), 3.0, 40.0).unwrap();
        assert!(v.norm() < 1e-10, "{v}");
    }

    #[test]
    fn plane_waves_are_eigenfunctions() {
        for q in [1.5, -0.7] {
            let e = 4.0;
            let v = hilbert_pv(|t| Complex64::from_polar(1.0, q * t), e, 40.0).unwrap();
            let expect = Complex64::from_polar(q.signum(), q * e);
            assert!((v - expect).norm() < 1e-8, "q={q}: {v} vs {expect}");
        }
    }

    #[test]
    fn omega_split_signs() {
        let e = 12.0;
        let p = hilbert_pv(omega_plus, e, 40.0).unwrap();
        assert!((p - omega_plus(e)).norm() < 1e-6, "{p} vs {}", omega_plus(e));
        let m = hilbert_pv(omega_minus, e, 40.0).unwrap();
        assert!((m + omega_minus(e)).norm() < 1e-6, "{m} vs {}", -omega_minus(e));
    }

    #[test]
    fn unequal_limits_are_rejected() {
        let r = hilbert_pv(|t| Complex64::new(t.signum(), 0.0), 0.3, 40.0);
        assert!(matches!(r, Err(XpError::TailDivergence { .. })));
    }

    #[test]
    fn upper_half_plane_cauchy_formula() {
        // ∫ g(t)/(t − z) dt = 2πi g(z) for g analytic above and vanishing there.
        let z = Complex64::new(2.0, 1.5);
        let g = |t: f64| Complex64::new(1.0, 0.0) / Complex64::new(t, 3.0);
        let r = cauchy_integral(g, z, &PvOptions::default()).unwrap();
        let expect = Complex64::new(0.0, 2.0 * PI) / (z + Complex64::new(0.0, 3.0));
        assert!((r.value - expect).norm() < 1e-8, "{} vs {}", r.value, expect);
    }

    #[test]
    fn finite_symmetric_pv() {
        // Odd parts of (t² + 1)/t cancel; t/t integrates to 2.
        let v = pv_symmetric(|t| Complex64::new(t * t + 1.0, 0.0), 0.0, 1.0, 0.5, 16);
        assert!(v.norm() < 1e-14);
        let w = pv_symmetric(|t| Complex64::new(t, 0.0), 0.0, 1.0, 0.5, 16);
        assert!((w.re - 2.0).abs() < 1e-14);
    }
}
