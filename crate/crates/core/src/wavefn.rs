//! Bound-state wave functions, norms and overlaps.
//!
//! A bound state at a zero E_m of F has
//! ψ(x) = ∫ dω/(2πi) x^{−1/2+iω} (â(−ω) + b̂(−ω))/(ω − E_m)
//! and norm ∫ dω/π Re F(ω)/(ω − E_m)² = −Im F'(E_m) = 4π n'(E_m) when F = 2(1 + ε e^{2πin}).

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::TOL;
use crate::error::{Result, XpError};
use crate::quad::gl;
use crate::roots::brent;
use crate::special_fn::hilbert::{bump_average, cauchy_integral, smooth_step, PvOptions};
use crate::special_fn::hypergeometric::{hyp1f2, omega_minus, omega_minus_complex, omega_plus_complex};
use crate::special_fn::phase::{theta, Parity};
use crate::spectral_solver::{jost, jost_value, BoundarySpectrum};

/// Whether a sample belongs to a normalisable state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Regime {
    Scattering,
    Bound,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WaveFunctionSample {
    pub x: f64,
    pub psi: Complex64,
    pub regime: Regime,
}

/// ψ_E(ω) = δ_coefficient δ(E − ω) + regular.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralComponent {
    pub regular: Complex64,
    /// √(2π) Re F(E); zero for bound states.
    pub delta_coefficient: f64,
}

/// Component of ψ_E along the H₀ eigenfunction x^{−1/2+iω}/√(2π).
pub fn psi_spectral(bs: &BoundarySpectrum, e: f64, omega: f64) -> Result<SpectralComponent> {
    if omega == e {
        return Err(XpError::Domain {
            what: "psi_spectral",
            value: omega,
            expected: "omega != E",
        });
    }
    let j = jost(bs, e)?;
    let num = j.b * bs.a_hat(-omega) - j.a * bs.b_hat(-omega);
    let regular = num / (Complex64::new(0.0, (2.0 * PI).sqrt()) * (omega - e));
    let delta_coefficient = if j.bound { 0.0 } else { (2.0 * PI).sqrt() * j.f.re };
    Ok(SpectralComponent {
        regular,
        delta_coefficient,
    })
}

/// The m-th positive root (m ≥ 1) of 1 + e^{2iθ(E)}, where θ(E) = π(m − 3/2).
pub fn smooth_zero(m: u32) -> Result<f64> {
    if m == 0 {
        return Err(XpError::Domain {
            what: "smooth_zero",
            value: 0.0,
            expected: "m >= 1",
        });
    }
    let target = PI * (m as f64 - 1.5);
    // θ is increasing beyond its minimum near E = 6.29.
    let (lo, mut hi) = (6.3, 16.0);
    while theta(hi) < target {
        hi *= 2.0;
    }
    brent(|e| theta(e) - target, lo, hi, 1e-13)
}

/// Smooth zero closest to E (E > 7).
pub fn nearest_smooth_zero(e: f64) -> Result<f64> {
    let m = (theta(e.max(7.0)) / PI + 1.5).round().max(1.0) as u32;
    let mut best = smooth_zero(m)?;
    for k in [m.saturating_sub(1), m + 1] {
        if k >= 1 {
            let z = smooth_zero(k)?;
            if (z - e).abs() < (best - e).abs() {
                best = z;
            }
        }
    }
    Ok(best)
}

/// Above this x the ₁F₂ series at −π²x² loses accuracy to cancellation.
pub const SERIES_CROSSOVER: f64 = 2.0;

/// ψ_{E_m}(x) for the smooth zeros, from
/// ψ/√2 = H(x−1) x^{−1/2+iE_m} + ₁F₂(1/4 − iE_m/2; 1/2, 5/4 − iE_m/2; −π²x²)/(1/4 − iE_m/2).
///
/// Beyond the crossover the same function is written as
/// x^{−1/2+iE_m}[1 + Ω−(−E_m) + 2∫₁^x v^{−1/2−iE_m} cos 2πv dv].
pub fn psi_bound_smooth(e_m: f64, x: f64) -> Result<Complex64> {
    if !(x > 0.0) {
        return Err(XpError::Domain {
            what: "psi_bound_smooth",
            value: x,
            expected: "x > 0",
        });
    }
    let res = (1.0 + Complex64::from_polar(1.0, 2.0 * theta(e_m))).norm();
    if res > TOL.root {
        return Err(XpError::NotARoot {
            energy: e_m,
            residual: res,
            nearest: nearest_smooth_zero(e_m).ok(),
        });
    }
    let xw = Complex64::from_polar(x.powf(-0.5), e_m * x.ln());
    let v = if x <= SERIES_CROSSOVER {
        let a = Complex64::new(0.25, -0.5 * e_m);
        let h = hyp1f2(a, Complex64::new(0.5, 0.0), a + 1.0, Complex64::new(-PI * PI * x * x, 0.0))? / a;
        let step = if x > 1.0 { xw } else { Complex64::new(0.0, 0.0) };
        // (1/a)₁F₂ = 2 x^{−2a} ∫₀^x v^{2a−1} cos 2πv dv, and x^{−2a} = x^{−1/2+iE_m}.
        step + h
    } else {
        xw * (1.0 + omega_minus(-e_m) + 2.0 * oscillatory_integral(e_m, x))
    };
    Ok(2f64.sqrt() * v)
}

/// ∫₁^x v^{−1/2−iE} cos(2πv) dv.
fn oscillatory_integral(e: f64, x: f64) -> Complex64 {
    let rule = gl(16);
    let count = ((x - 1.0) / 0.25).ceil().max(1.0) as usize;
    let h = (x - 1.0) / count as f64;
    let mut total = Complex64::new(0.0, 0.0);
    for k in 0..count {
        let lo = 1.0 + k as f64 * h;
        for (v, w) in rule.mapped(lo, lo + h) {
            total += Complex64::from_polar(v.powf(-0.5) * (2.0 * PI * v).cos(), -e * v.ln()) * w;
        }
    }
    total
}

/// Samples of a smooth-zero wave function, evaluated in parallel.
pub fn smooth_samples(e_m: f64, xs: &[f64]) -> Result<Vec<WaveFunctionSample>> {
    xs.par_iter()
        .map(|&x| {
            Ok(WaveFunctionSample {
                x,
                psi: psi_bound_smooth(e_m, x)?,
                regime: Regime::Bound,
            })
        })
        .collect()
}

/// ψ_{E_m} truncated to ω ∈ [E_m − Λ, E_m + Λ], with the boundary data tabulated once.
#[derive(Debug, Clone)]
pub struct TruncatedWaveFunction {
    pub energy: f64,
    pub lambda: f64,
    // (s, weight/s, g(E+s), g(E−s)) with g(ω) = â(−ω) + b̂(−ω).
    nodes: Vec<(f64, f64, Complex64, Complex64)>,
}

const EXACT_PANEL: f64 = 0.5;
const EXACT_ORDER: usize = 16;

impl TruncatedWaveFunction {
    /// Fails with `NotARoot` unless |F(E_m)| ≤ 1e−8.
    pub fn new(bs: &BoundarySpectrum, e_m: f64, lambda: f64) -> Result<Self> {
        if !(lambda > 0.0) {
            return Err(XpError::Domain {
                what: "psi_bound_exact",
                value: lambda,
                expected: "Lambda > 0",
            });
        }
        let res = jost_value(bs, e_m)?.norm();
        if res > TOL.root {
            return Err(XpError::NotARoot {
                energy: e_m,
                residual: res,
                nearest: None,
            });
        }
        let rule = gl(EXACT_ORDER);
        let count = (lambda / EXACT_PANEL).ceil() as usize;
        let h = lambda / count as f64;
        let pts: Vec<(f64, f64)> = (0..count)
            .flat_map(|k| rule.mapped(k as f64 * h, (k + 1) as f64 * h).collect::<Vec<_>>())
            .collect();
        let g = |w: f64| bs.a_hat(-w) + bs.b_hat(-w);
        let nodes = pts
            .par_iter()
            .map(|&(s, w)| (s, w / s, g(e_m + s), g(e_m - s)))
            .collect();
        Ok(TruncatedWaveFunction {
            energy: e_m,
            lambda,
            nodes,
        })
    }

    /// P∫_{E−Λ}^{E+Λ} dω/(2πi) x^{−1/2+iω} g(ω)/(ω − E).
    pub fn eval(&self, x: f64) -> Complex64 {
        let lx = x.ln();
        let mut total = Complex64::new(0.0, 0.0);
        for &(s, w, gp, gm) in &self.nodes {
            let rot = Complex64::from_polar(1.0, s * lx);
            total += (rot * gp - rot.conj() * gm) * w;
        }
        total * Complex64::from_polar(x.powf(-0.5), self.energy * lx) / Complex64::new(0.0, 2.0 * PI)
    }

    /// The same function truncated at a smaller Λ' that is a multiple of the 0.5 panel
    /// width, reusing the tabulated boundary data.
    pub fn restricted(&self, lambda: f64) -> Result<Self> {
        let panels = lambda / EXACT_PANEL;
        if !(lambda > 0.0 && lambda <= self.lambda) || (panels - panels.round()).abs() > 1e-9 {
            return Err(XpError::Domain {
                what: "TruncatedWaveFunction::restricted",
                value: lambda,
                expected: "0 < Lambda' <= Lambda, a multiple of 0.5",
            });
        }
        Ok(TruncatedWaveFunction {
            energy: self.energy,
            lambda,
            nodes: self.nodes.iter().copied().filter(|n| n.0 < lambda).collect(),
        })
    }

    pub fn samples(&self, xs: &[f64]) -> Vec<WaveFunctionSample> {
        xs.par_iter()
            .map(|&x| WaveFunctionSample {
                x,
                psi: self.eval(x),
                regime: Regime::Bound,
            })
            .collect()
    }
}

/// Single-point truncated wave function.
pub fn psi_bound_exact(bs: &BoundarySpectrum, e_m: f64, x: f64, lambda: f64) -> Result<Complex64> {
    Ok(TruncatedWaveFunction::new(bs, e_m, lambda)?.eval(x))
}

/// sup|ψ_Λ − ψ_{Λ'}| / sup|ψ_Λ| over the grid.
pub fn lambda_sensitivity(bs: &BoundarySpectrum, e_m: f64, lambda: f64, other: f64, xs: &[f64]) -> Result<f64> {
    let (a, b) = if other > lambda {
        let b = TruncatedWaveFunction::new(bs, e_m, other)?;
        (b.restricted(lambda)?, b)
    } else {
        let a = TruncatedWaveFunction::new(bs, e_m, lambda)?;
        let b = a.restricted(other)?;
        (a, b)
    };
    let (mut diff, mut peak) = (0.0f64, 0.0f64);
    for &x in xs {
        let va = a.eval(x);
        diff = diff.max((va - b.eval(x)).norm());
        peak = peak.max(va.norm());
    }
    Ok(diff / peak)
}

/// Norm of a bound state by three routes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormResult {
    /// ∫ dω/π Re F(ω)/(ω − E_m)².
    pub norm_quadrature: f64,
    /// 4π n'(E_m).
    pub norm_density: f64,
    /// −Im F'(E_m).
    pub minus_im_f_prime: f64,
    /// |norm_quadrature − norm_density| / norm_density.
    pub relative_gap: f64,
}

const NORM_HALF_WIDTH: f64 = 200.0;
const NORM_PANEL: f64 = 0.5;
const NORM_ORDER: usize = 16;
const FD_STEP: f64 = 1e-4;

/// ∫_{−∞}^{∞} dω/((ω − e1)(ω − e2)) restricted to ω > u0 (u0 above both poles).
fn tail_kernel(u0: f64, e1: f64, e2: f64) -> f64 {
    if (e1 - e2).abs() < 1e-12 {
        1.0 / (u0 - e1)
    } else {
        ((u0 - e2) / (u0 - e1)).ln() / (e1 - e2)
    }
}

/// ∫ dω/π Re F(ω)/((ω − e1)(ω − e2)).
///
/// The integrand is tapered smoothly to zero between 100 and 200 from the midpoint; what the
/// taper removes is replaced by the bump-averaged Re F of the taper region times the exact
/// kernel integral, so the oscillating part of Re F leaves no truncation error.
fn re_f_moment(bs: &BoundarySpectrum, e1: f64, e2: f64) -> Result<f64> {
    let c = 0.5 * (e1 + e2);
    let l = NORM_HALF_WIDTH;
    let taper = |w: f64| 1.0 - smooth_step(((w - c).abs() - 0.5 * l) / (0.5 * l));
    let kernel = |w: f64| 1.0 / ((w - e1) * (w - e2));
    let rule = gl(NORM_ORDER);
    let count = (2.0 * l / NORM_PANEL).ceil() as usize;
    let h = 2.0 * l / count as f64;
    let parts = (0..count)
        .into_par_iter()
        .map(|k| {
            let lo = c - l + k as f64 * h;
            let mut acc = 0.0;
            for (w, wt) in rule.mapped(lo, lo + h) {
                let t = taper(w);
                if t > 0.0 {
                    acc += jost_value(bs, w)?.re * t * kernel(w) * wt;
                }
            }
            Ok(acc)
        })
        .collect::<Result<Vec<f64>>>()?;
    let body: f64 = parts.iter().sum();
    let re_f = |w: f64| Complex64::new(jost_value(bs, w).map(|f| f.re).unwrap_or(f64::NAN), 0.0);
    let mean_hi = bump_average(re_f, c + 0.5 * l, c + l, NORM_PANEL).re;
    let mean_lo = bump_average(re_f, c - l, c - 0.5 * l, NORM_PANEL).re;
    if !(mean_hi.is_finite() && mean_lo.is_finite()) {
        return Err(XpError::NonFinite(c + l));
    }
    let ramp_hi = crate::quad::panels(|w: f64| (1.0 - taper(w)) * kernel(w), c + 0.5 * l, c + l, NORM_PANEL, NORM_ORDER);
    let ramp_lo = crate::quad::panels(|w: f64| (1.0 - taper(w)) * kernel(w), c - l, c - 0.5 * l, NORM_PANEL, NORM_ORDER);
    let tails = mean_hi * (ramp_hi + tail_kernel(c + l, e1, e2)) + mean_lo * (ramp_lo + tail_kernel(-(c - l), -e1, -e2));
    Ok((body + tails) / PI)
}

/// Norm of the bound state at E_m.
pub fn bound_norm(bs: &BoundarySpectrum, e_m: f64) -> Result<NormResult> {
    let res = jost_value(bs, e_m)?.norm();
    if res > TOL.root {
        return Err(XpError::NotARoot {
            energy: e_m,
            residual: res,
            nearest: None,
        });
    }
    let norm_quadrature = re_f_moment(bs, e_m, e_m)?;
    let h = FD_STEP;
    let fp = (jost_value(bs, e_m + h)? - jost_value(bs, e_m - h)?) / (2.0 * h);
    let minus_im_f_prime = -fp.im;
    let norm_density = match (bs.phase_count(e_m + h), bs.phase_count(e_m - h)) {
        (Some(up), Some(down)) => {
            // n_fl is principal-valued and may jump by 2 between the two samples.
            let mut d = up - down;
            d -= 2.0 * (d / 2.0).round();
            4.0 * PI * d / (2.0 * h)
        }
        _ => minus_im_f_prime,
    };
    Ok(NormResult {
        norm_quadrature,
        norm_density,
        minus_im_f_prime,
        relative_gap: (norm_quadrature - norm_density).abs() / norm_density.abs(),
    })
}

/// ⟨ψ_{E1}|ψ_{E2}⟩ = ∫ dω/(2π) (F(ω) + F(−ω))/((ω − E1)(ω − E2)).
pub fn bound_overlap(bs: &BoundarySpectrum, e1: f64, e2: f64) -> Result<f64> {
    for e in [e1, e2] {
        let res = jost_value(bs, e)?.norm();
        if res > TOL.root {
            return Err(XpError::NotARoot {
                energy: e,
                residual: res,
                nearest: None,
            });
        }
    }
    re_f_moment(bs, e1, e2)
}

/// Exact Berry-Keating Jost function at complex z:
/// F = 1 + g(Ω+(z) − Ω−(−z)) + g²/4 − g² Ω+(z) Ω−(−z), g = a0 b0.
pub fn jost_bk_exact_complex(g: f64, eta: Parity, z: Complex64) -> Result<Complex64> {
    let op = omega_plus_complex(z, eta)?;
    let om = omega_minus_complex(-z, eta)?;
    Ok(1.0 + g * (op - om) + 0.25 * g * g - g * g * op * om)
}

/// |F(z) − F∞ − ∫ dω/(2πi) (F(ω) − F∞)/(ω − z)| for the exact Berry-Keating F at Im z > 0,
/// with F∞ = 1 + (a0b0/2)².
pub fn dispersion_residual(g: f64, eta: Parity, z: Complex64) -> Result<f64> {
    if !(z.im > 0.0) {
        return Err(XpError::Domain {
            what: "dispersion_residual",
            value: z.im,
            expected: "Im z > 0",
        });
    }
    let f_inf = 1.0 + 0.25 * g * g;
    let on_axis = |w: f64| {
        jost_bk_exact_complex(g, eta, Complex64::new(w, 0.0)).unwrap_or(Complex64::new(f64::NAN, 0.0)) - f_inf
    };
    let ci = cauchy_integral(on_axis, z, &PvOptions::default())?;
    let rhs = ci.value / Complex64::new(0.0, 2.0 * PI);
    Ok((jost_bk_exact_complex(g, eta, z)? - f_inf - rhs).norm())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smooth_zero_values() {
        let want = [14.517919628262, 20.654044969368, 25.491508214625];
        for (m, w) in want.iter().enumerate() {
            assert!((smooth_zero(m as u32 + 1).unwrap() - w).abs() < 1e-9);
        }
        assert!((nearest_smooth_zero(21.0).unwrap() - want[1]).abs() < 1e-9);
    }

    #[test]
    fn smooth_wave_function_is_continuous_at_crossover() {
        let e = smooth_zero(2).unwrap();
        let x = SERIES_CROSSOVER;
        let a = psi_bound_smooth(e, x).unwrap();
        let b = psi_bound_smooth(e, x + 1e-9).unwrap();
        assert!((a - b).norm() < 1e-7, "{a} {b}");
    }

    #[test]
    fn smooth_wave_function_limit_at_origin() {
        let e = smooth_zero(1).unwrap();
        let v = psi_bound_smooth(e, 1e-9).unwrap() / 2f64.sqrt();
        let lim = 1.0 / Complex64::new(0.25, -0.5 * e);
        assert!((v - lim).norm() < 1e-6 * lim.norm());
        assert!(psi_bound_smooth(e + 0.01, 1.0).is_err());
    }

    #[test]
    fn trap_norm_is_twice_separation() {
        let q = 1.3;
        let bs = BoundarySpectrum::trap_epsilon(-1.0, q);
        let e = 2.0 * PI / q;
        let n = bound_norm(&bs, e).unwrap();
        assert!((n.norm_density - 2.0 * q).abs() < 1e-6);
        assert!((n.minus_im_f_prime - 2.0 * q).abs() < 1e-6);
        assert!(n.relative_gap < 1e-3, "{n:?}");
    }

    #[test]
    fn free_limit_is_pure_delta() {
        let bs = BoundarySpectrum::trap(0.0, 0.0, 1.0, 0.0);
        let c = psi_spectral(&bs, 3.0, 5.0).unwrap();
        assert_eq!(c.regular, Complex64::new(0.0, 0.0));
        assert!((c.delta_coefficient - (2.0 * PI).sqrt()).abs() < 1e-14);
    }
}
