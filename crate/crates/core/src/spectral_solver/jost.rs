//! S-integrals, the Jost function and the solution constants.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::spectrum::{BoundaryKind, BoundarySpectrum, ProductClass};
use crate::config::TOL;
use crate::error::{Result, XpError};
use crate::special_fn::hilbert::hilbert_pv;
use crate::special_fn::hypergeometric::{omega_minus_eta, omega_plus_eta};
use crate::special_fn::phase::PhaseUnwrapper;

/// Half-width of the near region used by the quadrature path.
pub const S_WINDOW: f64 = 40.0;

/// S_{a,a}, S_{a,b}, S_{b,a}, S_{b,b} at one energy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SMatrixEntries {
    pub s_aa: Complex64,
    pub s_ab: Complex64,
    pub s_ba: Complex64,
    pub s_bb: Complex64,
}

impl SMatrixEntries {
    /// F = 1 + S_ab − S_ba + S_aa S_bb − S_ab S_ba.
    pub fn jost(&self) -> Complex64 {
        1.0 + self.s_ab - self.s_ba + self.s_aa * self.s_bb - self.s_ab * self.s_ba
    }
}

/// How the S-integrals are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SPath {
    /// Closed forms where the boundary family has them, quadrature otherwise.
    Auto,
    /// Principal-value quadrature for every entry.
    Quadrature,
}

/// S_{f,g}(E) = ½[f̂(E)ĝ(−E) + P∫ dE'/(πi) f̂(E')ĝ(−E')/(E' − E)].
pub fn s_integral<F, G>(f_hat: F, g_hat: G, e: f64) -> Result<Complex64>
where
    F: Fn(f64) -> Complex64,
    G: Fn(f64) -> Complex64,
{
    let prod = |t: f64| f_hat(t) * g_hat(-t);
    let h = hilbert_pv(prod, e, S_WINDOW)?;
    Ok(0.5 * (f_hat(e) * g_hat(-e) + h))
}

/// S from the value of the product at E when its half-plane class is known.
pub fn s_integral_shortcut(product: Complex64, class: ProductClass) -> Complex64 {
    match class {
        ProductClass::Upper => product,
        ProductClass::Lower => Complex64::new(0.0, 0.0),
        ProductClass::Constant => 0.5 * product,
    }
}

/// All four S-integrals at E.
pub fn s_matrix(bs: &BoundarySpectrum, e: f64, path: SPath) -> Result<SMatrixEntries> {
    if path == SPath::Auto {
        if let Some(c) = bs.product_classes() {
            let (aa, bb) = match bs.couplings() {
                Some((a0, b0)) => (Complex64::new(a0 * a0, 0.0), Complex64::new(b0 * b0, 0.0)),
                None => (bs.a_hat(e) * bs.a_hat(-e), bs.b_hat(e) * bs.b_hat(-e)),
            };
            let ab = if c[1] == ProductClass::Lower { Complex64::new(0.0, 0.0) } else { bs.phase_product(e) };
            let ba = if c[2] == ProductClass::Lower { Complex64::new(0.0, 0.0) } else { bs.b_hat(e) * bs.a_hat(-e) };
            return Ok(SMatrixEntries {
                s_aa: s_integral_shortcut(aa, c[0]),
                s_ab: s_integral_shortcut(ab, c[1]),
                s_ba: s_integral_shortcut(ba, c[2]),
                s_bb: s_integral_shortcut(bb, c[3]),
            });
        }
        if let BoundaryKind::BkSmooth { a0, b0, l_x, l_p, eta } = bs.kind {
            if (l_x * l_p - 2.0 * std::f64::consts::PI).abs() < 1e-12 {
                let g = a0 * b0;
                return Ok(SMatrixEntries {
                    s_aa: Complex64::new(0.5 * a0 * a0, 0.0),
                    s_ab: g * omega_plus_eta(e, eta),
                    s_ba: g * omega_minus_eta(-e, eta),
                    s_bb: Complex64::new(0.5 * b0 * b0, 0.0),
                });
            }
        }
    }
    let a = |t: f64| bs.a_hat(t);
    let b = |t: f64| bs.b_hat(t);
    Ok(SMatrixEntries {
        s_aa: s_integral(a, a, e)?,
        s_ab: s_integral(a, b, e)?,
        s_ba: s_integral(b, a, e)?,
        s_bb: s_integral(b, b, e)?,
    })
}

/// F(E) alone.
pub fn jost_value(bs: &BoundarySpectrum, e: f64) -> Result<Complex64> {
    Ok(s_matrix(bs, e, SPath::Auto)?.jost())
}

/// F(E), F(−E) and the constants of the solution at E.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JostEvaluation {
    pub energy: f64,
    pub f: Complex64,
    pub f_neg: Complex64,
    pub a: Complex64,
    pub b: Complex64,
    pub c0: Complex64,
    pub c_inf: Complex64,
    pub s: SMatrixEntries,
    /// |F(E)| ≤ 1e−8.
    pub bound: bool,
}

/// Jost data at E.
///
/// Scattering states take C0 = F(E), C∞ = F(−E), A = (1 − S_ba)â + S_aa b̂,
/// B = −S_bb â + (1 + S_ab) b̂. Bound states take C0 = C∞ = 0 with A = S_aa,
/// B = 1 + S_ab, except for the Berry-Keating and Riemann families which use the
/// normalisation A = −B = −1 (the two choices differ by an overall factor).
pub fn jost(bs: &BoundarySpectrum, e: f64) -> Result<JostEvaluation> {
    jost_with(bs, e, SPath::Auto)
}

pub fn jost_with(bs: &BoundarySpectrum, e: f64, path: SPath) -> Result<JostEvaluation> {
    let s = s_matrix(bs, e, path)?;
    let f = s.jost();
    let f_neg = s_matrix(bs, -e, path)?.jost();
    let zero = Complex64::new(0.0, 0.0);
    let bound = f.norm() <= TOL.root;
    let (a, b, c0, c_inf) = if bound {
        match bs.kind {
            BoundaryKind::BkSmooth { .. } | BoundaryKind::RiemannExact(_) => {
                (Complex64::new(-1.0, 0.0), Complex64::new(1.0, 0.0), zero, zero)
            }
            _ => (s.s_aa, 1.0 + s.s_ab, zero, zero),
        }
    } else {
        let (ah, bh) = (bs.a_hat(e), bs.b_hat(e));
        (
            (1.0 - s.s_ba) * ah + s.s_aa * bh,
            -s.s_bb * ah + (1.0 + s.s_ab) * bh,
            f,
            f_neg,
        )
    };
    Ok(JostEvaluation {
        energy: e,
        f,
        f_neg,
        a,
        b,
        c0,
        c_inf,
        s,
        bound,
    })
}

/// arg(F(E)/F(−E)) in (−π, π].
pub fn scattering_phase(bs: &BoundarySpectrum, e: f64) -> Result<f64> {
    let f = jost_value(bs, e)?;
    if f.norm() <= TOL.root {
        return Err(XpError::BoundStateEnergy(e));
    }
    Ok((f / jost_value(bs, -e)?).arg())
}

/// Scattering phase unwound along an increasing grid.
pub fn scattering_phase_curve(bs: &BoundarySpectrum, grid: &[f64]) -> Result<Vec<f64>> {
    let mut unwrap = PhaseUnwrapper::new();
    grid.iter()
        .map(|&e| Ok(unwrap.push(scattering_phase(bs, e)?).theta))
        .collect()
}
