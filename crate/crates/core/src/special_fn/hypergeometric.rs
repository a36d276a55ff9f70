//! ₁F₂ series and the Ω± split of e^{2iθ}.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::phase::{exp_2i_theta_complex, theta_eta, Parity};
use crate::error::{Result, XpError};

const MAX_TERMS: usize = 500;

/// ₁F₂(a; b1, b2; x) by its power series with compensated summation.
///
/// Stops once the term ratio and the term itself are below 1e-16 relative to the sum.
pub fn hyp1f2(a: Complex64, b1: Complex64, b2: Complex64, x: Complex64) -> Result<Complex64> {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut comp = Complex64::new(0.0, 0.0);
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        let ratio = (a + kf) / ((b1 + kf) * (b2 + kf) * (kf + 1.0)) * x;
        term *= ratio;
        // Neumaier summation, component-wise.
        let t = sum + term;
        comp.re += if sum.re.abs() >= term.re.abs() {
            (sum.re - t.re) + term.re
        } else {
            (term.re - t.re) + sum.re
        };
        comp.im += if sum.im.abs() >= term.im.abs() {
            (sum.im - t.im) + term.im
        } else {
            (term.im - t.im) + sum.im
        };
        sum = t;
        if !sum.re.is_finite() || !sum.im.is_finite() {
            return Err(XpError::NonFinite(x.re));
        }
        if ratio.norm() < 1.0 && term.norm() <= 1e-17 * (sum + comp).norm().max(1e-300) {
            return Ok(sum + comp);
        }
    }
    Err(XpError::SeriesCap(MAX_TERMS))
}

/// Ω−(E): the part of e^{2iθ±(E)} that is analytic in the lower half plane.
///
/// For `Plus`, 2∫₀¹ x^{−1/2+iE} cos(2πx) dx = 4/(1+2iE) ₁F₂(1/4+iE/2; 1/2, 5/4+iE/2; −π²).
/// For `Minus`, 2∫₀¹ x^{−1/2+iE} sin(2πx) dx = (2π/a) ₁F₂(a; 3/2, a+1; −π²), a = 3/4+iE/2.
pub fn omega_minus_eta(e: f64, eta: Parity) -> Complex64 {
    let x = Complex64::new(-PI * PI, 0.0);
    let v = match eta {
        Parity::Plus => {
            let a = Complex64::new(0.25, 0.5 * e);
            hyp1f2(a, Complex64::new(0.5, 0.0), a + 1.0, x).map(|h| h / a)
        }
        Parity::Minus => {
            let a = Complex64::new(0.75, 0.5 * e);
            hyp1f2(a, Complex64::new(1.5, 0.0), a + 1.0, x).map(|h| h * (2.0 * PI) / a)
        }
    };
    // The argument is fixed at −π², so the series converges in a few dozen terms for any E.
    v.expect("1F2 at -pi^2 converges well inside the term cap")
}

/// Ω−(z) at complex z; fails at the poles z = i(2n + 2s) in the upper half plane.
pub fn omega_minus_complex(z: Complex64, eta: Parity) -> Result<Complex64> {
    let x = Complex64::new(-PI * PI, 0.0);
    let iz2 = Complex64::new(0.0, 0.5) * z;
    match eta {
        Parity::Plus => {
            let a = 0.25 + iz2;
            Ok(hyp1f2(a, Complex64::new(0.5, 0.0), a + 1.0, x)? / a)
        }
        Parity::Minus => {
            let a = 0.75 + iz2;
            Ok(hyp1f2(a, Complex64::new(1.5, 0.0), a + 1.0, x)? * (2.0 * PI) / a)
        }
    }
}

/// Ω+(z) = e^{2iθ(z)} − Ω−(z) at complex z.
pub fn omega_plus_complex(z: Complex64, eta: Parity) -> Result<Complex64> {
    Ok(exp_2i_theta_complex(z, eta)? - omega_minus_complex(z, eta)?)
}

/// Ω−(E) for the even parity.
pub fn omega_minus(e: f64) -> Complex64 {
    omega_minus_eta(e, Parity::Plus)
}

/// Ω+(E) = e^{2iθ±(E)} − Ω−(E), analytic in the upper half plane and vanishing at +i∞.
pub fn omega_plus_eta(e: f64, eta: Parity) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * theta_eta(e, eta)) - omega_minus_eta(e, eta)
}

/// Ω+(E) for the even parity.
pub fn omega_plus(e: f64) -> Complex64 {
    omega_plus_eta(e, Parity::Plus)
}
