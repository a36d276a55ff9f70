//! The Riemann-Siegel phase θ(E) and its parity partner.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::gamma::{digamma, log_gamma_complex, trigamma};
use crate::error::{Result, XpError};

/// Parity of the boundary extension: `Plus` pairs with ζ, `Minus` with the odd L-function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    Plus,
    Minus,
}

impl Parity {
    fn shift(self) -> f64 {
        match self {
            Parity::Plus => 0.25,
            Parity::Minus => 0.75,
        }
    }
}

/// A phase together with the number of 2π windings removed while tracking it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhaseValue {
    pub theta: f64,
    pub branch_index: i64,
}

/// θ±(E) = Im log Γ(s± + iE/2) − (E/2) log π, with s+ = 1/4 and s− = 3/4.
///
/// The principal log-gamma is continuous on Re z > 0, so the returned phase needs
/// no unwinding and `branch_index` is always 0.
pub fn theta_pm(e: f64, eta: Parity) -> PhaseValue {
    PhaseValue {
        theta: theta_eta(e, eta),
        branch_index: 0,
    }
}

/// θ±(E) as a plain number.
pub fn theta_eta(e: f64, eta: Parity) -> f64 {
    if e == 0.0 {
        return 0.0;
    }
    // Evaluate at |E| and use oddness so that θ(−E) = −θ(E) holds bit for bit.
    let a = e.abs();
    let lg = log_gamma_complex(Complex64::new(eta.shift(), 0.5 * a))
        .expect("Re z > 0 is never a pole");
    let v = lg.im - 0.5 * a * PI.ln();
    if e < 0.0 {
        -v
    } else {
        v
    }
}

/// θ(E) = θ+(E), the phase of ζ(1/2 − iE).
pub fn theta(e: f64) -> f64 {
    theta_eta(e, Parity::Plus)
}

/// Leading asymptotic form (E/2) log(E/2π) − E/2 − π/8.
pub fn theta_asymptotic(e: f64) -> Result<f64> {
    if !(e > 0.0) {
        return Err(XpError::Domain {
            what: "theta_asymptotic",
            value: e,
            expected: "E > 0",
        });
    }
    Ok(0.5 * e * (e / (2.0 * PI)).ln() - 0.5 * e - PI / 8.0)
}

/// θ'(t) = ½ Re ψ(1/4 + it/2) − ½ log π.
pub fn theta_prime(t: f64) -> f64 {
    0.5 * digamma(Complex64::new(0.25, 0.5 * t)).re - 0.5 * PI.ln()
}

/// θ''(t) = −¼ Im ψ'(1/4 + it/2).
pub fn theta_second(t: f64) -> f64 {
    -0.25 * trigamma(Complex64::new(0.25, 0.5 * t)).im
}

/// e^{2iθη(z)} = π^{−iz} Γ(s + iz/2)/Γ(s − iz/2) for complex z; poles at z = i(2n + 2s).
pub fn exp_2i_theta_complex(z: Complex64, eta: Parity) -> Result<Complex64> {
    let iz2 = Complex64::new(0.0, 0.5) * z;
    let s = Complex64::new(eta.shift(), 0.0);
    let num = log_gamma_complex(s + iz2)?;
    let den = log_gamma_complex(s - iz2)?;
    Ok((num - den - Complex64::new(0.0, 1.0) * z * PI.ln()).exp())
}

/// Continuous unwinding of a sampled phase; feed samples in grid order.
#[derive(Debug, Clone, Default)]
pub struct PhaseUnwrapper {
    last: Option<f64>,
    winding: i64,
}

impl PhaseUnwrapper {
    pub fn new() -> Self {
        Self::default()
    }

    /// Takes a raw phase in (−π, π] and returns the continuous value.
    pub fn push(&mut self, raw: f64) -> PhaseValue {
        if let Some(prev) = self.last {
            let d = raw - prev;
            if d > PI {
                self.winding -= 1;
            } else if d < -PI {
                self.winding += 1;
            }
        }
        self.last = Some(raw);
        PhaseValue {
            theta: raw + 2.0 * PI * self.winding as f64,
            branch_index: self.winding,
        }
    }
}
