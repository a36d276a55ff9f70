//! Wave functions of the delta-function trap.

use num_complex::Complex64;

use crate::config::TOL;
use crate::error::{Result, XpError};

/// x^{−1/2+iE}.
fn mellin_wave(e: f64, x: f64) -> Complex64 {
    Complex64::from_polar(x.powf(-0.5), e * x.ln())
}

/// ψ_E(x) for a(q) = a0 δ(q − q_a), b(q) = b0 δ(q − q_b), x_a = e^{q_a} > x_b = e^{q_b}.
///
/// Bound states (|F(E)| ≤ 1e−8) are x^{−1/2+iE} on (x_b, x_a) and zero outside; scattering
/// states carry the amplitudes F(E), 1 − (a0b0/2)², F(−E) on the three intervals.
pub fn trap_wavefunction(a0: f64, b0: f64, q_a: f64, q_b: f64, e: f64, x: f64) -> Result<Complex64> {
    if !(q_a > q_b) {
        return Err(XpError::Domain {
            what: "trap_wavefunction",
            value: q_a - q_b,
            expected: "q_a > q_b",
        });
    }
    if !(x > 0.0) {
        return Err(XpError::Domain {
            what: "trap_wavefunction",
            value: x,
            expected: "x > 0",
        });
    }
    let g = a0 * b0;
    let q = q_a - q_b;
    let jost = |s: f64| 1.0 + 0.25 * g * g + g * Complex64::from_polar(1.0, s * q);
    let (xa, xb) = (q_a.exp(), q_b.exp());
    let inside = x > xb && x < xa;
    let amp = if jost(e).norm() <= TOL.root {
        if inside {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    } else if x <= xb {
        jost(e)
    } else if inside {
        Complex64::new(1.0 - 0.25 * g * g, 0.0)
    } else {
        jost(-e)
    };
    Ok(amp * mellin_wave(e, x))
}
