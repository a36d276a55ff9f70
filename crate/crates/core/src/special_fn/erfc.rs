//! Complementary error function of a complex argument.

use std::f64::consts::PI;

use std::sync::OnceLock;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// |z| up to which accuracy is guaranteed.
pub const ERFC_GUARANTEED_RADIUS: f64 = 50.0;

/// erfc(z) with a flag raised when the result may be inaccurate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ErfcValue {
    pub value: Complex64,
    /// Set outside |z| ≤ 50 or when the result overflowed.
    pub accuracy_warning: bool,
}

/// erfc(z); see [`erfc_complex`] for the flagged variant.
pub fn erfc(z: Complex64) -> Complex64 {
    erfc_complex(z).value
}

/// erfc(z) = 1 − erf(z), entire in z.
///
/// Re z < 0 uses erfc(z) = 2 − erfc(−z). For |z| < 1 the Taylor series of erf is used;
/// elsewhere erfc(z) = e^{−z²} w(iz) with the Faddeeva function w from Weideman's
/// rational expansion in (L + iζ)/(L − iζ), accurate to about 1e−13 relative.
pub fn erfc_complex(z: Complex64) -> ErfcValue {
    if z.re < 0.0 {
        let r = erfc_complex(-z);
        return ErfcValue {
            value: 2.0 - r.value,
            accuracy_warning: r.accuracy_warning,
        };
    }
    let value = if z.norm() < 1.0 { 1.0 - erf_series(z) } else { (-z * z).exp() * faddeeva_upper(Complex64::new(-z.im, z.re)) };
    ErfcValue {
        value,
        accuracy_warning: z.norm() > ERFC_GUARANTEED_RADIUS || !(value.re.is_finite() && value.im.is_finite()),
    }
}

const WEIDEMAN_TERMS: usize = 48;

fn weideman() -> &'static (f64, [f64; WEIDEMAN_TERMS]) {
    static COEFFS: OnceLock<(f64, [f64; WEIDEMAN_TERMS])> = OnceLock::new();
    COEFFS.get_or_init(|| {
        let n = WEIDEMAN_TERMS as f64;
        let m = 2 * WEIDEMAN_TERMS;
        let l = (n / 2f64.sqrt()).sqrt();
        let h: Vec<f64> = (1..m)
            .map(|k| {
                let t = l * (0.5 * k as f64 * PI / m as f64).tan();
                (-t * t).exp() * (l * l + t * t)
            })
            .collect();
        let mut a = [0.0; WEIDEMAN_TERMS];
        for (j, aj) in a.iter_mut().enumerate() {
            let j = (j + 1) as f64;
            // h is even in k: sum k = 0 once, ±k twice (h(0) = L²).
            let mut s = l * l;
            for (i, hk) in h.iter().enumerate() {
                s += 2.0 * hk * (PI * j * (i + 1) as f64 / m as f64).cos();
            }
            *aj = s / (2 * m) as f64;
        }
        (l, a)
    })
}

/// w(ζ) = e^{−ζ²} erfc(−iζ) for Im ζ ≥ 0.
fn faddeeva_upper(zeta: Complex64) -> Complex64 {
    let (l, a) = weideman();
    let i = Complex64::new(0.0, 1.0);
    let den = *l - i * zeta;
    let r = (*l + i * zeta) / den;
    let mut p = Complex64::new(0.0, 0.0);
    for &c in a.iter().rev() {
        p = p * r + c;
    }
    2.0 * p / (den * den) + 1.0 / (PI.sqrt() * den)
}

fn erf_series(z: Complex64) -> Complex64 {
    // erf z = 2/√π Σ (−1)^n z^{2n+1} / (n! (2n+1))
    let z2 = z * z;
    let mut power = z;
    let mut sum = z;
    for n in 1..400 {
        power *= -z2 / n as f64;
        let term = power / (2 * n + 1) as f64;
        sum += term;
        if term.norm() <= 1e-17 * sum.norm() {
            break;
        }
    }
    sum * (2.0 / PI.sqrt())
}
