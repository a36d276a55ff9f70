//! Complex log-gamma, digamma and trigamma.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Result, XpError};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

fn lanczos_log(z: Complex64) -> Complex64 {
    let zm = z - 1.0;
    let mut series = Complex64::new(LANCZOS[0], 0.0);
    for (k, c) in LANCZOS.iter().enumerate().skip(1) {
        series += *c / (zm + k as f64);
    }
    let t = zm + LANCZOS_G + 0.5;
    HALF_LN_2PI + (zm + 0.5) * t.ln() - t + series.ln()
}

/// log sin(pi z) continuous in the closed upper half plane.
fn log_sin_pi_upper(z: Complex64) -> Complex64 {
    let i = Complex64::i();
    let e = (2.0 * PI * i * z).exp();
    -std::f64::consts::LN_2 + i * (PI / 2.0) - i * PI * z + (1.0 - e).ln()
}

/// Principal branch of log Γ(z), the branch continuous away from the negative real axis.
pub fn log_gamma_complex(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round() {
        return Err(XpError::GammaPole(z.re));
    }
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(XpError::NonFinite(z.re));
    }
    if z.re >= 0.5 {
        return Ok(lanczos_log(z));
    }
    if z.im < 0.0 {
        return log_gamma_complex(z.conj()).map(|v| v.conj());
    }
    // Reflection Γ(z)Γ(1-z) = π / sin(πz).
    Ok(PI.ln() - log_sin_pi_upper(z) - lanczos_log(1.0 - z))
}

const BERNOULLI: [f64; 8] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
];

const SHIFT_TO: f64 = 12.0;

/// ψ(z) = Γ'(z)/Γ(z) by upward recurrence and the asymptotic series.
pub fn digamma(z: Complex64) -> Complex64 {
    let mut z = z;
    let mut acc = Complex64::new(0.0, 0.0);
    while z.norm() < SHIFT_TO || z.re < SHIFT_TO / 2.0 {
        acc -= 1.0 / z;
        z += 1.0;
    }
    let inv = 1.0 / z;
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut p = inv2;
    for (k, b) in BERNOULLI.iter().enumerate() {
        series += *b / (2.0 * (k + 1) as f64) * p;
        p *= inv2;
    }
    acc + z.ln() - 0.5 * inv - series
}

/// ψ'(z) by upward recurrence and the asymptotic series.
pub fn trigamma(z: Complex64) -> Complex64 {
    let mut z = z;
    let mut acc = Complex64::new(0.0, 0.0);
    while z.norm() < SHIFT_TO || z.re < SHIFT_TO / 2.0 {
        acc += 1.0 / (z * z);
        z += 1.0;
    }
    let inv = 1.0 / z;
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut p = inv2 * inv;
    for b in BERNOULLI.iter() {
        series += *b * p;
        p *= inv2;
    }
    acc + inv + 0.5 * inv2 + series
}
