//! Hardy's Z(t), the truncated Dirichlet sum f(t) and its Berry-Keating smoothing.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Result, XpError};
use crate::special_fn::erfc::erfc;
use crate::special_fn::phase::{theta, theta_prime, theta_second};

/// f(t) = ρ e^{iπ n_fl}, with n_fl the principal phase over π.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FTValue {
    pub f: Complex64,
    pub rho: f64,
    pub n_fl: f64,
}

impl FTValue {
    /// Rejects |f| < 1e−12, where the phase is undefined.
    pub fn from_complex(t: f64, f: Complex64) -> Result<Self> {
        let rho = f.norm();
        if !(rho >= 1e-12) {
            return Err(XpError::FZero { t, magnitude: rho });
        }
        Ok(FTValue { f, rho, n_fl: f.arg() / PI })
    }
}

/// ν(t) = ⌊√(t/2π)⌋.
pub fn nu(t: f64) -> Result<u64> {
    if !(t >= 0.0) {
        return Err(XpError::Domain {
            what: "nu",
            value: t,
            expected: "t >= 0",
        });
    }
    Ok(nu_unchecked(t))
}

pub(crate) fn nu_unchecked(t: f64) -> u64 {
    (t.abs() / (2.0 * PI)).sqrt().floor() as u64
}

fn check_above_two_pi(what: &'static str, t: f64) -> Result<()> {
    if t > 2.0 * PI {
        Ok(())
    } else {
        Err(XpError::Domain {
            what,
            value: t,
            expected: "t > 2 pi",
        })
    }
}

/// 2 Σ_{n≤ν} n^{−1/2} cos(θ(t) − t log n); zero when ν = 0.
pub fn z_main_sum(t: f64) -> f64 {
    let th = theta(t);
    2.0 * (1..=nu_unchecked(t))
        .map(|n| {
            let nf = n as f64;
            (th - t * nf.ln()).cos() / nf.sqrt()
        })
        .sum::<f64>()
}

/// Leading Riemann-Siegel remainder (−1)^{ν−1} (t/2π)^{−1/4} cos(2π(p²−p−1/16)) / cos(2πp),
/// p = √(t/2π) − ν.
pub fn rs_remainder(t: f64) -> f64 {
    let t = t.abs();
    let v = nu_unchecked(t);
    if v == 0 {
        return 0.0;
    }
    let s = (t / (2.0 * PI)).sqrt();
    let psi = |p: f64| (2.0 * PI * (p * p - p - 1.0 / 16.0)).cos() / (2.0 * PI * p).cos();
    let p = s - v as f64;
    // Removable singularities at p = 1/4 and 3/4.
    let c = if (2.0 * PI * p).cos().abs() < 1e-7 {
        0.5 * (psi(p - 1e-5) + psi(p + 1e-5))
    } else {
        psi(p)
    };
    let sign = if v % 2 == 1 { 1.0 } else { -1.0 };
    sign * s.powf(-0.5) * c
}

/// Z(t) from the main sum plus the leading remainder term.
///
/// The bare main sum is off by O(t^{−1/4}), enough to move the low zeros by 0.1–0.4;
/// `z_main_sum` keeps it for comparison.
pub fn z_rs_main(t: f64) -> f64 {
    z_main_sum(t) + rs_remainder(t)
}

fn dirichlet_sum(t: f64, n_max: u64) -> Complex64 {
    (1..=n_max)
        .map(|n| {
            let nf = n as f64;
            Complex64::from_polar(nf.powf(-0.5), -t * nf.ln())
        })
        .sum()
}

/// f(t) = Σ_{n≤ν(t)} n^{−1/2−it}.
pub fn f_truncated(t: f64) -> Result<FTValue> {
    check_above_two_pi("f_truncated", t)?;
    FTValue::from_complex(t, dirichlet_sum(t, nu_unchecked(t)))
}

/// f(t) + ½ e^{−iθ} R₀(t): the truncated sum with the remainder folded in, so that
/// 2 Re(e^{iθ} f) = z_rs_main.
pub fn f_rs(t: f64) -> Result<FTValue> {
    check_above_two_pi("f_rs", t)?;
    let f = dirichlet_sum(t, nu_unchecked(t)) + Complex64::from_polar(0.5 * rs_remainder(t), -theta(t));
    FTValue::from_complex(t, f)
}

/// Smoothed sum together with its truncation bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BkSum {
    pub value: FTValue,
    /// Number of terms summed.
    pub terms: u64,
    /// Set when the weight at the cap is still ≥ 1e−12.
    pub truncation_warning: bool,
}

/// Default cap on the number of smoothed terms.
pub const BK_N_MAX: u64 = 100_000;

/// Berry-Keating weight β_n(t) = ½ erfc(ξ √(t/2) / Q), ξ = log n − θ'(t), Q² = K² − i t θ''(t).
pub fn bk_weight(n: u64, t: f64, k: f64) -> Complex64 {
    let q = Complex64::new(k * k, -t * theta_second(t)).sqrt();
    let scale = (0.5 * t).sqrt() / q;
    0.5 * erfc(scale * ((n as f64).ln() - theta_prime(t)))
}

/// f(t) = Σ β_n(t) n^{−1/2−it}, summed until Re(ξ√(t/2)/Q) > 5 (β_n < 1e−12) or `n_max` is hit.
pub fn f_bk_smoothed(t: f64, k: f64, n_max: u64) -> Result<BkSum> {
    if !(t > 0.0) {
        return Err(XpError::Domain {
            what: "f_bk_smoothed",
            value: t,
            expected: "t > 0",
        });
    }
    if !(k > 0.0) {
        return Err(XpError::Domain {
            what: "f_bk_smoothed",
            value: k,
            expected: "K > 0",
        });
    }
    let q = Complex64::new(k * k, -t * theta_second(t)).sqrt();
    let scale = (0.5 * t).sqrt() / q;
    let tp = theta_prime(t);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut last = Complex64::new(1.0, 0.0);
    let mut n = 0u64;
    let mut converged = false;
    while n < n_max {
        n += 1;
        let nf = n as f64;
        let z = scale * (nf.ln() - tp);
        if z.re > 5.0 {
            converged = true;
            n -= 1;
            break;
        }
        let beta = if z.re < -6.0 { Complex64::new(1.0, 0.0) } else { 0.5 * erfc(z) };
        sum += beta * Complex64::from_polar(nf.powf(-0.5), -t * nf.ln());
        last = beta;
    }
    Ok(BkSum {
        value: FTValue::from_complex(t, sum)?,
        terms: n,
        truncation_warning: !converged && last.norm() >= 1e-12,
    })
}

/// Which approximation of f(t) to use.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Truncation {
    /// The bare partial sum to ν(t).
    MainSum,
    /// Partial sum plus the leading Riemann-Siegel remainder (`rs`).
    RsMain,
    /// Berry-Keating smoothing with width parameter K (`bk`).
    BkSmoothed { k: f64 },
}

impl Default for Truncation {
    fn default() -> Self {
        Truncation::BkSmoothed { k: 4.0 }
    }
}

impl Truncation {
    /// f(t) for any real t: 1 for |t| < 2π, f(−t) = f(t)* for t < 0.
    pub fn f(&self, t: f64) -> Result<Complex64> {
        if t.abs() <= 2.0 * PI {
            return Ok(Complex64::new(1.0, 0.0));
        }
        if t < 0.0 {
            return Ok(self.f(-t)?.conj());
        }
        let v = match *self {
            Truncation::MainSum => f_truncated(t)?.f,
            Truncation::RsMain => f_rs(t)?.f,
            Truncation::BkSmoothed { k } => f_bk_smoothed(t, k, BK_N_MAX)?.value.f,
        };
        Ok(v)
    }

    /// f(t) as an [`FTValue`]; fails where |f| < 1e−12.
    pub fn value(&self, t: f64) -> Result<FTValue> {
        FTValue::from_complex(t, self.f(t)?)
    }

    /// Z(t) = 2 Re(e^{iθ(t)} f(t)).
    pub fn hardy_z(&self, t: f64) -> Result<f64> {
        Ok(2.0 * (Complex64::from_polar(1.0, theta(t)) * self.f(t)?).re)
    }

    /// ζ(1/2 − it) ≈ f(−t) + e^{2iθ(t)} f(t).
    pub fn zeta_half_minus(&self, t: f64) -> Result<Complex64> {
        let f = self.f(t)?;
        Ok(f.conj() + Complex64::from_polar(1.0, 2.0 * theta(t)) * f)
    }

    /// Short label used in tables.
    pub fn label(&self) -> String {
        match self {
            Truncation::MainSum => "main".into(),
            Truncation::RsMain => "rs".into(),
            Truncation::BkSmoothed { k } => format!("bk(K={k})"),
        }
    }
}
