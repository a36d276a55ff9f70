//! Boundaries whose bound states are the Riemann zeros.
//!
//! f(t) enters the boundary phases through n_fl(t) = arg f(t)/π; the Jost function is
//! F(t) = 2(1 + ε e^{2iθ(t)} f(t)/f(−t)) for the canonical couplings, and
//! ζ(1/2 − it) = f(−t) F(t)/2.

pub mod counting;
pub mod euler;
pub mod siegel;

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use counting::{
    n_fl_exact, n_fl_exact_with, riemann_zeros, smooth_count, track_nfl, JumpKind, NflExact, NflJump, NflTrack,
    Staircase,
};
pub use euler::{euler_truncated, prime_count, primes_up_to};
pub use siegel::{
    bk_weight, f_bk_smoothed, f_rs, f_truncated, nu, rs_remainder, z_main_sum, z_rs_main, BkSum, FTValue, Truncation,
    BK_N_MAX,
};

use crate::error::{Result, XpError};
use crate::special_fn::phase::{theta_eta, Parity};
use crate::spectral_solver::BoundarySpectrum;

/// Parameters of the Riemann boundary pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RiemannConfig {
    pub eta: Parity,
    /// ±1.
    pub epsilon: f64,
    pub a0: f64,
    pub b0: f64,
    pub l_x: f64,
    pub l_p: f64,
    pub truncation: Truncation,
}

impl RiemannConfig {
    /// η = +, ε = 1, a0 = b0 = √2, l_x = 1, l_p = 2π.
    pub fn canonical(truncation: Truncation) -> Self {
        RiemannConfig {
            eta: Parity::Plus,
            epsilon: 1.0,
            a0: 2f64.sqrt(),
            b0: 2f64.sqrt(),
            l_x: 1.0,
            l_p: 2.0 * PI,
            truncation,
        }
    }

    /// Checks l_x l_p = 2π, positivity and ε = ±1.
    pub fn validate(&self) -> Result<()> {
        if !(self.l_x > 0.0 && self.l_p > 0.0) || (self.l_x * self.l_p - 2.0 * PI).abs() > 1e-9 {
            return Err(XpError::Domain {
                what: "RiemannConfig",
                value: self.l_x * self.l_p,
                expected: "l_x l_p = 2 pi with l_x, l_p > 0",
            });
        }
        if self.epsilon.abs() != 1.0 {
            return Err(XpError::Domain {
                what: "RiemannConfig.epsilon",
                value: self.epsilon,
                expected: "+1 or -1",
            });
        }
        Ok(())
    }
}

/// A source of f(t) on the whole real line, with f(−t) = f(t)*.
pub trait FProvider: Send + Sync {
    fn f(&self, t: f64) -> Result<Complex64>;

    /// e^{iπ n_fl(t)} = f/|f|; 1 where f cannot be evaluated or vanishes.
    fn unit_phase(&self, t: f64) -> Complex64 {
        match self.f(t) {
            Ok(v) if v.norm() > 0.0 => v / v.norm(),
            _ => Complex64::new(1.0, 0.0),
        }
    }
}

impl FProvider for Truncation {
    fn f(&self, t: f64) -> Result<Complex64> {
        Truncation::f(self, t)
    }
}

/// n_fl ≡ 0.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoFluctuation;

impl FProvider for NoFluctuation {
    fn f(&self, _t: f64) -> Result<Complex64> {
        Ok(Complex64::new(1.0, 0.0))
    }
}

/// â = a0 (2π/l_p)^{iE} e^{i(πn_fl + 2θη)}, b̂ = ε b0 l_x^{iE} e^{−iπn_fl}.
pub fn riemann_boundary(cfg: RiemannConfig, provider: Arc<dyn FProvider>) -> BoundarySpectrum {
    BoundarySpectrum::riemann(cfg, provider)
}

/// Boundary with f from the configured truncation.
pub fn riemann_boundary_default(cfg: RiemannConfig) -> BoundarySpectrum {
    riemann_boundary(cfg, Arc::new(cfg.truncation))
}

/// F(t) = 1 + (a0b0/2)² + ε a0 b0 (2π/(l_x l_p))^{it} e^{2iθη(t)} f(t)/f(−t).
///
/// For the canonical couplings this is 2(1 + e^{2iθ} f(t)/f(−t)), twice ζ(1/2 − it)/f(−t).
pub fn jost_riemann(cfg: &RiemannConfig, t: f64) -> Result<Complex64> {
    let f = cfg.truncation.f(t)?;
    let fm = f.conj();
    if fm.norm() < 1e-12 {
        return Err(XpError::FZero {
            t: -t,
            magnitude: fm.norm(),
        });
    }
    let g = cfg.a0 * cfg.b0;
    let phase = t * (2.0 * PI / (cfg.l_x * cfg.l_p)).ln() + 2.0 * theta_eta(t, cfg.eta);
    Ok(1.0 + 0.25 * g * g + cfg.epsilon * g * Complex64::from_polar(1.0, phase) * f / fm)
}

/// f(−t) F(t)/2, the factorised approximation of ζ(1/2 − it).
pub fn zeta_factorized(cfg: &RiemannConfig, t: f64) -> Result<Complex64> {
    Ok(cfg.truncation.f(-t)? * jost_riemann(cfg, t)? / 2.0)
}

/// N_QM(t) = θη(t)/π + n_fl(t) + 3/2 with the principal n_fl = arg f(t)/π.
pub fn count_qm(cfg: &RiemannConfig, t: f64) -> Result<f64> {
    let v = cfg.truncation.value(t)?;
    Ok(theta_eta(t, cfg.eta) / PI + v.n_fl + 1.5)
}
