//! Boundary data â(E), b̂(E) in Mellin space.

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::riemann::{FProvider, RiemannConfig};
use crate::special_fn::phase::{theta_eta, Parity};

/// A boundary function of the energy.
pub type SpectralFn = Arc<dyn Fn(f64) -> Complex64 + Send + Sync>;

/// Which family a boundary pair belongs to; selects closed forms where they exist.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum BoundaryKind {
    /// Delta-function potentials a(q) = a0 δ(q − q_a), b(q) = b0 δ(q − q_b).
    Trap { a0: f64, b0: f64, q_a: f64, q_b: f64 },
    /// Berry-Keating boundaries â = a0 (2π/l_p)^{iE} e^{2iθη(E)}, b̂ = b0 l_x^{iE}.
    BkSmooth {
        a0: f64,
        b0: f64,
        l_x: f64,
        l_p: f64,
        eta: Parity,
    },
    /// Boundaries carrying the fluctuation phase of f(t).
    RiemannExact(RiemannConfig),
    Custom,
}

/// Upper-half-plane behaviour of a product f̂(E)ĝ(−E), used by the S-integral shortcut.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ProductClass {
    /// Analytic and vanishing at +i∞: its Hilbert transform is itself.
    Upper,
    /// Analytic and vanishing at −i∞: its Hilbert transform is minus itself.
    Lower,
    /// Constant: its Hilbert transform vanishes.
    Constant,
}

/// A boundary pair â, b̂ with its family tag.
#[derive(Clone)]
pub struct BoundarySpectrum {
    a_hat: SpectralFn,
    b_hat: SpectralFn,
    pub kind: BoundaryKind,
    /// Asserts that â(E)b̂(−E) is analytic in the upper half plane and vanishes there,
    /// b̂(E)â(−E) likewise in the lower half plane, and the diagonal products are constant.
    pub analytic_upper: bool,
    provider: Option<Arc<dyn FProvider>>,
}

impl std::fmt::Debug for BoundarySpectrum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BoundarySpectrum")
            .field("kind", &self.kind)
            .field("analytic_upper", &self.analytic_upper)
            .finish_non_exhaustive()
    }
}

impl BoundarySpectrum {
    /// Arbitrary boundary functions.
    pub fn custom<A, B>(a_hat: A, b_hat: B, analytic_upper: bool) -> Self
    where
        A: Fn(f64) -> Complex64 + Send + Sync + 'static,
        B: Fn(f64) -> Complex64 + Send + Sync + 'static,
    {
        BoundarySpectrum {
            a_hat: Arc::new(a_hat),
            b_hat: Arc::new(b_hat),
            kind: BoundaryKind::Custom,
            analytic_upper,
            provider: None,
        }
    }

    /// The quantum trap: â = a0 e^{iEq_a}, b̂ = b0 e^{iEq_b}.
    pub fn trap(a0: f64, b0: f64, q_a: f64, q_b: f64) -> Self {
        BoundarySpectrum {
            a_hat: Arc::new(move |e| Complex64::from_polar(a0, e * q_a)),
            b_hat: Arc::new(move |e| Complex64::from_polar(b0, e * q_b)),
            kind: BoundaryKind::Trap { a0, b0, q_a, q_b },
            analytic_upper: true,
            provider: None,
        }
    }

    /// Trap with a0 b0 / 2 = ε, a0 = |b0|, q_b = 0 and q_a = q_ab.
    pub fn trap_epsilon(epsilon: f64, q_ab: f64) -> Self {
        let a0 = (2.0 * epsilon.abs()).sqrt();
        Self::trap(a0, a0 * epsilon.signum(), q_ab, 0.0)
    }

    /// Berry-Keating boundaries.
    ///
    /// With `analytic_upper` the S-integrals take the shortcut values
    /// S_ab = â(E)b̂(−E), S_ba = 0, S_aa = a0²/2, S_bb = b0²/2, so that for a0 b0 = 2ε
    /// F = 2(1 + ε e^{2iθ}) with real zeros at the smooth zeros. Without it the
    /// S-integrals are exact: S_ab = a0b0 Ω+(E), S_ba = a0b0 Ω−(−E).
    pub fn bk_smooth(a0: f64, b0: f64, l_x: f64, l_p: f64, eta: Parity, analytic_upper: bool) -> Self {
        BoundarySpectrum {
            a_hat: Arc::new(move |e| {
                Complex64::from_polar(a0, e * (2.0 * PI / l_p).ln() + 2.0 * theta_eta(e, eta))
            }),
            b_hat: Arc::new(move |e| Complex64::from_polar(b0, e * l_x.ln())),
            kind: BoundaryKind::BkSmooth { a0, b0, l_x, l_p, eta },
            analytic_upper,
            provider: None,
        }
    }

    /// Canonical Berry-Keating pair a0 = b0 = √2, l_x = 1, l_p = 2π, even parity.
    pub fn bk_canonical(analytic_upper: bool) -> Self {
        let r = 2f64.sqrt();
        Self::bk_smooth(r, r, 1.0, 2.0 * PI, Parity::Plus, analytic_upper)
    }

    pub(crate) fn riemann(cfg: RiemannConfig, provider: Arc<dyn FProvider>) -> Self {
        let pa = provider.clone();
        let pb = provider.clone();
        BoundarySpectrum {
            a_hat: Arc::new(move |e| {
                let u = pa.unit_phase(e);
                Complex64::from_polar(cfg.a0, e * (2.0 * PI / cfg.l_p).ln() + 2.0 * theta_eta(e, cfg.eta)) * u
            }),
            b_hat: Arc::new(move |e| {
                let u = pb.unit_phase(e);
                Complex64::from_polar(cfg.epsilon * cfg.b0, e * cfg.l_x.ln()) * u.conj()
            }),
            kind: BoundaryKind::RiemannExact(cfg),
            analytic_upper: true,
            provider: Some(provider),
        }
    }

    pub fn a_hat(&self, e: f64) -> Complex64 {
        (self.a_hat)(e)
    }

    pub fn b_hat(&self, e: f64) -> Complex64 {
        (self.b_hat)(e)
    }

    /// â(E) b̂(−E), with a single f evaluation for the Riemann boundaries.
    pub fn phase_product(&self, e: f64) -> Complex64 {
        if let (BoundaryKind::RiemannExact(cfg), Some(p)) = (&self.kind, &self.provider) {
            let u = p.unit_phase(e);
            let scale = (2.0 * PI / (cfg.l_x * cfg.l_p)).ln();
            return Complex64::from_polar(cfg.epsilon * cfg.a0 * cfg.b0, e * scale + 2.0 * theta_eta(e, cfg.eta)) * u * u;
        }
        self.a_hat(e) * self.b_hat(-e)
    }

    /// Classes of the four products (aa, ab, ba, bb) when the shortcut applies.
    pub fn product_classes(&self) -> Option<[ProductClass; 4]> {
        use ProductClass::*;
        match self.kind {
            BoundaryKind::Trap { q_a, q_b, .. } => {
                let q = q_a - q_b;
                let (ab, ba) = if q > 0.0 {
                    (Upper, Lower)
                } else if q < 0.0 {
                    (Lower, Upper)
                } else {
                    (Constant, Constant)
                };
                Some([Constant, ab, ba, Constant])
            }
            _ if self.analytic_upper => Some([Constant, Upper, Lower, Constant]),
            _ => None,
        }
    }

    /// The counting phase n(E) with â(E)b̂(−E) = a0 b0 ε e^{2πi n(E)}, when it is known.
    pub fn phase_count(&self, e: f64) -> Option<f64> {
        match self.kind {
            BoundaryKind::Trap { q_a, q_b, .. } => Some(e * (q_a - q_b) / (2.0 * PI)),
            BoundaryKind::BkSmooth { l_x, l_p, eta, .. } => {
                Some(theta_eta(e, eta) / PI + e * (2.0 * PI / (l_x * l_p)).ln() / (2.0 * PI))
            }
            BoundaryKind::RiemannExact(cfg) => {
                let p = self.provider.as_ref()?;
                let nfl = p.unit_phase(e).arg() / PI;
                Some(theta_eta(e, cfg.eta) / PI + nfl + e * (2.0 * PI / (cfg.l_x * cfg.l_p)).ln() / (2.0 * PI))
            }
            BoundaryKind::Custom => None,
        }
    }

    /// Largest |f̂(−E) − f̂(E)*| over the grid for f = a, b.
    pub fn reality_residual(&self, grid: &[f64]) -> f64 {
        grid.iter()
            .map(|&e| {
                let ra = (self.a_hat(-e) - self.a_hat(e).conj()).norm();
                let rb = (self.b_hat(-e) - self.b_hat(e).conj()).norm();
                ra.max(rb)
            })
            .fold(0.0, f64::max)
    }

    /// Couplings (a0, b0) of the tagged families.
    pub fn couplings(&self) -> Option<(f64, f64)> {
        match self.kind {
            BoundaryKind::Trap { a0, b0, .. } | BoundaryKind::BkSmooth { a0, b0, .. } => Some((a0, b0)),
            BoundaryKind::RiemannExact(cfg) => Some((cfg.a0, cfg.epsilon * cfg.b0)),
            BoundaryKind::Custom => None,
        }
    }
}
