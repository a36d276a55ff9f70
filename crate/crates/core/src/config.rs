//! Numerical tolerances shared by every module.

/// Central tolerance record. `Tolerances::default()` is used throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Absolute accuracy targeted by the special-function kernels.
    pub special_abs: f64,
    /// Absolute accuracy targeted by quadrature.
    pub quadrature: f64,
    /// Relative tolerance of adaptive Gauss-Kronrod.
    pub adaptive_rel: f64,
    /// |F| below which an energy counts as a zero of the Jost function.
    pub root: f64,
    /// Maximal grid step for phase unwinding.
    pub phase_step: f64,
    /// Step for central finite differences of counting functions.
    pub fd_step: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        TOL
    }
}

pub const TOL: Tolerances = Tolerances {
    special_abs: 1e-10,
    quadrature: 1e-8,
    adaptive_rel: 1e-9,
    root: 1e-8,
    phase_step: 0.01,
    fd_step: 1e-4,
};
