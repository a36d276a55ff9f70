//! Spectral realization of the Riemann zeros with the quantized `xp` Hamiltonian.
//!
//! The crate is organised bottom-up:
//!
//! * [`special_fn`]: complex log-gamma, the phases θ±(E), the Ω± split of e^{2iθ},
//!   the complex complementary error function and principal-value quadrature.
//! * [`semiclassical`]: phase-space counting functions and the reconstruction of
//!   classical boundaries from a prescribed fluctuation term.
//! * [`spectral_solver`]: S-integrals, the Jost function, bound-state search and the
//!   delta-function quantum trap.
//! * [`riemann`]: Riemann-Siegel and Berry-Keating realizations of f(t), the boundary
//!   spectrum whose bound states sit at the Riemann zeros, counting and Euler products.
//! * [`wavefn`]: bound-state wave functions, norms and overlaps.
//! * [`cli`]: the table-producing commands behind the `xp-spectra` binary.

pub mod cli;
pub mod config;
pub mod error;
pub mod quad;
pub mod riemann;
pub mod roots;
pub mod semiclassical;
pub mod special_fn;
pub mod spectral_solver;
pub mod wavefn;

pub use error::{Result, XpError};
pub use num_complex::Complex64;
