//! Jost function, bound states and scattering for arbitrary boundary data.

pub mod bound;
pub mod jost;
pub mod spectrum;
pub mod trap;

pub use bound::{default_grid_step, find_bound_states, BoundState};
pub use jost::{
    jost, jost_value, jost_with, s_integral, s_integral_shortcut, s_matrix, scattering_phase, scattering_phase_curve,
    JostEvaluation, SMatrixEntries, SPath,
};
pub use spectrum::{BoundaryKind, BoundarySpectrum, ProductClass, SpectralFn};
pub use trap::trap_wavefunction;
