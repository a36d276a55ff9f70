//! Complex special functions and real-line quadrature kernels.

pub mod erfc;
pub mod gamma;
pub mod hilbert;
pub mod hypergeometric;
pub mod phase;

pub use erfc::{erfc, erfc_complex, ErfcValue};
pub use gamma::{digamma, log_gamma_complex, trigamma};
pub use hilbert::{cauchy_integral, hilbert_pv, hilbert_pv_with, pv_symmetric, PvOptions};
pub use hypergeometric::{
    hyp1f2, omega_minus, omega_minus_complex, omega_minus_eta, omega_plus, omega_plus_complex, omega_plus_eta,
};
pub use phase::{
    exp_2i_theta_complex, theta, theta_asymptotic, theta_eta, theta_pm, theta_prime, theta_second, Parity, PhaseUnwrapper, PhaseValue,
};
