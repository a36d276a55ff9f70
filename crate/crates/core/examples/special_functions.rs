//! The special-function kernel: log-gamma, θ, erfc and ₁F₂.
//!
//! cargo run --example special_functions

use xp_spectra::special_fn::{erfc_complex, hyp1f2, log_gamma_complex, omega_minus, theta};
use xp_spectra::Complex64;

fn main() -> xp_spectra::Result<()> {
    let z = Complex64::new(0.25, 7.0);
    println!("log Gamma({z}) = {}", log_gamma_complex(z)?);
    println!("theta(14.134725) = {:.10}", theta(14.134725));
    for w in [Complex64::new(0.5, 0.5), Complex64::new(3.0, -2.0), Complex64::new(-1.0, 4.0)] {
        let v = erfc_complex(w);
        println!("erfc({w}) = {:.12} (warning: {})", v.value, v.accuracy_warning);
    }
    let a = Complex64::new(0.25, 7.0);
    let one = Complex64::new(1.0, 0.0);
    let s = hyp1f2(a, Complex64::new(0.5, 0.0), a + one, Complex64::new(-std::f64::consts::PI.powi(2), 0.0))?;
    println!("1F2(a; 1/2, a+1; -pi^2) / a = {}", s / a);
    println!("Omega_-(14) = {}", omega_minus(14.0));
    Ok(())
}
