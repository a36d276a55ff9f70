//! Principal-value identities behind the S-integrals.
//!
//! cargo run --release --example hilbert_identities

use xp_spectra::special_fn::{hilbert_pv, omega_minus, omega_plus, Parity};
use xp_spectra::spectral_solver::s_integral;
use xp_spectra::wavefn::dispersion_residual;
use xp_spectra::Complex64;

fn main() -> xp_spectra::Result<()> {
    for e in [3.0, 15.0, 40.0] {
        let hp = hilbert_pv(omega_plus, e, 40.0)?;
        let hm = hilbert_pv(omega_minus, e, 40.0)?;
        println!(
            "E = {e:>4}: |H[Omega+] - Omega+| = {:.1e}, |H[Omega-] + Omega-| = {:.1e}",
            (hp - omega_plus(e)).norm(),
            (hm + omega_minus(e)).norm()
        );
    }

    // Shuffle relation S_fg(E) + S_gf(−E) = f(E) g(−E) for two Gaussians.
    let f = |w: f64| Complex64::new((-(w - 1.0).powi(2) / 4.0).exp(), 0.0);
    let g = |w: f64| Complex64::new(0.0, (-(w + 0.5).powi(2) / 2.0).exp());
    for e in [-1.0, 0.3, 2.0] {
        let lhs = s_integral(f, g, e)? + s_integral(g, f, -e)?;
        println!("shuffle at E = {e:>4}: residual {:.1e}", (lhs - f(e) * g(-e)).norm());
    }

    let z = Complex64::new(14.0, 2.0);
    println!("dispersion residual at {z}: {:.1e}", dispersion_residual(2.0, Parity::Plus, z)?);
    Ok(())
}
