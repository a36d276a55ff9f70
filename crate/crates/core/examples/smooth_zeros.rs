//! Zeros of 1 + e^{2iθ(E)}: the bound states of the Berry-Keating boundaries.
//!
//! cargo run --example smooth_zeros

use xp_spectra::special_fn::{theta, theta_asymptotic, theta_prime};
use xp_spectra::spectral_solver::{default_grid_step, find_bound_states, BoundarySpectrum};
use xp_spectra::wavefn::smooth_zero;

fn main() -> xp_spectra::Result<()> {
    let bs = BoundarySpectrum::bk_canonical(true);
    let found = find_bound_states(&bs, 10.0, 30.0, default_grid_step(30.0))?;
    println!("{:>3} {:>16} {:>16} {:>10} {:>12}", "m", "E_m (scan)", "E_m (phase)", "|F|", "theta/pi");
    for (k, s) in found.iter().enumerate() {
        let direct = smooth_zero(k as u32 + 1)?;
        println!(
            "{:>3} {:>16.10} {:>16.10} {:>10.1e} {:>12.6}",
            k + 1,
            s.energy,
            direct,
            s.residual,
            theta(s.energy) / std::f64::consts::PI
        );
    }

    println!("\nasymptotic phase and density");
    for e in [20.0, 50.0, 100.0, 500.0] {
        let gap = (theta(e) - theta_asymptotic(e)?).abs();
        println!("E = {e:>5}: |theta - theta_asym| E = {:.3e}, theta' = {:.6}", gap * e, theta_prime(e));
    }
    Ok(())
}
