//! The Riemann zeros as bound states in the continuum, for each truncation of f(t).
//!
//! cargo run --release --example riemann_zeros

use xp_spectra::riemann::{
    riemann_boundary_default, riemann_zeros, zeta_factorized, RiemannConfig, Truncation,
};
use xp_spectra::spectral_solver::{default_grid_step, find_bound_states};

fn main() -> xp_spectra::Result<()> {
    let exact = riemann_zeros(10.0, 30.0, Truncation::BkSmoothed { k: 4.0 })?;
    println!("sign changes of Z (bk): {exact:.6?}");

    for trunc in [Truncation::MainSum, Truncation::RsMain, Truncation::BkSmoothed { k: 4.0 }] {
        let cfg = RiemannConfig::canonical(trunc);
        let bs = riemann_boundary_default(cfg);
        let states = find_bound_states(&bs, 10.0, 30.0, default_grid_step(30.0))?;
        let energies: Vec<f64> = states.iter().map(|s| s.energy).collect();
        println!("{:>10}: {energies:.6?}", trunc.label());
    }

    // ζ(1/2 − it) ≈ f(−t) F(t)/2 on the critical line.
    let cfg = RiemannConfig::canonical(Truncation::RsMain);
    for t in [14.134725, 20.0, 50.0, 99.0] {
        let z = zeta_factorized(&cfg, t)?;
        println!("t = {t:>9}: f(-t)F(t)/2 = {:+.6} {:+.6}i", z.re, z.im);
    }
    Ok(())
}
