//! Bound-state wave functions, norms and overlaps.
//!
//! cargo run --release --example wave_functions

use xp_spectra::riemann::{riemann_boundary_default, RiemannConfig, Truncation};
use xp_spectra::spectral_solver::{find_bound_states, BoundarySpectrum};
use xp_spectra::wavefn::{bound_norm, bound_overlap, psi_bound_smooth, smooth_zero, TruncatedWaveFunction};

fn main() -> xp_spectra::Result<()> {
    let smooth = BoundarySpectrum::bk_canonical(true);
    let zeros: Vec<f64> = (1..=3).map(smooth_zero).collect::<xp_spectra::Result<_>>()?;
    for &e in &zeros {
        let n = bound_norm(&smooth, e)?;
        let tail = psi_bound_smooth(e, 50.0)?.norm() * 50f64.sqrt();
        println!(
            "E = {e:.6}: norm {:.5} vs 4 pi n' {:.5} (gap {:.2}%), |sqrt(x) psi(50)| = {tail:.4}",
            n.norm_quadrature,
            n.norm_density,
            100.0 * n.relative_gap
        );
    }
    println!("overlap of the first two: {:.5}", bound_overlap(&smooth, zeros[0], zeros[1])?);

    let bs = riemann_boundary_default(RiemannConfig::canonical(Truncation::BkSmoothed { k: 4.0 }));
    let e1 = find_bound_states(&bs, 13.5, 14.5, 0.01)?[0].energy;
    let scale = bound_norm(&bs, e1)?.norm_density.sqrt();
    let w = TruncatedWaveFunction::new(&bs, e1, 60.0)?;
    println!("\nfirst Riemann zero E = {e1:.8}, Lambda = 60, normalized |psi|:");
    for x in [0.1, 0.5, 1.0, 2.0, 4.0, 8.0] {
        println!("  x = {x:>4}: {:.5}", w.eval(x).norm() / scale);
    }
    Ok(())
}
