//! Semiclassical counting and boundaries built from a prescribed fluctuation term.
//!
//! cargo run --example semiclassical_boundary

use std::f64::consts::PI;

use xp_spectra::semiclassical::{
    boundary_from_nfl, count_bk, count_connes, count_smooth, nfl_semiclassical, CountOffset,
    FluctuationDensity, PhaseBoundary,
};

fn main() -> xp_spectra::Result<()> {
    for e in [20.0, 50.0, 100.0] {
        println!(
            "E = {e:>5}: N_BK = {:.5}, <N> = {:.5}, Connes (Lambda = 10) = {:.5}",
            count_bk(e)?,
            count_smooth(e, CountOffset::One)?,
            count_connes(e, 10.0)?
        );
    }

    let bk = PhaseBoundary::berry_keating(1.0)?;
    println!("\nBerry-Keating boundary: n_fl(40) = {:.2e}", nfl_semiclassical(&bk, 40.0)?);

    let eps = 0.002;
    let d = FluctuationDensity::new(
        move |e| eps * (e / 2.0).sin().powi(3),
        move |e| 1.5 * eps * (e / 2.0).sin().powi(2) * (e / 2.0).cos(),
    );
    let grid: Vec<f64> = (0..6000).map(|k| 2.0 * PI + 0.01 * k as f64).collect();
    let b = boundary_from_nfl(&d, 1.0, 2.0 * PI, &grid)?;
    println!("\nreconstructed boundary, n_fl = {eps} sin^3(E/2):");
    for e in [10.0, 20.0, 30.0, 40.0] {
        println!("  E = {e}: target {:+.6e}, recovered {:+.6e}", d.n_fl(e), nfl_semiclassical(&b, e)?);
    }
    Ok(())
}
