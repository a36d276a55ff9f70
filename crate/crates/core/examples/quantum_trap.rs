//! Delta-function boundaries: the quantum trap with bound states at 2πn/q_ab.
//!
//! cargo run --example quantum_trap

use std::f64::consts::PI;

use xp_spectra::spectral_solver::{
    find_bound_states, jost, scattering_phase_curve, trap_wavefunction, BoundarySpectrum,
};
use xp_spectra::wavefn::bound_norm;

fn main() -> xp_spectra::Result<()> {
    let q_ab = 1.0;
    for eps in [-1.0, 1.0] {
        let bs = BoundarySpectrum::trap_epsilon(eps, q_ab);
        let states = find_bound_states(&bs, 1.0, 20.0, 0.01)?;
        println!("epsilon = {eps:+}:");
        for s in &states {
            println!("  E = {:.12} = {:.9} pi, norm = {:.9}", s.energy, s.energy / PI, bound_norm(&bs, s.energy)?.norm_quadrature);
        }
    }

    let bs = BoundarySpectrum::trap_epsilon(-1.0, q_ab);
    let grid: Vec<f64> = (1..=12).map(|k| 0.5 * k as f64 + 0.05).collect();
    let phase = scattering_phase_curve(&bs, &grid)?;
    println!("\n{:>6} {:>12} {:>12}", "E", "|F(E)|", "delta(E)");
    for (e, d) in grid.iter().zip(&phase) {
        println!("{e:>6.2} {:>12.6} {d:>12.6}", jost(&bs, *e)?.f.norm());
    }

    let a0 = 2f64.sqrt();
    println!("\nbound state at 2 pi, |psi(x)| across the well (x_b = 1, x_a = e):");
    for x in [0.5, 1.5, 2.5, 3.0] {
        println!("  x = {x}: {:.6}", trap_wavefunction(a0, -a0, q_ab, 0.0, 2.0 * PI, x)?.norm());
    }
    Ok(())
}
