//! Counting functions: the staircase N_R, the smooth count and the model's N_QM.
//!
//! cargo run --release --example counting_curve

use xp_spectra::riemann::{
    count_qm, n_fl_exact_with, smooth_count, track_nfl, JumpKind, RiemannConfig, Staircase, Truncation,
};

fn main() -> xp_spectra::Result<()> {
    let trunc = Truncation::BkSmoothed { k: 4.0 };
    let cfg = RiemannConfig::canonical(trunc);
    let st = Staircase::scan(80.0, trunc)?;
    println!("zeros below 80: {}", st.zeros().len());
    println!("{:>6} {:>4} {:>10} {:>10} {:>10}", "E", "N_R", "<N>", "N_QM", "N_fl");
    for k in 0..=15 {
        let e = 10.0 + 2.0 * k as f64;
        println!(
            "{e:>6.1} {:>4} {:>10.5} {:>10.5} {:>10.5}",
            st.count(e),
            smooth_count(e),
            count_qm(&cfg, e)?,
            n_fl_exact_with(&st, e).value
        );
    }

    let grid: Vec<f64> = (0..=3000).map(|k| 50.0 + 0.01 * k as f64).collect();
    let track = track_nfl(&grid, Truncation::RsMain)?;
    println!("\nn_fl jumps on (50, 80) with the rs truncation:");
    for j in &track.jumps {
        let kind = match j.kind {
            JumpKind::NuIncrement => "nu increment",
            JumpKind::AxisCrossing => "axis crossing",
        };
        println!("  t = {:.2}: {kind}, delta = {:+.3}", j.t, j.delta);
    }
    Ok(())
}
