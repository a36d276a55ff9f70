//! The truncated Dirichlet sum f(t) against the truncated Euler product.
//!
//! cargo run --example euler_product

use xp_spectra::riemann::{euler_truncated, nu, prime_count, Truncation};

fn main() -> xp_spectra::Result<()> {
    println!("{:>6} {:>3} {:>3} {:>10} {:>10} {:>10} {:>10}", "t", "nu", "mu", "|f|", "arg f", "|zeta_E|", "arg zeta_E");
    for k in 0..=10 {
        let t = 50.0 + 5.0 * k as f64;
        let f = Truncation::MainSum.f(t)?;
        let z = euler_truncated(t)?;
        let n = nu(t)?;
        println!(
            "{t:>6.1} {n:>3} {:>3} {:>10.5} {:>10.5} {:>10.5} {:>10.5}",
            prime_count(n),
            f.norm(),
            f.arg(),
            z.norm(),
            z.arg()
        );
    }
    Ok(())
}
