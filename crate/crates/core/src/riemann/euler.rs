//! Primes and the truncated Euler product.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::siegel::nu;
use crate::error::{Result, XpError};

/// Primes p ≤ n by the sieve of Eratosthenes.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// Number of primes ≤ n.
pub fn prime_count(n: u64) -> usize {
    primes_up_to(n).len()
}

/// ζ_E(t) = Π_{p ≤ ν(t)} (1 − p^{−1/2−it})^{−1}, the Euler product cut at μ(t) = π(ν(t)) primes.
pub fn euler_truncated(t: f64) -> Result<Complex64> {
    if !(t > 8.0 * PI) {
        return Err(XpError::Domain {
            what: "euler_truncated",
            value: t,
            expected: "t > 8 pi",
        });
    }
    let one = Complex64::new(1.0, 0.0);
    let prod = primes_up_to(nu(t)?).into_iter().fold(one, |acc, p| {
        let pf = p as f64;
        let term = Complex64::from_polar(pf.powf(-0.5), -t * pf.ln());
        acc / (one - term)
    });
    Ok(prod)
}
