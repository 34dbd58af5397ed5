use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// Natural-log binary entropy with `H(0) = H(1) = 0`.
pub fn entropy(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::domain(format!("entropy argument {x} outside [0, 1]")));
    }
    Ok(h(x))
}

pub(crate) fn h(x: f64) -> f64 {
    let term = |p: f64| if p <= 0.0 { 0.0 } else { -p * p.ln() };
    term(x) + term(1.0 - x)
}

/// `exp(m H(k/m))`, an upper bound on `Σ_{j ≤ k} C(m, j)` for `k ≤ m/2`.
pub fn binom_tail_bound(m: usize, k: usize) -> Result<f64> {
    if 2 * k > m {
        return Err(Error::domain(format!("binomial tail bound needs k <= m/2, got k={k}, m={m}")));
    }
    if m == 0 {
        return Ok(1.0);
    }
    Ok((m as f64 * h(k as f64 / m as f64)).exp())
}

/// `Σ_{j ≤ k} C(m, j)` exactly.
pub fn binom_partial_sum(m: usize, k: usize) -> BigUint {
    let mut term = BigUint::one();
    let mut total = BigUint::one();
    for j in 1..=k.min(m) {
        term = term * (m - j + 1) / j;
        total += &term;
    }
    total
}
