//! Forest bounds for `d`-regular graphs: the spectral bound, its split by
//! component count, and the 4-regular growth rate.

use serde::{Deserialize, Serialize};

use super::entropy::h;
use super::km::j_d;
use super::report::BoundReport;
use crate::error::{Error, Result};

fn check_degree(d: usize, min: usize) -> Result<()> {
    if d < min {
        return Err(Error::domain(format!("degree must be at least {min}, got {d}")));
    }
    Ok(())
}

/// `((d+1)/η)((d−1)/(d−η))^{(d−2)/2}` with
/// `η = ((d+1)² − (d+1)√(d²−2d+5)) / (2(d−1))`.
pub fn ks_bound(d: usize) -> Result<BoundReport> {
    check_degree(d, 3)?;
    let df = d as f64;
    let eta = ((df + 1.0).powi(2) - (df + 1.0) * (df * df - 2.0 * df + 5.0).sqrt()) / (2.0 * (df - 1.0));
    let value = (df + 1.0) / eta * ((df - 1.0) / (df - eta)).powf((df - 2.0) / 2.0);
    Ok(BoundReport::new("ks_bound", value, "d-regular simple graph, per vertex, forests")
        .param("d", df)
        .param("eta", eta))
}

/// `∫ ln(d + α − x) dμ_KM`.
pub fn log_spectral_term(d: usize, alpha: f64) -> Result<f64> {
    let s = d as f64 + alpha;
    Ok(s.ln() + j_d(d, 1.0 / s)?)
}

fn second_log_term(d: usize, c: f64) -> f64 {
    d as f64 / 2.0 * h(2.0 * (1.0 - c) / d as f64)
}

/// Smallest `c` keeping the entropy argument `2(1−c)/d` at most `1/2`.
fn min_c(d: usize) -> f64 {
    (1.0 - d as f64 / 4.0).max(0.0)
}

/// Per-vertex rate `max(exp(∫ln(d+α−x)dμ + c ln(1/α)), exp((d/2) H(2(1−c)/d)))`.
pub fn improved_forest_bound(d: usize, alpha: f64, c: f64) -> Result<f64> {
    check_degree(d, 3)?;
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::domain(format!("α must lie in (0, 1], got {alpha}")));
    }
    if !(0.0..=1.0).contains(&c) || c < min_c(d) {
        return Err(Error::domain(format!("c = {c} outside [{}, 1]", min_c(d))));
    }
    let first = log_spectral_term(d, alpha)? - c * alpha.ln();
    Ok(first.max(second_log_term(d, c)).exp())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ImprovedBound {
    pub d: usize,
    pub value: f64,
    pub alpha: f64,
    pub c: f64,
    /// The two rates at the optimum.
    pub spectral_rate: f64,
    pub entropy_rate: f64,
}

/// For fixed `α < 1` the first rate grows and the second shrinks with `c`, so
/// the best `c` equalises them; it is found by bisection.
fn best_c(d: usize, alpha: f64) -> Result<(f64, f64)> {
    let base = log_spectral_term(d, alpha)?;
    let gap = |c: f64| base - c * alpha.ln() - second_log_term(d, c);
    let (mut lo, mut hi) = (min_c(d), 1.0);
    if gap(hi) <= 0.0 {
        return Ok((1.0, (base - alpha.ln()).max(second_log_term(d, 1.0))));
    }
    if gap(lo) >= 0.0 {
        return Ok((lo, base - lo * alpha.ln()));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if gap(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let c = 0.5 * (lo + hi);
    Ok((c, (base - c * alpha.ln()).max(second_log_term(d, c))))
}

/// Golden-section minimisation of a unimodal function on `[a, b]`.
pub(crate) fn golden_section(mut a: f64, mut b: f64, tol: f64, f: impl Fn(f64) -> Result<f64>) -> Result<f64> {
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = b - ratio * (b - a);
    let mut x2 = a + ratio * (b - a);
    let (mut f1, mut f2) = (f(x1)?, f(x2)?);
    let mut iterations = 0;
    while b - a > tol {
        iterations += 1;
        if iterations > 500 {
            return Err(Error::NoConvergence("golden-section search".into()));
        }
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - ratio * (b - a);
            f1 = f(x1)?;
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + ratio * (b - a);
            f2 = f(x2)?;
        }
    }
    Ok(0.5 * (a + b))
}

pub const IMPROVED_DEGREES: std::ops::RangeInclusive<usize> = 5..=12;

/// Minimises [`improved_forest_bound`] over `(α, c)`: a coarse grid in `α`,
/// then golden-section refinement, with `c` chosen to equalise the two rates.
pub fn optimize_improved_bound(d: usize) -> Result<ImprovedBound> {
    if !IMPROVED_DEGREES.contains(&d) {
        return Err(Error::domain(format!("optimised bound supports d in 5..=12, got {d}")));
    }
    let grid: Vec<f64> = (1..=100).map(|i| i as f64 * 0.01).collect();
    let values = grid.iter().map(|&a| best_c(d, a).map(|r| r.1)).collect::<Result<Vec<_>>>()?;
    let best = (0..grid.len())
        .min_by(|&i, &j| values[i].total_cmp(&values[j]))
        .expect("grid is non-empty");
    let lo = grid[best.saturating_sub(1)];
    let hi = grid[(best + 1).min(grid.len() - 1)];
    let alpha = golden_section(lo, hi, 1e-10, |a| best_c(d, a).map(|r| r.1))?;
    let (c, log_value) = best_c(d, alpha)?;
    let spectral_rate = (log_spectral_term(d, alpha)? - c * alpha.ln()).exp();
    let entropy_rate = second_log_term(d, c).exp();
    Ok(ImprovedBound { d, value: log_value.exp(), alpha, c, spectral_rate, entropy_rate })
}

impl ImprovedBound {
    pub fn report(&self) -> BoundReport {
        BoundReport::new("improved_forest_bound", self.value, "d-regular simple graph, per vertex, forests, up to a factor 2")
            .param("d", self.d as f64)
            .param("alpha", self.alpha)
            .param("c", self.c)
    }
}

/// The two growth rates `(exp(2H((1−ε)/2)), (27/8) exp(H(ε)))` for 4-regular graphs.
pub fn four_regular_rates(eps: f64) -> Result<(f64, f64)> {
    if !(eps > 0.0 && eps < 0.5) {
        return Err(Error::domain(format!("ε must lie in (0, 1/2), got {eps}")));
    }
    Ok(((2.0 * h((1.0 - eps) / 2.0)).exp(), 27.0 / 8.0 * h(eps).exp()))
}

/// `max` of the two 4-regular rates.
pub fn four_regular_rate(eps: f64) -> Result<f64> {
    let (a, b) = four_regular_rates(eps)?;
    Ok(a.max(b))
}

/// The `ε` minimising [`four_regular_rate`] and the rate there.
pub fn optimize_four_regular() -> Result<(f64, f64)> {
    let eps = golden_section(1e-9, 0.5 - 1e-9, 1e-12, four_regular_rate)?;
    Ok((eps, four_regular_rate(eps)?))
}
