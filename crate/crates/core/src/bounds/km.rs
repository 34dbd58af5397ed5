//! The Kesten–McKay measure: the spectral measure of the infinite
//! `d`-regular tree at its root.
//!
//! Its density `d √(4(d−1) − x²) / (2π (d² − x²))` has square-root zeros at
//! the edges of the support `[−2√(d−1), 2√(d−1)]`. Substituting
//! `x = 2√(d−1) sin θ` turns an integral against it into the integral of a
//! smooth periodic function over `θ ∈ [−π/2, π/2]`, where the equally spaced
//! rule converges geometrically; nodes are doubled until two successive
//! rules agree.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const MAX_NODES: usize = 1 << 20;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct KMQuadrature {
    pub d: usize,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl KMQuadrature {
    /// Fixed rule with `count` interior nodes.
    pub fn new(d: usize, count: usize) -> Result<Self> {
        if d < 2 {
            return Err(Error::domain(format!("Kesten–McKay measure needs d >= 2, got {d}")));
        }
        let r = support_radius(d);
        let df = d as f64;
        let step = PI / (count + 1) as f64;
        let (nodes, weights) = (1..=count)
            .map(|i| {
                let theta = -PI / 2.0 + i as f64 * step;
                let (s, c) = theta.sin_cos();
                let x = r * s;
                let w = step * df * r * r * c * c / (2.0 * PI * (df * df - x * x));
                (x, w)
            })
            .unzip();
        Ok(KMQuadrature { d, nodes, weights })
    }

    pub fn apply(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }
}

pub fn support_radius(d: usize) -> f64 {
    2.0 * ((d - 1) as f64).sqrt()
}

/// Density of the measure at `x`; zero outside the support.
pub fn km_density(d: usize, x: f64) -> f64 {
    let r = support_radius(d);
    if x.abs() >= r {
        return 0.0;
    }
    let df = d as f64;
    df * (r * r - x * x).sqrt() / (2.0 * PI * (df * df - x * x))
}

/// `∫ f dμ` to absolute error `1e-10`, or relative error `1e-13` when the
/// integral is large.
pub fn km_integrate(d: usize, f: impl Fn(f64) -> f64) -> Result<f64> {
    let mut count = 16;
    let mut prev = KMQuadrature::new(d, count)?.apply(&f);
    while count < MAX_NODES {
        count = 2 * count + 1;
        let next = KMQuadrature::new(d, count)?.apply(&f);
        if !next.is_finite() {
            break;
        }
        if (next - prev).abs() <= 1e-10_f64.max(1e-13 * next.abs()) {
            return Ok(next);
        }
        prev = next;
    }
    Err(Error::NoConvergence(format!("Kesten–McKay quadrature for d={d} after {count} nodes")))
}

/// `J_d(γ) = ∫ ln(1 − γx) dμ`, in closed form.
pub fn j_d(d: usize, gamma: f64) -> Result<f64> {
    if d < 2 {
        return Err(Error::domain(format!("J_d needs d >= 2, got {d}")));
    }
    let radius = 1.0 / support_radius(d);
    if gamma.is_nan() || gamma.abs() >= radius {
        return Err(Error::domain(format!("|γ| = {} must be below 1/(2√(d−1)) = {radius}", gamma.abs())));
    }
    let df = d as f64;
    let disc = 1.0 - 4.0 * (df - 1.0) * gamma * gamma;
    // Equal to (1 − √disc) / (2(d−1)γ²), without the cancellation near γ = 0.
    let eta = 2.0 / (1.0 + disc.sqrt());
    Ok(-(eta.ln() + (df - 2.0) / 2.0 * ((df - eta) / (df - 1.0)).ln()))
}
