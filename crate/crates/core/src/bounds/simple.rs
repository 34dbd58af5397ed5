//! Bounds from degrees and edge counts alone.

use super::entropy::h;
use super::report::BoundReport;
use crate::error::{Error, Result};
use crate::graph::MultiGraph;

/// `F(G) ≤ 2^m`, per vertex.
pub fn trivial_bound(g: &MultiGraph) -> BoundReport {
    let n = g.vertex_count().max(1) as f64;
    BoundReport::new("trivial", (g.edge_count() as f64 / n).exp2(), "any graph, per vertex, all edge subsets")
        .param("m", g.edge_count() as f64)
}

/// `F(G) ≤ ∏ (d_v + 1)`, reported per vertex with the log of the full product.
pub fn product_degree_bound(g: &MultiGraph) -> BoundReport {
    let ln_product: f64 = g.degrees().iter().map(|&d| ((d + 1) as f64).ln()).sum();
    let n = g.vertex_count();
    let value = if n == 0 { 1.0 } else { (ln_product / n as f64).exp() };
    BoundReport::new("product_degree", value, "any graph, per vertex, forests").param("ln_product", ln_product)
}

/// `F(G)^{1/n} ≤ exp((d̄/2) H(2/d̄))` for average degree `d̄ ≥ 4`.
pub fn average_degree_forest_bound(dbar: f64) -> Result<BoundReport> {
    if !(dbar >= 4.0 && dbar.is_finite()) {
        return Err(Error::domain(format!("average degree must be at least 4, got {dbar}")));
    }
    let value = (dbar / 2.0 * h(2.0 / dbar)).exp();
    Ok(BoundReport::new("average_degree_forest", value, "average degree >= 4, per vertex, forests").param("dbar", dbar))
}

/// `2^{d/2} (1 − 2^{−d}) exp(d / (2^d (2^d − 1)))`, with the per-vertex
/// pair-correlation sum `d / 2^{2d−1}` as a parameter.
pub fn janson_connected_bound(d: usize) -> Result<BoundReport> {
    if d == 0 {
        return Err(Error::domain("connected-subgraph bound needs d >= 1"));
    }
    let df = d as f64;
    let p = df.exp2();
    let value = (df / 2.0).exp2() * (1.0 - 1.0 / p) * (df / (p * (p - 1.0))).exp();
    let delta = df / (2.0 * df - 1.0).exp2();
    Ok(BoundReport::new("janson_connected", value, "d-regular simple graph, per vertex, connected spanning subgraphs")
        .param("d", df)
        .param("delta_per_vertex", delta))
}

/// `C(G) ≤ (2/(d̄−2)) exp(n (d̄/2) H(2/d̄))` for `2 < d̄ ≤ 4`. Not per vertex.
pub fn average_connected_bound(dbar: f64, n: usize) -> Result<f64> {
    if !(dbar > 2.0 && dbar <= 4.0) {
        return Err(Error::domain(format!("average degree must lie in (2, 4], got {dbar}")));
    }
    Ok(2.0 / (dbar - 2.0) * (n as f64 * dbar / 2.0 * h(2.0 / dbar)).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named_graph;

    #[test]
    fn product_and_average() {
        let r = product_degree_bound(&named_graph("complete(6)").unwrap());
        assert!((r.value - 6.0).abs() < 1e-12);
        let c3 = product_degree_bound(&named_graph("cycle(3)").unwrap());
        assert!((c3.params["ln_product"].exp() - 27.0).abs() < 1e-9);
        assert_eq!(product_degree_bound(&MultiGraph::new(1)).value, 1.0);
        assert!((average_degree_forest_bound(6.0).unwrap().value - 6.75).abs() < 1e-12);
        assert!((average_degree_forest_bound(5.0).unwrap().value - 5.3792).abs() < 1e-4);
        assert!((average_degree_forest_bound(4.0).unwrap().value - 4.0).abs() < 1e-12);
        assert!(average_degree_forest_bound(3.5).is_err());
    }

    #[test]
    fn connected_bounds() {
        let j = janson_connected_bound(3).unwrap();
        assert!((j.value - 2.6110).abs() < 1e-4);
        assert!((j.params["delta_per_vertex"] - 3.0 / 32.0).abs() < 1e-15);
        let big = janson_connected_bound(40).unwrap().value / 20f64.exp2();
        assert!((big - 1.0).abs() < 1e-9);
        let k4 = average_connected_bound(3.0, 4).unwrap();
        assert!((k4 - 91.1).abs() < 0.05 && k4 >= 38.0);
        assert!(average_connected_bound(2.0, 5).is_err());
        assert!(average_connected_bound(2.0001, 5).unwrap() > 1e4);
    }
}
