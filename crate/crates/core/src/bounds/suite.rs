use serde::{Deserialize, Serialize};

use super::regular::{ks_bound, optimize_improved_bound, IMPROVED_DEGREES};
use super::report::BoundReport;
use super::simple::{
    average_connected_bound, average_degree_forest_bound, janson_connected_bound, product_degree_bound, trivial_bound,
};
use crate::budget::Budget;
use crate::count::{count_connected_spanning, count_forests, Backend, BigCount};
use crate::error::Result;
use crate::graph::MultiGraph;
use crate::par;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Quantity {
    Forests,
    Connected,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteEntry {
    pub quantity: Quantity,
    pub bound: BoundReport,
    /// Exact per-vertex value, when it could be computed.
    pub observed: Option<f64>,
    /// `false` means the bound is violated.
    pub holds: Option<bool>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteReport {
    pub forests: Option<BigCount>,
    pub connected: Option<BigCount>,
    pub entries: Vec<SuiteEntry>,
}

impl SuiteReport {
    pub fn violations(&self) -> impl Iterator<Item = &SuiteEntry> {
        self.entries.iter().filter(|e| e.holds == Some(false))
    }
}

const SLACK: f64 = 1e-9;

/// Every bound whose precondition `g` meets, checked against exact counts
/// when those fit in `budget`.
pub fn bound_suite(g: &MultiGraph, budget: &Budget) -> SuiteReport {
    let n = g.vertex_count();
    let forests = count_forests(g, Backend::Auto, budget).ok();
    let connected = count_connected_spanning(g, Backend::Auto, budget).ok();
    let per_vertex = |c: &Option<BigCount>| c.as_ref().filter(|_| n > 0).map(|c| c.root(n));
    let (f_rate, c_rate) = (per_vertex(&forests), per_vertex(&connected));

    let mut bounds = vec![
        (Quantity::Forests, trivial_bound(g)),
        (Quantity::Connected, trivial_bound(g)),
        (Quantity::Forests, product_degree_bound(g)),
    ];
    let dbar = g.average_degree();
    if let Ok(b) = average_degree_forest_bound(dbar) {
        bounds.push((Quantity::Forests, b));
    }
    if n > 0 && g.is_connected() {
        if let Ok(total) = average_connected_bound(dbar, n) {
            let b = BoundReport::new("average_connected", total.powf(1.0 / n as f64), "connected, average degree in (2, 4], per vertex")
                .param("dbar", dbar)
                .param("total", total);
            bounds.push((Quantity::Connected, b));
        }
    }
    if let Some(d) = g.regular_degree().filter(|_| n > 0) {
        if g.is_simple() {
            if let Ok(b) = janson_connected_bound(d) {
                bounds.push((Quantity::Connected, b));
            }
            if let Ok(b) = ks_bound(d) {
                bounds.push((Quantity::Forests, b));
            }
            if IMPROVED_DEGREES.contains(&d) {
                if let Ok(b) = optimize_improved_bound(d) {
                    let mut r = b.report();
                    // Two equal terms: F ≤ 2 C_d^n.
                    r.value *= 2f64.powf(1.0 / n as f64);
                    r.name = "improved_forest_bound_with_factor_2".into();
                    bounds.push((Quantity::Forests, r));
                }
            }
        }
    }

    let entries = bounds
        .into_iter()
        .map(|(quantity, bound)| {
            let observed = match quantity {
                Quantity::Forests => f_rate,
                Quantity::Connected => c_rate,
            };
            let holds = observed.map(|o| o <= bound.value * (1.0 + SLACK));
            SuiteEntry { quantity, bound, observed, holds }
        })
        .collect();
    SuiteReport { forests, connected, entries }
}

/// One row of the forest-bound comparison for a degree `d`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ForestTableRow {
    pub d: usize,
    pub new_bound: f64,
    pub alpha: f64,
    pub c: f64,
    pub ks: f64,
    pub product: f64,
    pub average: f64,
}

/// Rows for each `d` in `degrees`, computed in parallel, in input order.
pub fn forest_table(degrees: &[usize]) -> Result<Vec<ForestTableRow>> {
    par::map(degrees, |&d| {
        let opt = optimize_improved_bound(d)?;
        Ok(ForestTableRow {
            d,
            new_bound: opt.value,
            alpha: opt.alpha,
            c: opt.c,
            ks: ks_bound(d)?.value,
            product: (d + 1) as f64,
            average: average_degree_forest_bound(d as f64)?.value,
        })
    })
    .into_iter()
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named_graph;

    #[test]
    fn petersen_suite_holds() {
        let r = bound_suite(&named_graph("petersen").unwrap(), &Budget::default());
        assert!(r.violations().next().is_none());
        let names: Vec<&str> = r.entries.iter().map(|e| e.bound.name.as_str()).collect();
        for want in ["trivial", "product_degree", "janson_connected", "ks_bound"] {
            assert!(names.contains(&want), "{want}");
        }
        assert!(r.entries.iter().all(|e| e.holds == Some(true)));
    }

    #[test]
    fn k4_and_edgeless() {
        let r = bound_suite(&named_graph("k4").unwrap(), &Budget::default());
        let f = 38f64.powf(0.25);
        assert!(r.entries.iter().filter(|e| e.quantity == Quantity::Forests).all(|e| e.bound.value >= f));
        let e = bound_suite(&MultiGraph::new(3), &Budget::default());
        assert_eq!(e.forests, Some(BigCount::one()));
        assert!(e.entries.iter().all(|x| x.bound.value >= 1.0));
    }

    #[test]
    fn table_rows_in_order() {
        let rows = forest_table(&[5, 6]).unwrap();
        assert_eq!(rows.iter().map(|r| r.d).collect::<Vec<_>>(), vec![5, 6]);
        assert!(rows.iter().all(|r| r.new_bound < r.ks && r.ks < r.product));
    }
}
