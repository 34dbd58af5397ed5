//! Exact counters for forests, connected spanning subgraphs, acyclic
//! orientations, spanning trees and related quantities.
//!
//! Every quantity has a brute-force oracle in [`oracle`] and at least one
//! scalable algorithm.

mod bigcount;
mod broken;
mod chromatic;
mod dc;
mod frontier;
pub mod oracle;
mod polynomial;
mod trees;
mod weakly;

use serde::{Deserialize, Serialize};

pub use bigcount::BigCount;
pub use broken::{
    broken_cycle_free_counts, broken_cycle_free_total, broken_cycles, count_broken_cycle_free,
    BROKEN_CYCLE_MAX_EDGES,
};
pub use chromatic::{chromatic_polynomial, CHROMATIC_MAX_EDGES, count_acyclic_orientations, AcyclicOrientations};
pub use dc::{count_connected_dc, count_forests_dc, count_spanning_trees_dc};
pub use frontier::{
    count_connected_frontier, count_forests_frontier, frontier_count, peak_width, vertex_order,
    FrontierMode, FrontierState, FrontierStats, VertexOrder,
};
pub use oracle::{
    count_acyclic_orientations_brute, count_connected_oracle, count_forests_oracle, count_score_vectors,
    ORACLE_MAX_EDGES, ORIENTATION_MAX_EDGES,
};
pub use polynomial::IntPolynomial;
pub use trees::count_spanning_trees;
pub use weakly::{count_weakly_induced_forests, weakly_induced_forests};

use crate::budget::Budget;
use crate::error::Result;
use crate::graph::MultiGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Backend {
    Oracle,
    DeletionContraction,
    Frontier,
    /// Oracle up to 20 edges, then the frontier with a greedy order.
    #[default]
    Auto,
}

const AUTO_ORACLE_EDGES: usize = 20;

impl Backend {
    /// The backend that actually runs on `g`; never `Auto`.
    pub fn resolve(self, g: &MultiGraph) -> Backend {
        match self {
            Backend::Auto if g.edge_count() <= AUTO_ORACLE_EDGES => Backend::Oracle,
            Backend::Auto => Backend::Frontier,
            b => b,
        }
    }
}

/// `F(G)` with the chosen backend.
pub fn count_forests(g: &MultiGraph, backend: Backend, budget: &Budget) -> Result<BigCount> {
    match backend.resolve(g) {
        Backend::Oracle => count_forests_oracle(g, budget),
        Backend::DeletionContraction => count_forests_dc(g, budget),
        _ => count_forests_frontier(g, &VertexOrder::Greedy, budget),
    }
}

/// `C(G)` with the chosen backend.
pub fn count_connected_spanning(g: &MultiGraph, backend: Backend, budget: &Budget) -> Result<BigCount> {
    match backend.resolve(g) {
        Backend::Oracle => count_connected_oracle(g, budget),
        Backend::DeletionContraction => count_connected_dc(g, budget),
        _ => count_connected_frontier(g, &VertexOrder::Greedy, budget),
    }
}
