//! Spanning trees by the matrix-tree theorem.

use num_traits::Signed;

use super::BigCount;
use crate::algebra::{det_exact, laplacian_ones};
use crate::graph::MultiGraph;

/// `τ(G) = det L₀(G)`; zero when `G` is disconnected.
pub fn count_spanning_trees(g: &MultiGraph) -> BigCount {
    if g.vertex_count() == 0 {
        return BigCount::one();
    }
    let det = det_exact(&laplacian_ones(g).reduced(0));
    debug_assert!(det.is_integer() && !det.is_negative());
    BigCount(det.to_integer().magnitude().clone())
}
