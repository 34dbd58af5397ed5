//! Weakly induced forests.

use super::oracle::for_each_forest;
use super::BigCount;
use crate::budget::Budget;
use crate::error::Result;
use crate::graph::MultiGraph;

/// Edge sets `S` that are forests and whose components induce exactly the
/// edges of `S`, as bitmasks in enumeration order.
pub fn weakly_induced_forests(g: &MultiGraph, budget: &Budget) -> Result<Vec<u64>> {
    budget.check_subset_bits("weakly induced forest edge count", g.edge_count(), super::ORACLE_MAX_EDGES)?;
    let edges = g.edges();
    let mut out = Vec::new();
    for_each_forest(g, |mask, sets| {
        let induced_only = edges
            .iter()
            .enumerate()
            .all(|(i, &(u, v))| mask >> i & 1 == 1 || sets.find(u) != sets.find(v));
        if induced_only {
            out.push(mask);
        }
    });
    budget.check_time("weakly induced forests")?;
    Ok(out)
}

/// `F_wi(G)`.
pub fn count_weakly_induced_forests(g: &MultiGraph, budget: &Budget) -> Result<BigCount> {
    Ok(BigCount::from(weakly_induced_forests(g, budget)?.len() as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named_graph;

    #[test]
    fn figure_graph_has_ten() {
        let g = MultiGraph::from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        let mut sets = weakly_induced_forests(&g, &Budget::default()).unwrap();
        sets.sort_unstable();
        // Labels 1..5 are bits 0..4.
        let expected = [0b0, 0b1, 0b10, 0b100, 0b1000, 0b10000, 0b1001, 0b10001, 0b1010, 0b10010];
        let mut expected = expected.to_vec();
        expected.sort_unstable();
        assert_eq!(sets, expected);
    }

    #[test]
    fn small_cases() {
        let b = Budget::default();
        let f = |g: &MultiGraph| count_weakly_induced_forests(g, &b).unwrap();
        assert_eq!(f(&named_graph("cycle(3)").unwrap()), BigCount::from(4));
        assert_eq!(f(&named_graph("path(2)").unwrap()), BigCount::from(2));
        let pair = MultiGraph::from_edges(2, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(f(&pair), BigCount::one());
        let looped = MultiGraph::from_edges(1, [(0, 0)]).unwrap();
        assert!(f(&looped).is_zero());
    }
}
