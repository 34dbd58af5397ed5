//! Broken cycles and the sets that avoid them.
//!
//! Edge `i` of the graph carries label `i + 1`; a broken cycle is a cycle
//! with its largest-labelled edge removed.

use num_bigint::BigUint;

use super::BigCount;
use crate::budget::Budget;
use crate::error::Result;
use crate::graph::{cycle_edge_sets, MultiGraph};

/// Largest edge count for which cycles are enumerated.
pub const BROKEN_CYCLE_MAX_EDGES: usize = 25;
const CYCLE_LIMIT: usize = 5_000_000;

/// Every broken cycle as an edge bitmask, sorted and without repeats.
/// A loop yields the empty set.
pub fn broken_cycles(g: &MultiGraph, budget: &Budget) -> Result<Vec<u64>> {
    let m = g.edge_count();
    budget.check_subset_bits("broken-cycle edge count", m, BROKEN_CYCLE_MAX_EDGES)?;
    let mut out: Vec<u64> = cycle_edge_sets(g, None, CYCLE_LIMIT)?
        .into_iter()
        .map(|c| c & !(1u64 << (63 - c.leading_zeros())))
        .collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// `c_k` for `k = 0..=m`: the number of `k`-edge sets containing no broken cycle.
pub fn broken_cycle_free_counts(g: &MultiGraph, budget: &Budget) -> Result<Vec<BigCount>> {
    let m = g.edge_count();
    let broken = broken_cycles(g, budget)?;
    if broken.contains(&0) {
        return Ok(vec![BigCount::zero(); m + 1]);
    }
    // A set only needs checking against the broken cycles whose top edge was
    // the one just added.
    let mut by_top: Vec<Vec<u64>> = vec![Vec::new(); m];
    for b in minimal(&broken) {
        by_top[63 - b.leading_zeros() as usize].push(b);
    }
    let mut counts = vec![0u64; m + 1];
    let mut walker = Walker { by_top: &by_top, counts: &mut counts, budget, steps: 0 };
    walker.walk(0, 0)?;
    Ok(counts.into_iter().map(|c| BigCount(BigUint::from(c))).collect())
}

/// `c_k`: the number of `k`-edge sets containing no broken cycle.
pub fn count_broken_cycle_free(g: &MultiGraph, k: usize, budget: &Budget) -> Result<BigCount> {
    let counts = broken_cycle_free_counts(g, budget)?;
    Ok(counts.get(k).cloned().unwrap_or_else(BigCount::zero))
}

/// `Σ_k c_k`, which equals the number of acyclic orientations.
pub fn broken_cycle_free_total(g: &MultiGraph, budget: &Budget) -> Result<BigCount> {
    Ok(broken_cycle_free_counts(g, budget)?.into_iter().sum())
}

fn minimal(sets: &[u64]) -> Vec<u64> {
    sets.iter()
        .copied()
        .filter(|&s| !sets.iter().any(|&t| t != s && t & s == t))
        .collect()
}

struct Walker<'a> {
    by_top: &'a [Vec<u64>],
    counts: &'a mut [u64],
    budget: &'a Budget,
    steps: u64,
}

impl Walker<'_> {
    fn walk(&mut self, i: usize, set: u64) -> Result<()> {
        self.steps += 1;
        if self.steps.is_multiple_of(1 << 16) {
            self.budget.check_time("broken-cycle-free enumeration")?;
        }
        if i == self.by_top.len() {
            self.counts[set.count_ones() as usize] += 1;
            return Ok(());
        }
        self.walk(i + 1, set)?;
        let with = set | 1 << i;
        if self.by_top[i].iter().all(|&b| with & b != b) {
            self.walk(i + 1, with)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named_graph;

    fn b() -> Budget {
        Budget::default()
    }

    fn labels(mask: u64) -> Vec<usize> {
        (0..64).filter(|&i| mask >> i & 1 == 1).map(|i| i + 1).collect()
    }

    #[test]
    fn figure_graph_broken_cycles() {
        let g = MultiGraph::from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        let mut got: Vec<Vec<usize>> = broken_cycles(&g, &b()).unwrap().into_iter().map(labels).collect();
        got.sort();
        assert_eq!(got, vec![vec![1, 2], vec![1, 2, 4], vec![3, 4]]);
    }

    #[test]
    fn triangle_counts() {
        let c3 = named_graph("cycle(3)").unwrap();
        let counts = broken_cycle_free_counts(&c3, &b()).unwrap();
        assert_eq!(counts, vec![1u64, 3, 2, 0].into_iter().map(BigCount::from).collect::<Vec<_>>());
        assert_eq!(broken_cycle_free_total(&c3, &b()).unwrap(), BigCount::from(6));
        assert_eq!(count_broken_cycle_free(&c3, 0, &b()).unwrap(), BigCount::one());
    }

    #[test]
    fn loops_leave_nothing() {
        let g = MultiGraph::from_edges(2, [(0, 1), (1, 1)]).unwrap();
        assert!(broken_cycle_free_total(&g, &b()).unwrap().is_zero());
    }

    #[test]
    fn total_matches_orientations() {
        for name in ["k4", "petersen", "cube", "k33"] {
            let g = named_graph(name).unwrap();
            let direct = crate::count::count_acyclic_orientations_brute(&g, &b()).unwrap();
            assert_eq!(broken_cycle_free_total(&g, &b()).unwrap(), direct, "{name}");
        }
    }
}
