//! Brute-force counters that look at every edge subset or every orientation.
//!
//! These are the reference values the scalable counters are checked against;
//! they stay deliberately naive.

use std::collections::VecDeque;

use num_bigint::BigUint;
use rustc_hash::FxHashSet;

use super::BigCount;
use crate::budget::Budget;
use crate::dsu::{DisjointSets, RollbackSets};
use crate::error::Result;
use crate::graph::MultiGraph;
use crate::par;

/// Hard ceiling on subset enumeration regardless of the budget.
pub const ORACLE_MAX_EDGES: usize = 30;
/// Hard ceiling on orientation enumeration.
pub const ORIENTATION_MAX_EDGES: usize = 20;

fn sum_blocks(counts: Vec<u64>) -> BigCount {
    BigCount(counts.into_iter().map(BigUint::from).sum())
}

/// Number of acyclic edge subsets, by checking all `2^m` subsets with union–find.
pub fn count_forests_oracle(g: &MultiGraph, budget: &Budget) -> Result<BigCount> {
    let m = g.edge_count();
    budget.check_subset_bits("forest oracle edge count", m, ORACLE_MAX_EDGES)?;
    let edges = g.edges();
    let counts = par::map_blocks(1u64 << m, par::BLOCK, |lo, hi| {
        let mut dsu = DisjointSets::new(g.vertex_count());
        (lo..hi)
            .filter(|&mask| {
                dsu.reset();
                edges
                    .iter()
                    .enumerate()
                    .all(|(i, &(u, v))| mask >> i & 1 == 0 || dsu.union(u, v))
            })
            .count() as u64
    });
    budget.check_time("forest oracle")?;
    Ok(sum_blocks(counts))
}

/// Number of edge subsets `A` with `(V, A)` connected, by full enumeration.
pub fn count_connected_oracle(g: &MultiGraph, budget: &Budget) -> Result<BigCount> {
    let m = g.edge_count();
    budget.check_subset_bits("connected-subgraph oracle edge count", m, ORACLE_MAX_EDGES)?;
    if g.vertex_count() <= 1 {
        return Ok(BigCount::pow2(m));
    }
    let edges = g.edges();
    let counts = par::map_blocks(1u64 << m, par::BLOCK, |lo, hi| {
        let mut dsu = DisjointSets::new(g.vertex_count());
        (lo..hi)
            .filter(|&mask| {
                dsu.reset();
                for (i, &(u, v)) in edges.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        dsu.union(u, v);
                    }
                }
                dsu.set_count() == 1
            })
            .count() as u64
    });
    budget.check_time("connected-subgraph oracle")?;
    Ok(sum_blocks(counts))
}

/// Table `t[k][a]` = number of subsets with `k` components and `a` edges.
pub fn component_edge_histogram(g: &MultiGraph, budget: &Budget) -> Result<Vec<Vec<u64>>> {
    let m = g.edge_count();
    let n = g.vertex_count();
    budget.check_subset_bits("random-cluster oracle edge count", m, ORACLE_MAX_EDGES)?;
    let edges = g.edges();
    let tables = par::map_blocks(1u64 << m, par::BLOCK, |lo, hi| {
        let mut t = vec![vec![0u64; m + 1]; n + 1];
        let mut dsu = DisjointSets::new(n);
        for mask in lo..hi {
            dsu.reset();
            for (i, &(u, v)) in edges.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    dsu.union(u, v);
                }
            }
            t[dsu.set_count()][mask.count_ones() as usize] += 1;
        }
        t
    });
    let mut total = vec![vec![0u64; m + 1]; n + 1];
    for t in tables {
        for (row, trow) in total.iter_mut().zip(t) {
            for (a, b) in row.iter_mut().zip(trow) {
                *a += b;
            }
        }
    }
    Ok(total)
}

/// Number of distinct out-degree sequences over all `2^m` orientations.
pub fn count_score_vectors(g: &MultiGraph, budget: &Budget) -> Result<BigCount> {
    let m = g.edge_count();
    budget.check_subset_bits("score-vector edge count", m, ORIENTATION_MAX_EDGES)?;
    let n = g.vertex_count();
    let edges = g.edges();
    let sets = par::map_blocks(1u64 << m, par::BLOCK, |lo, hi| {
        let mut seen = FxHashSet::default();
        let mut out = vec![0u8; n];
        for mask in lo..hi {
            out.fill(0);
            for (i, &(u, v)) in edges.iter().enumerate() {
                let tail = if mask >> i & 1 == 0 { u } else { v };
                out[tail] += 1;
            }
            seen.insert(out.clone());
        }
        seen
    });
    let mut all: FxHashSet<Vec<u8>> = FxHashSet::default();
    for s in sets {
        all.extend(s);
    }
    Ok(BigCount::from(all.len() as u64))
}

/// Number of orientations without a directed cycle, by enumerating all of them.
/// A loop is a directed cycle under either orientation.
pub fn count_acyclic_orientations_brute(g: &MultiGraph, budget: &Budget) -> Result<BigCount> {
    let m = g.edge_count();
    budget.check_subset_bits("orientation edge count", m, ORIENTATION_MAX_EDGES)?;
    if g.has_loops() {
        return Ok(BigCount::zero());
    }
    let n = g.vertex_count();
    let edges = g.edges();
    let counts = par::map_blocks(1u64 << m, par::BLOCK, |lo, hi| {
        (lo..hi).filter(|&mask| is_acyclic_orientation(n, edges, mask)).count() as u64
    });
    Ok(sum_blocks(counts))
}

/// Edge `i` points `u -> v` when bit `i` of `flipped` is clear, `v -> u` otherwise.
pub(crate) fn is_acyclic_orientation(n: usize, edges: &[(usize, usize)], flipped: u64) -> bool {
    let mut indeg = vec![0usize; n];
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        let (a, b) = if flipped >> i & 1 == 0 { (u, v) } else { (v, u) };
        if a == b {
            return false;
        }
        out[a].push(b);
        indeg[b] += 1;
    }
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = queue.pop_front() {
        seen += 1;
        for &w in &out[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push_back(w);
            }
        }
    }
    seen == n
}

/// Calls `visit` with the edge bitmask of every forest of `g` (at most 64
/// edges), together with the union–find state of that forest.
///
/// Depth-first over edges in label order, pruning as soon as a cycle closes.
pub fn for_each_forest(g: &MultiGraph, mut visit: impl FnMut(u64, &RollbackSets)) {
    assert!(g.edge_count() <= 64, "forest enumeration needs at most 64 edges");
    let mut sets = RollbackSets::new(g.vertex_count());
    walk_forests(g.edges(), 0, 0, &mut sets, &mut visit);
}

fn walk_forests(
    edges: &[(usize, usize)],
    i: usize,
    mask: u64,
    sets: &mut RollbackSets,
    visit: &mut impl FnMut(u64, &RollbackSets),
) {
    if i == edges.len() {
        visit(mask, sets);
        return;
    }
    walk_forests(edges, i + 1, mask, sets, visit);
    let (u, v) = edges[i];
    if sets.find(u) != sets.find(v) {
        sets.union(u, v);
        walk_forests(edges, i + 1, mask | 1 << i, sets, visit);
        sets.rollback();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named_graph;

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn forests_of_cycles_and_k4() {
        for k in 1..=8 {
            let c = named_graph(&format!("cycle({k})")).unwrap();
            assert_eq!(count_forests_oracle(&c, &b()).unwrap(), BigCount::from((1u64 << k) - 1), "C{k}");
        }
        assert_eq!(count_forests_oracle(&named_graph("k4").unwrap(), &b()).unwrap(), BigCount::from(38));
        assert_eq!(count_forests_oracle(&MultiGraph::new(5), &b()).unwrap(), BigCount::one());
    }

    #[test]
    fn connected_subgraphs() {
        for k in 3..=8 {
            let c = named_graph(&format!("cycle({k})")).unwrap();
            assert_eq!(count_connected_oracle(&c, &b()).unwrap(), BigCount::from(k as u64 + 1));
        }
        assert_eq!(count_connected_oracle(&named_graph("k4").unwrap(), &b()).unwrap(), BigCount::from(38));
        let tree = named_graph("path(5)").unwrap();
        assert_eq!(count_connected_oracle(&tree, &b()).unwrap(), BigCount::one());
        assert_eq!(count_connected_oracle(&MultiGraph::new(2), &b()).unwrap(), BigCount::zero());
    }

    #[test]
    fn score_vectors_match_forests() {
        let c3 = named_graph("cycle(3)").unwrap();
        assert_eq!(count_score_vectors(&c3, &b()).unwrap(), BigCount::from(7));
        let e = MultiGraph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(count_score_vectors(&e, &b()).unwrap(), BigCount::from(2));
        assert_eq!(count_score_vectors(&named_graph("k4").unwrap(), &b()).unwrap(), BigCount::from(38));
    }

    #[test]
    fn acyclic_orientation_enumeration() {
        let c3 = named_graph("cycle(3)").unwrap();
        assert_eq!(count_acyclic_orientations_brute(&c3, &b()).unwrap(), BigCount::from(6));
        assert_eq!(count_acyclic_orientations_brute(&named_graph("k4").unwrap(), &b()).unwrap(), BigCount::from(24));
        let looped = MultiGraph::from_edges(2, [(0, 1), (1, 1)]).unwrap();
        assert_eq!(count_acyclic_orientations_brute(&looped, &b()).unwrap(), BigCount::zero());
    }

    #[test]
    fn dfs_visits_every_forest_once() {
        let k4 = named_graph("k4").unwrap();
        let mut masks = Vec::new();
        for_each_forest(&k4, |m, _| masks.push(m));
        masks.sort_unstable();
        masks.dedup();
        assert_eq!(masks.len(), 38);
    }

    #[test]
    fn budget_is_enforced() {
        let g = named_graph("complete(9)").unwrap();
        let small = Budget::default().with_subset_bits(20);
        assert!(count_forests_oracle(&g, &small).unwrap_err().is_budget());
        assert!(count_score_vectors(&g, &b()).is_err());
    }
}
