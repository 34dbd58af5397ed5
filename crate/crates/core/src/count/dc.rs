//! Deletion–contraction for forests, connected spanning subgraphs and
//! spanning trees.
//!
//! Parallel edges are handled as weighted bundles so that a bundle of `k`
//! edges is removed in one branching step. Every specialisation obeys the same
//! recursion shape `X(G) = X(G − B) + w_k · X(G / B)` with
//!
//! | invariant | loops      | `w_k`     |
//! |-----------|------------|-----------|
//! | forests   | dropped    | `k`       |
//! | connected | factor `2` | `2^k − 1` |
//! | trees     | dropped    | `k`       |

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;

use super::BigCount;
use crate::budget::Budget;
use crate::dsu::DisjointSets;
use crate::error::{Error, Result};
use crate::graph::MultiGraph;

/// Graphs with at most this many edges are memoised.
const MEMO_MAX_EDGES: u32 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Invariant {
    Forests,
    Connected,
    Trees,
}

pub fn count_forests_dc(g: &MultiGraph, budget: &Budget) -> Result<BigCount> {
    Engine::new(Invariant::Forests, budget).run(g)
}

pub fn count_connected_dc(g: &MultiGraph, budget: &Budget) -> Result<BigCount> {
    Engine::new(Invariant::Connected, budget).run(g)
}

pub fn count_spanning_trees_dc(g: &MultiGraph, budget: &Budget) -> Result<BigCount> {
    Engine::new(Invariant::Trees, budget).run(g)
}

/// Loopless multigraph stored as sorted `(u, v, multiplicity)` bundles, `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Bundled {
    n: usize,
    bundles: Vec<(u32, u32, u32)>,
}

impl Bundled {
    /// Returns the bundled graph and its loop count.
    fn from_graph(g: &MultiGraph) -> (Self, u32) {
        let mut map: BTreeMap<(u32, u32), u32> = BTreeMap::new();
        let mut loops = 0;
        for &(u, v) in g.edges() {
            if u == v {
                loops += 1;
            } else {
                *map.entry((u.min(v) as u32, u.max(v) as u32)).or_default() += 1;
            }
        }
        let bundles = map.into_iter().map(|((u, v), k)| (u, v, k)).collect();
        (Bundled { n: g.vertex_count(), bundles }, loops)
    }

    fn from_map(n: usize, map: BTreeMap<(u32, u32), u32>) -> Self {
        Bundled { n, bundles: map.into_iter().map(|((u, v), k)| (u, v, k)).collect() }
    }

    fn edge_total(&self) -> u32 {
        self.bundles.iter().map(|b| b.2).sum()
    }

    fn degrees(&self) -> Vec<u32> {
        let mut d = vec![0; self.n];
        for &(u, v, k) in &self.bundles {
            d[u as usize] += k;
            d[v as usize] += k;
        }
        d
    }

    /// Drops vertices for which `keep` is false and renumbers the rest.
    /// Bundles touching a dropped vertex are discarded.
    fn retain_vertices(&self, keep: &[bool]) -> Bundled {
        let mut new_id = vec![u32::MAX; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if keep[v] {
                new_id[v] = next;
                next += 1;
            }
        }
        let bundles = self
            .bundles
            .iter()
            .filter(|&&(u, v, _)| keep[u as usize] && keep[v as usize])
            .map(|&(u, v, k)| (new_id[u as usize], new_id[v as usize], k))
            .collect();
        Bundled { n: next as usize, bundles }
    }

    fn without_bundle(&self, idx: usize) -> Bundled {
        let mut bundles = self.bundles.clone();
        bundles.remove(idx);
        Bundled { n: self.n, bundles }
    }

    /// Merges the endpoints of bundle `idx`, removing the bundle itself.
    fn contract_bundle(&self, idx: usize) -> Bundled {
        let (keep, gone, _) = self.bundles[idx];
        let map_v = |x: u32| {
            if x == gone {
                keep
            } else if x > gone {
                x - 1
            } else {
                x
            }
        };
        let mut map: BTreeMap<(u32, u32), u32> = BTreeMap::new();
        for (j, &(u, v, k)) in self.bundles.iter().enumerate() {
            if j == idx {
                continue;
            }
            let (a, b) = (map_v(u), map_v(v));
            *map.entry((a.min(b), a.max(b))).or_default() += k;
        }
        Bundled::from_map(self.n - 1, map)
    }

    fn components(&self) -> Vec<Bundled> {
        let mut dsu = DisjointSets::new(self.n);
        for &(u, v, _) in &self.bundles {
            dsu.union(u as usize, v as usize);
        }
        if dsu.set_count() <= 1 {
            return vec![self.clone()];
        }
        let mut roots: Vec<usize> = (0..self.n).map(|v| dsu.find(v)).collect();
        let reps = {
            let mut r = roots.clone();
            r.sort_unstable();
            r.dedup();
            r
        };
        reps.iter()
            .map(|&r| {
                let keep: Vec<bool> = roots.iter_mut().map(|x| *x == r).collect();
                self.retain_vertices(&keep)
            })
            .collect()
    }

    /// Relabels vertices by a degree-refined order so that many labelled
    /// copies of the same small graph share a memo entry. Still an exact
    /// labelled key: distinct keys may be isomorphic, equal keys never differ.
    fn memo_key(&self) -> Bundled {
        type VertexSignature = (u32, Vec<(u32, u32)>, usize);
        let deg = self.degrees();
        let mut signature: Vec<VertexSignature> = (0..self.n)
            .map(|v| (deg[v], Vec::new(), v))
            .collect();
        for &(u, v, k) in &self.bundles {
            signature[u as usize].1.push((deg[v as usize], k));
            signature[v as usize].1.push((deg[u as usize], k));
        }
        for s in &mut signature {
            s.1.sort_unstable();
        }
        signature.sort();
        let mut new_id = vec![0u32; self.n];
        for (pos, s) in signature.iter().enumerate() {
            new_id[s.2] = pos as u32;
        }
        let mut bundles: Vec<(u32, u32, u32)> = self
            .bundles
            .iter()
            .map(|&(u, v, k)| {
                let (a, b) = (new_id[u as usize], new_id[v as usize]);
                (a.min(b), a.max(b), k)
            })
            .collect();
        bundles.sort_unstable();
        Bundled { n: self.n, bundles }
    }
}

struct Engine<'a> {
    invariant: Invariant,
    budget: &'a Budget,
    calls: usize,
    memo: FxHashMap<Bundled, BigUint>,
}

impl<'a> Engine<'a> {
    fn new(invariant: Invariant, budget: &'a Budget) -> Self {
        Engine { invariant, budget, calls: 0, memo: FxHashMap::default() }
    }

    fn run(&mut self, g: &MultiGraph) -> Result<BigCount> {
        let (bundled, loops) = Bundled::from_graph(g);
        let base = self.eval(bundled)?;
        let factor = match self.invariant {
            Invariant::Connected => BigUint::one() << loops,
            Invariant::Forests | Invariant::Trees => BigUint::one(),
        };
        Ok(BigCount(base * factor))
    }

    fn bundle_weight(&self, k: u32) -> BigUint {
        match self.invariant {
            Invariant::Forests | Invariant::Trees => BigUint::from(k),
            Invariant::Connected => (BigUint::one() << k) - 1u32,
        }
    }

    fn eval(&mut self, g: Bundled) -> Result<BigUint> {
        self.calls += 1;
        if self.calls > self.budget.max_calls {
            return Err(Error::Budget {
                what: "deletion-contraction calls",
                size: self.calls,
                limit: self.budget.max_calls,
            });
        }
        if self.calls.is_multiple_of(4096) {
            self.budget.check_time("deletion-contraction")?;
        }

        let deg = g.degrees();
        if deg.contains(&0) {
            match self.invariant {
                Invariant::Forests => {
                    let keep: Vec<bool> = deg.iter().map(|&d| d > 0).collect();
                    return self.eval(g.retain_vertices(&keep));
                }
                Invariant::Connected | Invariant::Trees => {
                    return Ok(if g.n <= 1 { BigUint::one() } else { BigUint::zero() });
                }
            }
        }
        if g.bundles.is_empty() {
            return Ok(BigUint::one());
        }

        let parts = g.components();
        if parts.len() > 1 {
            if self.invariant != Invariant::Forests {
                return Ok(BigUint::zero());
            }
            let mut acc = BigUint::one();
            for part in parts {
                acc *= self.eval(part)?;
            }
            return Ok(acc);
        }

        // A vertex with a single bundle: its edges are independent of the rest.
        if let Some(idx) = g.bundles.iter().position(|&(u, v, k)| deg[u as usize] == k || deg[v as usize] == k) {
            let (u, v, k) = g.bundles[idx];
            let leaf = if deg[u as usize] == k { u } else { v };
            let weight = match self.invariant {
                Invariant::Forests => BigUint::from(k + 1),
                Invariant::Connected => (BigUint::one() << k) - 1u32,
                Invariant::Trees => BigUint::from(k),
            };
            let keep: Vec<bool> = (0..g.n).map(|x| x != leaf as usize).collect();
            return Ok(weight * self.eval(g.retain_vertices(&keep))?);
        }

        let memoise = g.edge_total() <= MEMO_MAX_EDGES;
        let key = if memoise { Some(g.memo_key()) } else { None };
        if let Some(hit) = key.as_ref().and_then(|k| self.memo.get(k)) {
            return Ok(hit.clone());
        }

        // Branch on a bundle at a highest-degree vertex.
        let hub = (0..g.n).max_by_key(|&v| (deg[v], std::cmp::Reverse(v))).expect("non-empty");
        let idx = g
            .bundles
            .iter()
            .position(|&(u, v, _)| u as usize == hub || v as usize == hub)
            .expect("hub has an edge");
        let k = g.bundles[idx].2;
        let deleted = self.eval(g.without_bundle(idx))?;
        let contracted = self.eval(g.contract_bundle(idx))?;
        let value = deleted + self.bundle_weight(k) * contracted;

        if let Some(key) = key {
            self.memo.insert(key, value.clone());
        }
        Ok(value)
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
    fn small_forest_counts() {
        assert_eq!(count_forests_dc(&named_graph("k4").unwrap(), &b()).unwrap(), BigCount::from(38));
        let pair = MultiGraph::from_edges(2, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(count_forests_dc(&pair, &b()).unwrap(), BigCount::from(3));
        let looped = MultiGraph::from_edges(1, [(0, 0)]).unwrap();
        assert_eq!(count_forests_dc(&looped, &b()).unwrap(), BigCount::one());
        for k in 1..=12 {
            let c = named_graph(&format!("cycle({k})")).unwrap();
            assert_eq!(count_forests_dc(&c, &b()).unwrap(), BigCount::from((1u64 << k) - 1));
        }
    }

    #[test]
    fn small_connected_counts() {
        assert_eq!(count_connected_dc(&named_graph("k4").unwrap(), &b()).unwrap(), BigCount::from(38));
        assert_eq!(count_connected_dc(&named_graph("cycle(6)").unwrap(), &b()).unwrap(), BigCount::from(7));
        assert_eq!(count_connected_dc(&named_graph("path(4)").unwrap(), &b()).unwrap(), BigCount::one());
        let looped = MultiGraph::from_edges(2, [(0, 1), (1, 1)]).unwrap();
        assert_eq!(count_connected_dc(&looped, &b()).unwrap(), BigCount::from(2));
        assert_eq!(count_connected_dc(&MultiGraph::new(3), &b()).unwrap(), BigCount::zero());
        assert_eq!(count_connected_dc(&MultiGraph::new(1), &b()).unwrap(), BigCount::one());
    }

    #[test]
    fn spanning_tree_counts() {
        assert_eq!(count_spanning_trees_dc(&named_graph("k4").unwrap(), &b()).unwrap(), BigCount::from(16));
        assert_eq!(count_spanning_trees_dc(&named_graph("petersen").unwrap(), &b()).unwrap(), BigCount::from(2000));
        assert_eq!(count_spanning_trees_dc(&named_graph("complete(6)").unwrap(), &b()).unwrap(), BigCount::from(1296));
    }

    #[test]
    fn call_budget() {
        let tight = Budget { max_calls: 3, ..Budget::default() };
        assert!(count_forests_dc(&named_graph("petersen").unwrap(), &tight).unwrap_err().is_budget());
    }
}
