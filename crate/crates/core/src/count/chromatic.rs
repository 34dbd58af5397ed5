//! Chromatic polynomial and acyclic orientations.

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use super::{BigCount, IntPolynomial};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::MultiGraph;

/// Simple graph on at most 64 vertices as adjacency bitsets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct BitGraph {
    adj: Vec<u64>,
}

impl BitGraph {
    fn n(&self) -> usize {
        self.adj.len()
    }

    fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Removes vertex `v`, shifting higher ids down.
    fn remove(&self, v: usize) -> BitGraph {
        let low = (1u64 << v) - 1;
        let squeeze = |a: u64| (a & low) | ((a >> 1) & !low);
        let adj = self
            .adj
            .iter()
            .enumerate()
            .filter(|&(u, _)| u != v)
            .map(|(_, &a)| squeeze(a & !(1u64 << v)))
            .collect();
        BitGraph { adj }
    }

    /// Identifies `b` with `a` (parallel edges collapse) and drops `b`.
    fn merge(&self, a: usize, b: usize) -> BitGraph {
        let mut g = self.clone();
        let nb = g.adj[b] & !(1u64 << a);
        g.adj[a] |= nb;
        for w in 0..g.n() {
            if nb >> w & 1 == 1 {
                g.adj[w] |= 1 << a;
            }
        }
        g.remove(b)
    }

    fn toggle(&self, a: usize, b: usize) -> BitGraph {
        let mut g = self.clone();
        g.adj[a] ^= 1 << b;
        g.adj[b] ^= 1 << a;
        g
    }

    fn component_masks(&self) -> Vec<u64> {
        let full = if self.n() == 64 { u64::MAX } else { (1u64 << self.n()) - 1 };
        let mut left = full;
        let mut out = Vec::new();
        while left != 0 {
            let mut comp = left & left.wrapping_neg();
            loop {
                let grown = (0..self.n())
                    .filter(|&v| comp >> v & 1 == 1)
                    .fold(comp, |acc, v| acc | self.adj[v]);
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            out.push(comp);
            left &= !comp;
        }
        out
    }

    fn induced(&self, mask: u64) -> BitGraph {
        let mut g = self.clone();
        for v in (0..self.n()).rev() {
            if mask >> v & 1 == 0 {
                g = g.remove(v);
            }
        }
        g
    }

    /// Degree-refined relabelling used as an exact memo key.
    fn memo_key(&self) -> BitGraph {
        let n = self.n();
        let mut sig: Vec<(u32, Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut nd: Vec<u32> = (0..n).filter(|&w| self.adj[v] >> w & 1 == 1).map(|w| self.degree(w)).collect();
                nd.sort_unstable();
                (self.degree(v), nd, v)
            })
            .collect();
        sig.sort();
        let mut new_id = vec![0usize; n];
        for (pos, s) in sig.iter().enumerate() {
            new_id[s.2] = pos;
        }
        let mut adj = vec![0u64; n];
        for v in 0..n {
            for w in 0..n {
                if self.adj[v] >> w & 1 == 1 {
                    adj[new_id[v]] |= 1 << new_id[w];
                }
            }
        }
        BitGraph { adj }
    }
}

/// Largest number of distinct adjacent pairs the recursion accepts.
pub const CHROMATIC_MAX_EDGES: usize = 40;
const MEMO_LIMIT: usize = 1 << 21;

/// Chromatic polynomial by deletion–contraction, switching to
/// addition–contraction on dense graphs.
///
/// Parallel edges collapse to one and any loop gives the zero polynomial.
pub fn chromatic_polynomial(g: &MultiGraph, budget: &Budget) -> Result<IntPolynomial> {
    if g.has_loops() {
        return Ok(IntPolynomial::zero());
    }
    let n = g.vertex_count();
    if n > 64 {
        return Err(Error::Budget { what: "chromatic polynomial vertex count", size: n, limit: 64 });
    }
    let mut adj = vec![0u64; n];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let g = BitGraph { adj };
    let m = g.edge_count();
    if m > CHROMATIC_MAX_EDGES {
        return Err(Error::Budget { what: "chromatic polynomial edge count", size: m, limit: CHROMATIC_MAX_EDGES });
    }
    let mut engine = Chromatic { budget, calls: 0, memo: FxHashMap::default() };
    engine.eval(g)
}

struct Chromatic<'a> {
    budget: &'a Budget,
    calls: usize,
    memo: FxHashMap<BitGraph, IntPolynomial>,
}

impl Chromatic<'_> {
    fn eval(&mut self, g: BitGraph) -> Result<IntPolynomial> {
        self.calls += 1;
        if self.calls > self.budget.max_calls {
            return Err(Error::Budget { what: "chromatic recursion calls", size: self.calls, limit: self.budget.max_calls });
        }
        if self.calls.is_multiple_of(4096) {
            self.budget.check_time("chromatic polynomial")?;
        }
        let n = g.n();
        if n == 0 {
            return Ok(IntPolynomial::one());
        }
        if let Some(v) = (0..n).find(|&v| g.degree(v) == 0) {
            let rest = self.eval(g.remove(v))?;
            return Ok(&rest * &IntPolynomial::monomial(1));
        }
        if let Some(v) = (0..n).find(|&v| g.degree(v) == 1) {
            let rest = self.eval(g.remove(v))?;
            return Ok(&rest * &IntPolynomial::linear(1));
        }
        let m = g.edge_count();
        if m == n * (n - 1) / 2 {
            return Ok(IntPolynomial::falling_factorial(n));
        }
        let comps = g.component_masks();
        if comps.len() > 1 {
            let mut acc = IntPolynomial::one();
            for c in comps {
                acc = &acc * &self.eval(g.induced(c))?;
            }
            return Ok(acc);
        }

        let key = g.memo_key();
        if let Some(p) = self.memo.get(&key) {
            return Ok(p.clone());
        }
        let value = if 4 * m > n * (n - 1) {
            // Dense: P(G) = P(G + uv) + P(G / uv) for a non-edge uv.
            let u = (0..n).find(|&v| (g.degree(v) as usize) < n - 1).expect("not complete");
            let w = (0..n).find(|&w| w != u && g.adj[u] >> w & 1 == 0).expect("has a non-neighbour");
            let added = self.eval(g.toggle(u, w))?;
            let merged = self.eval(g.merge(u.min(w), u.max(w)))?;
            &added + &merged
        } else {
            let hub = (0..n).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).expect("non-empty");
            self.delete_contract(&g, hub)?
        };
        if self.memo.len() < MEMO_LIMIT {
            self.memo.insert(key, value.clone());
        }
        Ok(value)
    }

    fn delete_contract(&mut self, g: &BitGraph, hub: usize) -> Result<IntPolynomial> {
        let w = (0..g.n())
            .filter(|&w| g.adj[hub] >> w & 1 == 1)
            .max_by_key(|&w| g.degree(w))
            .expect("hub has a neighbour");
        let deleted = self.eval(g.toggle(hub, w))?;
        let contracted = self.eval(g.merge(hub.min(w), hub.max(w)))?;
        Ok(&deleted - &contracted)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AcyclicOrientations {
    pub count: BigCount,
    /// Set when the graph has a loop, which rules out every orientation.
    pub loop_present: bool,
}

/// `|ch(G, -1)|`.
pub fn count_acyclic_orientations(g: &MultiGraph, budget: &Budget) -> Result<AcyclicOrientations> {
    if g.has_loops() {
        return Ok(AcyclicOrientations { count: BigCount::zero(), loop_present: true });
    }
    let p = chromatic_polynomial(g, budget)?;
    let value = p.eval_i64(-1).magnitude().clone();
    Ok(AcyclicOrientations { count: BigCount(value), loop_present: false })
}
