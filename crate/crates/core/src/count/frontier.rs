//! Frontier (transfer-matrix) dynamic programming over an edge order.
//!
//! Vertices enter the frontier in a chosen order and leave once their last
//! edge has been decided. A state is the partition of the current frontier
//! into components of the chosen edge set, stored as first-appearance
//! labels, and carries the number of partial edge sets that produce it.

use std::collections::VecDeque;

use num_bigint::BigUint;
use num_traits::Zero;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use super::BigCount;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::MultiGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FrontierMode {
    /// Acyclic edge subsets.
    Forests,
    /// Edge subsets spanning a connected graph.
    Connected,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum VertexOrder {
    /// Breadth-first from vertex 0, restarting at the smallest unvisited vertex.
    #[default]
    Bfs,
    /// Repeatedly takes the vertex that keeps the frontier smallest.
    Greedy,
    Given(Vec<usize>),
}

/// Boundary-vertex partition with labels renumbered by first appearance.
pub type FrontierState = Vec<u8>;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FrontierStats {
    pub order: Vec<usize>,
    pub peak_width: usize,
    pub peak_states: usize,
}

/// Edges decided at one step, and the vertices leaving afterwards.
type Step = (Vec<(usize, usize)>, Vec<usize>);

/// Processing plan, one step per vertex position.
struct Plan {
    order: Vec<usize>,
    steps: Vec<Step>,
    peak_width: usize,
}

pub fn vertex_order(g: &MultiGraph, order: &VertexOrder) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    match order {
        VertexOrder::Given(o) => {
            let mut seen = vec![false; n];
            if o.len() != n || o.iter().any(|&v| v >= n || std::mem::replace(&mut seen[v], true)) {
                return Err(Error::domain("vertex order must be a permutation of 0..n"));
            }
            Ok(o.clone())
        }
        VertexOrder::Bfs => Ok(bfs_order(g)),
        VertexOrder::Greedy => Ok(greedy_order(g)),
    }
}

fn bfs_order(g: &MultiGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &(w, _) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

/// Greedy order: the next vertex minimises the resulting frontier width,
/// breaking ties by the number of edges it closes, then by id.
fn greedy_order(g: &MultiGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut placed = vec![false; n];
    // Edges to unplaced vertices, per vertex.
    let mut open: Vec<usize> = (0..n).map(|v| adj[v].iter().filter(|&&(w, _)| w != v).count()).collect();
    let mut frontier: Vec<usize> = Vec::new();
    let mut order = Vec::with_capacity(n);
    let mut links = vec![0usize; n];
    for _ in 0..n {
        let mut best: Option<(usize, std::cmp::Reverse<usize>, usize)> = None;
        for v in (0..n).filter(|&v| !placed[v]) {
            for &(w, _) in &adj[v] {
                links[w] += 1;
            }
            let closes: usize = frontier.iter().map(|&u| links[u]).sum();
            let width = frontier.iter().filter(|&&u| open[u] > links[u]).count()
                + usize::from(open[v] > closes);
            for &(w, _) in &adj[v] {
                links[w] -= 1;
            }
            let cand = (width, std::cmp::Reverse(closes), v);
            if best.is_none_or(|b| cand < b) {
                best = Some(cand);
            }
        }
        let (_, _, v) = best.expect("an unplaced vertex remains");
        placed[v] = true;
        order.push(v);
        for &(w, _) in &adj[v] {
            if w != v {
                open[w] -= 1;
            }
        }
        frontier.push(v);
        frontier.retain(|&u| open[u] > 0);
    }
    order
}

fn make_plan(g: &MultiGraph, order: Vec<usize>) -> Plan {
    let n = g.vertex_count();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut last = pos.clone();
    let mut steps: Vec<Step> = vec![(Vec::new(), Vec::new()); n];
    for &(u, v) in g.edges() {
        let step = pos[u].max(pos[v]);
        steps[step].0.push((u, v));
        last[u] = last[u].max(step);
        last[v] = last[v].max(step);
    }
    for v in 0..n {
        steps[last[v]].1.push(v);
    }
    let mut width = 0usize;
    let mut peak_width = 0usize;
    for (_, leaving) in &steps {
        width += 1;
        peak_width = peak_width.max(width);
        width -= leaving.len();
    }
    Plan { order, steps, peak_width }
}

/// Peak frontier width of an order, without running the count.
pub fn peak_width(g: &MultiGraph, order: &VertexOrder) -> Result<usize> {
    Ok(make_plan(g, vertex_order(g, order)?).peak_width)
}

pub fn count_forests_frontier(g: &MultiGraph, order: &VertexOrder, budget: &Budget) -> Result<BigCount> {
    frontier_count(g, FrontierMode::Forests, order, budget).map(|(c, _)| c)
}

pub fn count_connected_frontier(g: &MultiGraph, order: &VertexOrder, budget: &Budget) -> Result<BigCount> {
    frontier_count(g, FrontierMode::Connected, order, budget).map(|(c, _)| c)
}

/// Runs the frontier DP and reports the order used and the peak state count.
pub fn frontier_count(
    g: &MultiGraph,
    mode: FrontierMode,
    order: &VertexOrder,
    budget: &Budget,
) -> Result<(BigCount, FrontierStats)> {
    let n = g.vertex_count();
    let plan = make_plan(g, vertex_order(g, order)?);
    if plan.peak_width > u8::MAX as usize {
        return Err(Error::FrontierStates { states: 0, width: plan.peak_width, peak_width: plan.peak_width });
    }
    // Frontier slot of each active vertex.
    let mut slot_of = vec![usize::MAX; n];
    let mut frontier: Vec<usize> = Vec::new();
    let mut states: FxHashMap<FrontierState, BigUint> = FxHashMap::default();
    states.insert(Vec::new(), BigUint::from(1u8));
    let mut peak_states = 1;

    for (i, (edges, leaving)) in plan.steps.iter().enumerate() {
        budget.check_time("frontier count")?;
        let v = plan.order[i];
        slot_of[v] = frontier.len();
        frontier.push(v);
        let fresh = frontier.len() as u8 - 1;
        states = states
            .into_iter()
            .map(|(mut s, c)| {
                // New singleton component; labels above every existing label
                // keep the state canonical.
                let label = s.iter().copied().max().map_or(0, |m| m + 1);
                debug_assert!(label <= fresh);
                s.push(label);
                (s, c)
            })
            .collect();

        for &(a, b) in edges {
            let (sa, sb) = (slot_of[a], slot_of[b]);
            let mut next: FxHashMap<FrontierState, BigUint> =
                FxHashMap::with_capacity_and_hasher(states.len() * 2, Default::default());
            for (s, c) in states {
                let (la, lb) = (s[sa], s[sb]);
                let take = match mode {
                    FrontierMode::Forests if la == lb => None,
                    _ => Some(merge(&s, la, lb)),
                };
                if let Some(t) = take {
                    *next.entry(t).or_default() += &c;
                }
                *next.entry(s).or_default() += c;
            }
            states = next;
            if states.len() > budget.max_states {
                return Err(Error::FrontierStates {
                    states: states.len(),
                    width: frontier.len(),
                    peak_width: plan.peak_width,
                });
            }
            peak_states = peak_states.max(states.len());
        }

        for &w in leaving {
            let slot = slot_of[w];
            let others_remain = frontier.len() > 1 || i + 1 < n;
            let mut next: FxHashMap<FrontierState, BigUint> =
                FxHashMap::with_capacity_and_hasher(states.len(), Default::default());
            for (mut s, c) in states {
                let label = s[slot];
                let alone = s.iter().enumerate().all(|(j, &l)| j == slot || l != label);
                if mode == FrontierMode::Connected && alone && others_remain {
                    // A finished component that can no longer reach the rest.
                    continue;
                }
                s.remove(slot);
                canonicalise(&mut s);
                *next.entry(s).or_default() += c;
            }
            states = next;
            frontier.remove(slot);
            slot_of[w] = usize::MAX;
            for (j, &x) in frontier.iter().enumerate() {
                slot_of[x] = j;
            }
        }
    }

    let total: BigUint = states.into_values().fold(BigUint::zero(), |a, b| a + b);
    let total = if n == 0 && mode == FrontierMode::Connected {
        // Only the empty subset; the empty graph counts as connected.
        BigUint::from(1u8)
    } else {
        total
    };
    Ok((BigCount(total), FrontierStats { order: plan.order, peak_width: plan.peak_width, peak_states }))
}

fn merge(s: &[u8], a: u8, b: u8) -> FrontierState {
    let (keep, gone) = (a.min(b), a.max(b));
    let mut t: FrontierState = s.iter().map(|&l| if l == gone { keep } else { l }).collect();
    canonicalise(&mut t);
    t
}

/// Renumbers labels in order of first appearance.
fn canonicalise(s: &mut [u8]) {
    let mut map = [u8::MAX; 256];
    let mut next = 0u8;
    for l in s.iter_mut() {
        if map[*l as usize] == u8::MAX {
            map[*l as usize] = next;
            next += 1;
        }
        *l = map[*l as usize];
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::oracle::{count_connected_oracle, count_forests_oracle};
    use crate::count::dc::count_forests_dc;
    use crate::graph::named_graph;

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn matches_oracle_on_small_graphs() {
        for name in ["k4", "cycle(5)", "cube", "k33", "complete(5)", "path(4)"] {
            let g = named_graph(name).unwrap();
            for order in [VertexOrder::Bfs, VertexOrder::Greedy] {
                assert_eq!(
                    count_forests_frontier(&g, &order, &b()).unwrap(),
                    count_forests_oracle(&g, &b()).unwrap(),
                    "{name} forests"
                );
                assert_eq!(
                    count_connected_frontier(&g, &order, &b()).unwrap(),
                    count_connected_oracle(&g, &b()).unwrap(),
                    "{name} connected"
                );
            }
        }
    }

    #[test]
    fn petersen_agrees_with_deletion_contraction() {
        let g = named_graph("petersen").unwrap();
        assert_eq!(
            count_forests_frontier(&g, &VertexOrder::Bfs, &b()).unwrap(),
            count_forests_dc(&g, &b()).unwrap()
        );
    }

    #[test]
    fn multigraph_features() {
        let g = MultiGraph::from_edges(3, [(0, 1), (0, 1), (1, 1), (1, 2)]).unwrap();
        assert_eq!(count_forests_frontier(&g, &VertexOrder::Bfs, &b()).unwrap(), BigCount::from(6));
        assert_eq!(count_connected_frontier(&g, &VertexOrder::Bfs, &b()).unwrap(), BigCount::from(6));
        let split = MultiGraph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(count_connected_frontier(&split, &VertexOrder::Bfs, &b()).unwrap(), BigCount::zero());
        assert_eq!(count_forests_frontier(&split, &VertexOrder::Bfs, &b()).unwrap(), BigCount::from(4));
        assert_eq!(count_connected_frontier(&MultiGraph::new(1), &VertexOrder::Bfs, &b()).unwrap(), BigCount::one());
    }

    #[test]
    fn custom_order_and_errors() {
        let g = named_graph("cycle(4)").unwrap();
        let order = VertexOrder::Given(vec![2, 0, 3, 1]);
        assert_eq!(count_forests_frontier(&g, &order, &b()).unwrap(), BigCount::from(15));
        assert!(count_forests_frontier(&g, &VertexOrder::Given(vec![0, 0, 1, 2]), &b()).is_err());
        let tight = Budget::default().with_max_states(2);
        let err = count_forests_frontier(&named_graph("petersen").unwrap(), &VertexOrder::Bfs, &tight).unwrap_err();
        assert!(matches!(err, Error::FrontierStates { .. }));
        assert!(err.to_string().contains("peak width"));
    }
}
