use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::MultiGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Girth {
    Finite(usize),
    /// The graph is a forest.
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GirthReport {
    pub girth: Girth,
    /// Vertices of one shortest cycle in cyclic order.
    pub witness: Option<Vec<usize>>,
}

/// Shortest cycle length by a breadth-first search from every vertex.
pub fn girth(g: &MultiGraph) -> GirthReport {
    if let Some(&(u, _)) = g.edges().iter().find(|&&(u, v)| u == v) {
        return GirthReport { girth: Girth::Finite(1), witness: Some(vec![u]) };
    }
    let canon = g.canonical_edges();
    if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
        let (u, v) = w[0];
        return GirthReport { girth: Girth::Finite(2), witness: Some(vec![u, v]) };
    }

    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![(usize::MAX, usize::MAX); n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.fill(usize::MAX);
        dist[root] = 0;
        queue.clear();
        queue.push_back(root);
        'bfs: while let Some(x) = queue.pop_front() {
            if let Some((len, _)) = &best {
                // Any cycle found from here on is at least 2·dist[x] + 1 long.
                if 2 * dist[x] + 1 >= *len {
                    break 'bfs;
                }
            }
            for &(y, e) in &adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = (x, e);
                    queue.push_back(y);
                } else if e != parent[x].1 {
                    let len = dist[x] + dist[y] + 1;
                    if best.as_ref().is_none_or(|(b, _)| len < *b) {
                        best = Some((len, close_cycle(root, x, y, &parent)));
                    }
                }
            }
        }
    }
    match best {
        Some((len, cycle)) => GirthReport { girth: Girth::Finite(len), witness: Some(cycle) },
        None => GirthReport { girth: Girth::Infinite, witness: None },
    }
}

fn close_cycle(root: usize, x: usize, y: usize, parent: &[(usize, usize)]) -> Vec<usize> {
    let walk = |mut v: usize| {
        let mut path = vec![v];
        while v != root {
            v = parent[v].0;
            path.push(v);
        }
        path
    };
    let mut left = walk(x);
    left.reverse();
    let mut right = walk(y);
    right.pop();
    left.extend(right);
    left
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named_graph;

    fn check_witness(g: &MultiGraph, r: &GirthReport) {
        let w = r.witness.as_ref().unwrap();
        assert_eq!(Girth::Finite(w.len()), r.girth);
        if w.len() >= 3 {
            let mut sorted = w.clone();
            sorted.sort_unstable();
            sorted.dedup();
            assert_eq!(sorted.len(), w.len(), "witness repeats a vertex");
            let edges = g.canonical_edges();
            for i in 0..w.len() {
                let (a, b) = (w[i], w[(i + 1) % w.len()]);
                assert!(edges.binary_search(&(a.min(b), a.max(b))).is_ok());
            }
        }
    }

    #[test]
    fn cycle_and_cages() {
        for (name, expected) in [("cycle(5)", 5), ("petersen", 5), ("tutte_coxeter", 8), ("k4", 3), ("cube", 4), ("k33", 4)] {
            let g = named_graph(name).unwrap();
            let r = girth(&g);
            assert_eq!(r.girth, Girth::Finite(expected), "{name}");
            check_witness(&g, &r);
        }
    }

    #[test]
    fn loops_parallels_and_trees() {
        let g = MultiGraph::from_edges(2, [(0, 1), (1, 1)]).unwrap();
        assert_eq!(girth(&g).girth, Girth::Finite(1));
        let g = MultiGraph::from_edges(3, [(0, 1), (1, 2), (2, 1)]).unwrap();
        assert_eq!(girth(&g).girth, Girth::Finite(2));
        let tree = MultiGraph::from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(girth(&tree), GirthReport { girth: Girth::Infinite, witness: None });
        assert_eq!(girth(&MultiGraph::new(0)).girth, Girth::Infinite);
    }
}
