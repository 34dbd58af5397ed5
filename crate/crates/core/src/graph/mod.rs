//! Finite undirected multigraphs with loops, and the surgery used by the
//! counting recursions.

mod cycles;
pub mod generate;
mod girth;
mod io;
mod lift;
mod named;

pub use cycles::{cycle_edge_sets, cycles_of_length};
pub use girth::{girth, Girth, GirthReport};
pub use io::{parse_edge_list, parse_graph6, to_graph6};
pub use lift::{expand_lift, random_girth_tower, special_double_cover, GirthTower, Sign, SignString, SignedLift};
pub use named::named_graph;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dsu::DisjointSets;
use crate::error::{Error, Result};

pub type Edge = (usize, usize);

/// An undirected multigraph on vertices `0..n`.
///
/// Edges keep the order in which they were added; the position of an edge is
/// its label. Loops and parallel edges are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<Edge>,
}

impl MultiGraph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        MultiGraph { n, edges: Vec::new() }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut g = MultiGraph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<usize> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexIndex { vertex: x, vertices: self.n });
            }
        }
        self.edges.push((u, v));
        Ok(self.edges.len() - 1)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> Result<Edge> {
        self.edges
            .get(i)
            .copied()
            .ok_or(Error::EdgeIndex { index: i, edges: self.edges.len() })
    }

    pub fn is_loop(&self, i: usize) -> bool {
        let (u, v) = self.edges[i];
        u == v
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    /// True when there are no loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        let mut seen = self.canonical_edges();
        let before = seen.len();
        seen.dedup();
        !self.has_loops() && seen.len() == before
    }

    /// Degree of `v`; a loop counts twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    /// The common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degrees();
        match d.first() {
            Some(&d0) if d.iter().all(|&x| x == d0) => Some(d0),
            _ => None,
        }
    }

    pub fn average_degree(&self) -> f64 {
        if self.n == 0 {
            0.0
        } else {
            2.0 * self.edges.len() as f64 / self.n as f64
        }
    }

    /// `(neighbour, edge index)` lists; a loop appears twice in its vertex's list.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        adj
    }

    /// Component id per vertex, numbered by smallest member, plus the count.
    pub fn components(&self) -> (usize, Vec<usize>) {
        let mut dsu = DisjointSets::new(self.n);
        for &(u, v) in &self.edges {
            dsu.union(u, v);
        }
        let mut id = vec![usize::MAX; self.n];
        let mut root_id = vec![usize::MAX; self.n];
        let mut k = 0;
        for (v, slot) in id.iter_mut().enumerate() {
            let r = dsu.find(v);
            if root_id[r] == usize::MAX {
                root_id[r] = k;
                k += 1;
            }
            *slot = root_id[r];
        }
        (k, id)
    }

    /// A graph with at most one vertex counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().0 <= 1
    }

    /// Removes edge `i`; the remaining edges keep their relative order.
    pub fn delete_edge(&self, i: usize) -> Result<MultiGraph> {
        self.edge(i)?;
        let mut edges = self.edges.clone();
        edges.remove(i);
        Ok(MultiGraph { n: self.n, edges })
    }

    /// Identifies the endpoints of edge `i`.
    ///
    /// The merged vertex takes the smaller endpoint id and higher ids shift
    /// down by one. The other `k - 1` edges parallel to `i` become loops.
    pub fn contract_edge(&self, i: usize) -> Result<MultiGraph> {
        let (u, v) = self.edge(i)?;
        if u == v {
            return Err(Error::LoopContraction(i));
        }
        let (keep, gone) = (u.min(v), u.max(v));
        let map = |x: usize| {
            if x == gone {
                keep
            } else if x > gone {
                x - 1
            } else {
                x
            }
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &(a, b))| (map(a), map(b)))
            .collect();
        Ok(MultiGraph { n: self.n - 1, edges })
    }

    /// Vertex-disjoint union; `other`'s vertices are shifted by `self.n`.
    pub fn disjoint_union(&self, other: &MultiGraph) -> MultiGraph {
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + self.n, v + self.n)));
        MultiGraph { n: self.n + other.n, edges }
    }

    /// The subgraph on all vertices keeping only the edges selected by `mask`.
    pub fn edge_subgraph(&self, keep: impl Fn(usize) -> bool) -> MultiGraph {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| keep(i))
            .map(|(_, &e)| e)
            .collect();
        MultiGraph { n: self.n, edges }
    }

    /// Reorders edges so that new edge `j` is old edge `order[j]`.
    pub fn permute_edges(&self, order: &[usize]) -> Result<MultiGraph> {
        let mut seen = vec![false; self.edges.len()];
        if order.len() != self.edges.len() {
            return Err(Error::domain("edge permutation has the wrong length"));
        }
        let mut edges = Vec::with_capacity(order.len());
        for &j in order {
            if j >= self.edges.len() || seen[j] {
                return Err(Error::domain("not a permutation of the edge indices"));
            }
            seen[j] = true;
            edges.push(self.edges[j]);
        }
        Ok(MultiGraph { n: self.n, edges })
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v]`.
    pub fn relabel_vertices(&self, perm: &[usize]) -> MultiGraph {
        let edges = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        MultiGraph { n: self.n, edges }
    }

    /// Sorted edge multiset with each pair stored as `(min, max)`.
    pub fn canonical_edges(&self) -> Vec<Edge> {
        let mut e: Vec<Edge> = self.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        e.sort_unstable();
        e
    }
}

impl fmt::Display for MultiGraph {
    /// Writes the edge-list text format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for &(u, v) in &self.edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}
