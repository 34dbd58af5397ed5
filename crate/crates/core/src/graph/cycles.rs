use rustc_hash::FxHashSet;

use super::MultiGraph;
use crate::error::{Error, Result};

/// All cycles of `g` as edge bitmasks, sorted ascending.
///
/// Loops are cycles of length 1 and a pair of parallel edges is a cycle of
/// length 2. Only cycles with at most `max_len` edges are listed when a
/// length cap is given. Fails if more than `limit` cycles exist or the graph
/// has more than 64 edges.
pub fn cycle_edge_sets(g: &MultiGraph, max_len: Option<usize>, limit: usize) -> Result<Vec<u64>> {
    let m = g.edge_count();
    if m > 64 {
        return Err(Error::Budget { what: "cycle enumeration edge count", size: m, limit: 64 });
    }
    let max_len = max_len.unwrap_or(m);
    let adj = g.adjacency();
    let mut found = FxHashSet::default();
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if u == v && max_len >= 1 {
            found.insert(1u64 << i);
        }
    }
    let mut on_path = vec![false; g.vertex_count()];
    for s in 0..g.vertex_count() {
        on_path[s] = true;
        let mut search = Search { adj: &adj, start: s, max_len, limit, found: &mut found, on_path: &mut on_path };
        search.extend(s, usize::MAX, 0, 0)?;
        on_path[s] = false;
    }
    let mut out: Vec<u64> = found.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

/// Cycles with exactly `len` edges.
pub fn cycles_of_length(g: &MultiGraph, len: usize, limit: usize) -> Result<Vec<u64>> {
    let mut c = cycle_edge_sets(g, Some(len), limit)?;
    c.retain(|m| m.count_ones() as usize == len);
    Ok(c)
}

struct Search<'a> {
    adj: &'a [Vec<(usize, usize)>],
    start: usize,
    max_len: usize,
    limit: usize,
    found: &'a mut FxHashSet<u64>,
    on_path: &'a mut [bool],
}

impl Search<'_> {
    fn extend(&mut self, x: usize, via: usize, mask: u64, len: usize) -> Result<()> {
        for &(y, e) in &self.adj[x] {
            if e == via || y == x {
                continue;
            }
            if y == self.start {
                if len < self.max_len && len >= 1 {
                    self.found.insert(mask | 1 << e);
                    if self.found.len() > self.limit {
                        return Err(Error::Budget { what: "cycle count", size: self.found.len(), limit: self.limit });
                    }
                }
            } else if y > self.start && !self.on_path[y] && len + 2 <= self.max_len {
                self.on_path[y] = true;
                self.extend(y, e, mask | 1 << e, len + 1)?;
                self.on_path[y] = false;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named_graph;

    #[test]
    fn counts_on_small_graphs() {
        let k4 = named_graph("k4").unwrap();
        // 4 triangles and 3 four-cycles.
        assert_eq!(cycle_edge_sets(&k4, None, 1000).unwrap().len(), 7);
        assert_eq!(cycles_of_length(&k4, 3, 1000).unwrap().len(), 4);
        let petersen = named_graph("petersen").unwrap();
        assert_eq!(cycles_of_length(&petersen, 5, 1000).unwrap().len(), 12);
        // Cycle lengths 5, 6, 8 and 9 occur 12, 10, 15 and 20 times.
        assert_eq!(cycle_edge_sets(&petersen, None, 10_000).unwrap().len(), 57);
    }

    #[test]
    fn loops_and_parallel_pairs() {
        let g = MultiGraph::from_edges(2, [(0, 1), (0, 1), (1, 1)]).unwrap();
        assert_eq!(cycle_edge_sets(&g, None, 10).unwrap(), vec![0b011, 0b100]);
    }

    #[test]
    fn limit_is_enforced() {
        let k5 = named_graph("complete(5)").unwrap();
        assert!(cycle_edge_sets(&k5, None, 5).is_err());
    }
}
