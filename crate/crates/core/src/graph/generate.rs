//! Test corpora: exhaustive small graphs, connected cubic graphs and seeded
//! random multigraphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashSet;

use super::MultiGraph;

/// Every connected simple graph on `1..=max_n` vertices, one per isomorphism
/// class, ordered by vertex count. `max_n` is capped at 7.
pub fn connected_simple_graphs(max_n: usize) -> Vec<MultiGraph> {
    assert!(max_n <= 7, "exhaustive generation is limited to 7 vertices");
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(connected_simple_graphs_on(n));
    }
    out
}

fn connected_simple_graphs_on(n: usize) -> Vec<MultiGraph> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut pair_index = vec![0usize; n * n];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        pair_index[i * n + j] = k;
        pair_index[j * n + i] = k;
    }
    // For each vertex permutation, where every pair bit moves to.
    let perms = permutations(n);
    let bit_maps: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(i, j)| pair_index[p[i] * n + p[j]]).collect())
        .collect();

    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let g = from_pair_mask(n, &pairs, mask);
        if !g.is_connected() {
            continue;
        }
        // Keep the graph only if its mask is the smallest in its orbit.
        let canonical = bit_maps.iter().all(|map| {
            let mut image = 0u64;
            for (k, &t) in map.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    image |= 1 << t;
                }
            }
            image >= mask
        });
        if canonical {
            out.push(g);
        }
    }
    out
}

fn from_pair_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> MultiGraph {
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|&(k, _)| mask >> k & 1 == 1)
        .map(|(_, &e)| e);
    MultiGraph::from_edges(n, edges).expect("pairs are in range")
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// Every connected simple cubic graph on `n` vertices up to isomorphism
/// (`n` even, at most 12).
pub fn connected_cubic_graphs(n: usize) -> Vec<MultiGraph> {
    assert!(n.is_multiple_of(2) && (4..=12).contains(&n), "cubic generation supports even n in 4..=12");
    let mut builder = CubicBuilder {
        n,
        adj: vec![0u16; n],
        next_label: 1,
        seen: FxHashSet::default(),
        out: Vec::new(),
    };
    builder.fill(0);
    builder.out.sort_by_key(|(code, _)| *code);
    builder.out.into_iter().map(|(_, g)| g).collect()
}

/// Backtracking over adjacency structures whose labelling is a breadth-first
/// order, deduplicated by [`bfs_canonical_code`].
struct CubicBuilder {
    n: usize,
    adj: Vec<u16>,
    next_label: usize,
    seen: FxHashSet<u128>,
    out: Vec<(u128, MultiGraph)>,
}

impl CubicBuilder {
    fn fill(&mut self, v: usize) {
        if v == self.n {
            if self.next_label == self.n {
                let code = bfs_canonical_code(&self.adj);
                if self.seen.insert(code) {
                    let edges: Vec<_> = (0..self.n)
                        .flat_map(|i| {
                            let row = self.adj[i];
                            ((i + 1)..self.n).filter(move |&j| row >> j & 1 == 1).map(move |j| (i, j))
                        })
                        .collect();
                    self.out.push((code, MultiGraph::from_edges(self.n, edges).expect("in range")));
                }
            }
            return;
        }
        if v >= self.next_label {
            // Vertex never reached: the structure would be disconnected.
            return;
        }
        self.add_neighbours(v, v);
    }

    fn add_neighbours(&mut self, v: usize, last: usize) {
        if self.adj[v].count_ones() == 3 {
            self.fill(v + 1);
            return;
        }
        let existing: Vec<usize> = ((last + 1).max(v + 1)..self.next_label)
            .filter(|&j| self.adj[j].count_ones() < 3 && self.adj[v] >> j & 1 == 0)
            .collect();
        for j in existing {
            self.link(v, j);
            self.add_neighbours(v, j);
            self.unlink(v, j);
        }
        if self.next_label < self.n {
            let j = self.next_label;
            self.next_label += 1;
            self.link(v, j);
            self.add_neighbours(v, j);
            self.unlink(v, j);
            self.next_label -= 1;
        }
    }

    fn link(&mut self, a: usize, b: usize) {
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
    }

    fn unlink(&mut self, a: usize, b: usize) {
        self.adj[a] &= !(1 << b);
        self.adj[b] &= !(1 << a);
    }
}

/// Isomorphism-invariant code of a connected simple graph with at most 16
/// vertices: the smallest upper-triangle adjacency string over all
/// breadth-first labellings.
pub fn bfs_canonical_code(adj: &[u16]) -> u128 {
    let n = adj.len();
    let mut best = u128::MAX;
    for root in 0..n {
        let mut label = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        label[root] = 0;
        order.push(root);
        bfs_labellings(adj, &mut label, &mut order, 0, &mut best);
    }
    best
}

fn bfs_labellings(adj: &[u16], label: &mut [usize], order: &mut Vec<usize>, head: usize, best: &mut u128) {
    let n = adj.len();
    if head == order.len() {
        if order.len() == n {
            let mut code = 0u128;
            for j in 1..n {
                for i in 0..j {
                    code = code << 1 | u128::from(adj[order[i]] >> order[j] & 1);
                }
            }
            *best = (*best).min(code);
        }
        return;
    }
    let v = order[head];
    let fresh: Vec<usize> = (0..n).filter(|&u| adj[v] >> u & 1 == 1 && label[u] == usize::MAX).collect();
    for_each_permutation(&fresh, &mut |perm| {
        for &u in perm {
            label[u] = order.len();
            order.push(u);
        }
        bfs_labellings(adj, label, order, head + 1, best);
        for &u in perm {
            label[u] = usize::MAX;
            order.pop();
        }
    });
}

fn for_each_permutation(items: &[usize], f: &mut dyn FnMut(&[usize])) {
    fn go(items: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k == items.len() {
            f(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            go(items, k + 1, f);
            items.swap(k, i);
        }
    }
    go(&mut items.to_vec(), 0, f);
}

/// A random multigraph on `n` vertices with `m` edges whose endpoints are
/// drawn uniformly; loops appear only when `allow_loops` is set.
pub fn random_multigraph(rng: &mut impl Rng, n: usize, m: usize, allow_loops: bool) -> MultiGraph {
    let mut g = MultiGraph::new(n);
    if n == 0 || (n == 1 && !allow_loops) {
        return g;
    }
    while g.edge_count() < m {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u != v || allow_loops {
            g.add_edge(u, v).expect("in range");
        }
    }
    g
}

/// `count` seeded random multigraphs with `1..=max_n` vertices and
/// `0..=max_m` edges; roughly one in four carries loops.
pub fn random_multigraph_suite(seed: u64, count: usize, max_n: usize, max_m: usize) -> Vec<MultiGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(1..=max_n);
            let m = rng.random_range(0..=max_m);
            let loops = rng.random_bool(0.25);
            random_multigraph(&mut rng, n, m, loops)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_graph_counts_match_known_sequence() {
        // Connected graphs on n unlabelled vertices: 1, 1, 2, 6, 21, 112.
        let counts: Vec<usize> = (1..=6).map(|n| connected_simple_graphs_on(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn cubic_graph_counts_match_known_sequence() {
        let counts: Vec<usize> = [4, 6, 8, 10].iter().map(|&n| connected_cubic_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 19]);
        for g in connected_cubic_graphs(8) {
            assert_eq!(g.regular_degree(), Some(3));
            assert!(g.is_simple() && g.is_connected());
        }
    }

    #[test]
    fn canonical_code_is_label_invariant() {
        let petersen = crate::graph::named_graph("petersen").unwrap();
        let to_adj = |g: &MultiGraph| {
            let mut a = vec![0u16; g.vertex_count()];
            for &(u, v) in g.edges() {
                a[u] |= 1 << v;
                a[v] |= 1 << u;
            }
            a
        };
        let perm = [3, 7, 1, 0, 9, 2, 8, 5, 4, 6];
        let shuffled = petersen.relabel_vertices(&perm);
        assert_eq!(bfs_canonical_code(&to_adj(&petersen)), bfs_canonical_code(&to_adj(&shuffled)));
        let cube_like = crate::graph::named_graph("k33").unwrap();
        assert_ne!(bfs_canonical_code(&to_adj(&cube_like)), bfs_canonical_code(&to_adj(&crate::graph::named_graph("cycle(6)").unwrap())));
    }

    #[test]
    fn random_suite_is_seeded() {
        let a = random_multigraph_suite(3, 20, 6, 12);
        let b = random_multigraph_suite(3, 20, 6, 12);
        assert_eq!(a, b);
        assert!(a.iter().all(|g| g.edge_count() <= 12 && g.vertex_count() <= 6));
    }
}
