use super::MultiGraph;
use crate::error::{Error, Result};

/// Builds a graph from the registry.
///
/// Keys: `cycle(k)`, `complete(k)` (alias `kN`), `path(k)`, `empty(k)`,
/// `petersen`, `tutte_coxeter`, `cube`, `k33`.
pub fn named_graph(key: &str) -> Result<MultiGraph> {
    let key = key.trim().to_ascii_lowercase().replace('-', "_");
    let unknown = || Error::UnknownGraph(key.clone());
    let sized = |prefix: &str| -> Option<Result<usize>> {
        key.strip_prefix(prefix)
            .and_then(|rest| rest.strip_prefix('('))
            .and_then(|rest| rest.strip_suffix(')'))
            .map(|arg| arg.trim().parse::<usize>().map_err(|_| unknown()))
    };

    if let Some(k) = sized("cycle") {
        let k = k?;
        if k == 0 {
            return Err(Error::domain("cycle(0) is not a graph"));
        }
        return Ok(cycle(k));
    }
    if let Some(k) = sized("complete") {
        return Ok(complete(k?));
    }
    if let Some(k) = sized("path") {
        let k = k?;
        return MultiGraph::from_edges(k, (1..k).map(|i| (i - 1, i)));
    }
    if let Some(k) = sized("empty") {
        return Ok(MultiGraph::new(k?));
    }
    match key.as_str() {
        "petersen" => Ok(petersen()),
        "tutte_coxeter" => Ok(lcf(30, &[-13, -9, 7, -7, 9, 13])),
        "cube" => Ok(cube()),
        "k33" => MultiGraph::from_edges(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))),
        _ => match key.strip_prefix('k').map(str::parse::<usize>) {
            Some(Ok(k)) => Ok(complete(k)),
            _ => Err(unknown()),
        },
    }
}

fn cycle(k: usize) -> MultiGraph {
    let mut g = MultiGraph::new(k);
    for i in 0..k {
        g.add_edge(i, (i + 1) % k).expect("in range");
    }
    g
}

fn complete(k: usize) -> MultiGraph {
    let mut g = MultiGraph::new(k);
    for j in 1..k {
        for i in 0..j {
            g.add_edge(i, j).expect("in range");
        }
    }
    g
}

fn petersen() -> MultiGraph {
    let mut g = MultiGraph::new(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5).expect("in range");
        g.add_edge(i, i + 5).expect("in range");
        g.add_edge(5 + i, 5 + (i + 2) % 5).expect("in range");
    }
    g
}

fn cube() -> MultiGraph {
    let mut g = MultiGraph::new(8);
    for v in 0..8usize {
        for bit in [1, 2, 4] {
            if v & bit == 0 {
                g.add_edge(v, v | bit).expect("in range");
            }
        }
    }
    g
}

/// Cubic graph from LCF notation: a Hamiltonian cycle plus chords `i ~ i + jump`.
fn lcf(n: usize, jumps: &[i64]) -> MultiGraph {
    let mut g = cycle(n);
    for i in 0..n {
        let j = (i as i64 + jumps[i % jumps.len()]).rem_euclid(n as i64) as usize;
        if i < j {
            g.add_edge(i, j).expect("in range");
        }
    }
    g
}
