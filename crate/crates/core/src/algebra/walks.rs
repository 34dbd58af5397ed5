use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::graph::MultiGraph;

pub const MAX_WALK_LENGTH: usize = 40;

/// Closed-walk counts `W_0..=W_K` at the root of the infinite `d`-regular tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkMoments {
    pub d: usize,
    pub moments: Vec<BigCount>,
}

/// Dynamic programme over (steps taken, distance from the root).
pub fn tree_walk_moments(d: usize, max_len: usize) -> Result<WalkMoments> {
    if d < 2 {
        return Err(Error::domain(format!("tree walk moments need d >= 2, got {d}")));
    }
    if max_len > MAX_WALK_LENGTH {
        return Err(Error::domain(format!("walk length {max_len} exceeds {MAX_WALK_LENGTH}")));
    }
    let mut ways = vec![BigUint::zero(); max_len + 2];
    ways[0] = BigUint::one();
    let mut moments = vec![BigUint::one()];
    for _ in 0..max_len {
        let mut next = vec![BigUint::zero(); max_len + 2];
        for (dist, w) in ways.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            if dist == 0 {
                next[1] += w * d;
            } else {
                if dist + 1 < next.len() {
                    next[dist + 1] += w * (d - 1);
                }
                next[dist - 1] += w;
            }
        }
        moments.push(next[0].clone());
        ways = next;
    }
    Ok(WalkMoments { d, moments: moments.into_iter().map(BigCount).collect() })
}

/// `tr(A^k)` for `k = 0..=max_len`, where a loop adds 2 to its diagonal entry.
pub fn closed_walk_counts(g: &MultiGraph, max_len: usize) -> Vec<BigUint> {
    let n = g.vertex_count();
    let mut a = vec![vec![0u64; n]; n];
    for &(u, v) in g.edges() {
        if u == v {
            a[u][u] += 2;
        } else {
            a[u][v] += 1;
            a[v][u] += 1;
        }
    }
    let mut power: Vec<Vec<BigUint>> = (0..n)
        .map(|i| (0..n).map(|j| BigUint::from(u64::from(i == j))).collect())
        .collect();
    let mut out = vec![BigUint::from(n)];
    for _ in 0..max_len {
        power = crate::par::map(&power, |row| {
            (0..n)
                .map(|j| {
                    let mut s = BigUint::zero();
                    for (k, x) in row.iter().enumerate() {
                        if a[k][j] != 0 && !x.is_zero() {
                            s += x * a[k][j];
                        }
                    }
                    s
                })
                .collect()
        });
        out.push((0..n).map(|i| power[i][i].clone()).sum());
    }
    out
}
