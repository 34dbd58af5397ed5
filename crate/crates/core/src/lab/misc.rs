use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::count::oracle::{for_each_forest, is_acyclic_orientation};
use crate::count::{count_forests, weakly_induced_forests, Backend, BigCount};
use crate::dsu::DisjointSets;
use crate::error::{Error, Result};
use crate::graph::MultiGraph;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ForestRatio {
    pub forests: BigCount,
    pub edges: usize,
    pub ratio: f64,
    /// `F(G) / 2^m` in lowest terms.
    pub exact: String,
}

/// `F(G) / 2^m`.
pub fn forest_ratio(g: &MultiGraph, backend: Backend, budget: &Budget) -> Result<ForestRatio> {
    let forests = count_forests(g, backend, budget)?;
    let m = g.edge_count();
    let exact = BigRational::new(BigInt::from(forests.0.clone()), BigInt::from(1) << m);
    Ok(ForestRatio { ratio: forests.ratio_to_pow2(m), exact: exact.to_string(), forests, edges: m })
}

fn is_cycle(g: &MultiGraph, mask: u64) -> bool {
    let edges: Vec<(usize, usize)> = (0..g.edge_count())
        .filter(|&i| mask >> i & 1 == 1)
        .map(|i| g.edges()[i])
        .collect();
    if edges.is_empty() {
        return false;
    }
    let mut deg = vec![0usize; g.vertex_count()];
    let mut sets = DisjointSets::new(g.vertex_count());
    for &(u, v) in &edges {
        deg[u] += 1;
        deg[v] += 1;
        sets.union(u, v);
    }
    let touched: Vec<usize> = (0..g.vertex_count()).filter(|&v| deg[v] > 0).collect();
    let root = sets.find(touched[0]);
    touched.iter().all(|&v| deg[v] == 2 && sets.find(v) == root)
}

/// `∏ (2^{|C_i|} − 1) · 2^{m − Σ|C_i|}` for edge-disjoint cycles `C_i`, given
/// as edge bitmasks.
pub fn short_cycle_penalty(g: &MultiGraph, cycles: &[u64]) -> Result<BigCount> {
    if g.edge_count() > 64 {
        return Err(Error::domain("cycle masks cover at most 64 edges"));
    }
    let mut used = 0u64;
    let mut bound = BigCount::one();
    for &c in cycles {
        if used & c != 0 {
            return Err(Error::domain("cycles are not edge-disjoint"));
        }
        if !is_cycle(g, c) {
            return Err(Error::domain(format!("edge set {c:#b} is not a cycle")));
        }
        used |= c;
        let len = c.count_ones() as usize;
        bound = &bound * &BigCount(BigCount::pow2(len).0 - 1u32);
    }
    let rest = g.edge_count() - used.count_ones() as usize;
    Ok(&bound * &BigCount::pow2(rest))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ShatteringReport {
    pub strongly_shattered: usize,
    pub orientations: usize,
    pub shattered: usize,
    pub shattered_are_forests: bool,
    pub strongly_shattered_are_weakly_induced: bool,
}

pub const SHATTERING_MAX_EDGES: usize = 10;

/// Shattered and strongly shattered edge sets of the family of acyclic
/// orientations, each orientation recorded as the set of edges flipped from
/// `u → v`.
pub fn shattering_check(g: &MultiGraph, budget: &Budget) -> Result<ShatteringReport> {
    let m = g.edge_count();
    budget.check_subset_bits("shattering edge count", m, SHATTERING_MAX_EDGES)?;
    if g.has_loops() {
        return Err(Error::domain("shattering check needs a loopless graph"));
    }
    let full = (1u64 << m) - 1;
    let family: Vec<bool> = (0..=full).map(|s| is_acyclic_orientation(g.vertex_count(), g.edges(), s)).collect();
    let members: Vec<u64> = (0..=full).filter(|&s| family[s as usize]).collect();

    let shattered: BTreeSet<u64> = (0..=full)
        .filter(|&y| {
            let traces: BTreeSet<u64> = members.iter().map(|&s| s & y).collect();
            traces.len() == 1usize << y.count_ones()
        })
        .collect();
    let strongly: BTreeSet<u64> = (0..=full)
        .filter(|&z| {
            let rest = full & !z;
            subsets(rest).any(|q| subsets(z).all(|p| family[(p | q) as usize]))
        })
        .collect();

    let mut forests = BTreeSet::new();
    for_each_forest(g, |mask, _| {
        forests.insert(mask);
    });
    let weakly: BTreeSet<u64> = weakly_induced_forests(g, budget)?.into_iter().collect();
    Ok(ShatteringReport {
        strongly_shattered: strongly.len(),
        orientations: members.len(),
        shattered: shattered.len(),
        shattered_are_forests: shattered == forests,
        strongly_shattered_are_weakly_induced: strongly == weakly,
    })
}

/// Every subset of `mask`, including the empty set.
fn subsets(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = (cur != 0).then(|| (cur - 1) & mask);
        Some(cur)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named_graph;

    #[test]
    fn ratios() {
        let b = Budget::default();
        let tree = named_graph("path(5)").unwrap();
        assert_eq!(forest_ratio(&tree, Backend::Oracle, &b).unwrap().ratio, 1.0);
        let p = forest_ratio(&named_graph("petersen").unwrap(), Backend::Frontier, &b).unwrap();
        assert!(p.ratio > 0.0 && p.ratio < 1.0);
        assert_eq!(forest_ratio(&named_graph("cycle(3)").unwrap(), Backend::Oracle, &b).unwrap().exact, "7/8");
    }

    #[test]
    fn penalty() {
        let k4 = named_graph("k4").unwrap();
        let tri = k4.edges().iter().enumerate().filter(|(_, &(u, v))| u < 3 && v < 3).fold(0u64, |a, (i, _)| a | 1 << i);
        assert_eq!(short_cycle_penalty(&k4, &[tri]).unwrap(), BigCount::from(56));
        assert_eq!(short_cycle_penalty(&k4, &[]).unwrap(), BigCount::from(64));
        let c5 = named_graph("cycle(5)").unwrap();
        assert_eq!(short_cycle_penalty(&c5, &[0b11111]).unwrap(), BigCount::from(31));
        assert!(short_cycle_penalty(&c5, &[0b111]).is_err());
        assert!(short_cycle_penalty(&k4, &[tri, tri]).is_err());
    }

    #[test]
    fn shattering_small() {
        let b = Budget::default();
        let r = shattering_check(&named_graph("cycle(3)").unwrap(), &b).unwrap();
        assert_eq!((r.strongly_shattered, r.orientations, r.shattered), (4, 6, 7));
        assert!(r.shattered_are_forests && r.strongly_shattered_are_weakly_induced);
        let e = shattering_check(&named_graph("path(2)").unwrap(), &b).unwrap();
        assert_eq!((e.strongly_shattered, e.orientations, e.shattered), (2, 2, 2));
        let p = shattering_check(&named_graph("path(3)").unwrap(), &b).unwrap();
        assert_eq!((p.strongly_shattered, p.orientations, p.shattered), (4, 4, 4));
        assert_eq!(subsets(0b101).count(), 4);
    }
}
