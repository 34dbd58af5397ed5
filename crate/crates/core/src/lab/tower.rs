//! Forest growth along a tower of 2-lifts of increasing girth.

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::count::{
    broken_cycle_free_total, count_forests_frontier, count_weakly_induced_forests, BigCount, VertexOrder,
    BROKEN_CYCLE_MAX_EDGES, ORACLE_MAX_EDGES,
};
use crate::error::Result;
use crate::graph::{random_girth_tower, Girth, MultiGraph};

/// `p_t = p_{t−1} − p_{t−1}²/4` from `p_0 = 1`: the chance that the root of
/// a depth-`t` binary tree reaches a leaf through a uniformly random edge set.
pub fn p_t_recursion(t: usize) -> f64 {
    (0..t).fold(1.0, |p, _| p - p * p / 4.0)
}

/// The radius `R = k − 1` for girth at least `2k + 1`, when `R ≥ 1`.
pub fn tree_radius(girth: Girth) -> Option<usize> {
    let g = girth.finite()?;
    let k = g.saturating_sub(1) / 2;
    (k >= 2).then(|| k - 1)
}

/// `2√2 (1 − 3 p_{R−1})`, the lower bound on `F_wi(G)^{1/n}` for a cubic
/// graph whose girth gives radius `R`.
pub fn weakly_induced_floor(girth: Girth) -> Option<f64> {
    tree_radius(girth).map(|r| 2.0 * 2f64.sqrt() * (1.0 - 3.0 * p_t_recursion(r - 1)))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TowerLevel {
    pub level: usize,
    pub n: usize,
    pub m: usize,
    pub girth: Girth,
    pub forests: Option<BigCount>,
    pub forest_rate: Option<f64>,
    pub acyclic: Option<BigCount>,
    pub acyclic_rate: Option<f64>,
    pub weakly_induced: Option<BigCount>,
    pub weakly_induced_rate: Option<f64>,
    pub radius: Option<usize>,
    pub floor: Option<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TowerTrace {
    pub seed: u64,
    pub levels: Vec<TowerLevel>,
    pub stalled: bool,
}

impl TowerTrace {
    /// Every computed rate lies below `2√2`, and `F_wi` respects the floor.
    pub fn within_bounds(&self) -> bool {
        let top = 2.0 * 2f64.sqrt();
        self.levels.iter().all(|l| {
            let rates = [l.forest_rate, l.acyclic_rate, l.weakly_induced_rate];
            let below = rates.iter().flatten().all(|&r| r <= top + 1e-12);
            let floor_ok = match (l.floor, l.weakly_induced_rate) {
                (Some(f), Some(w)) => w >= f,
                _ => true,
            };
            below && floor_ok
        })
    }
}

/// Lifts `base` `levels` times and counts what the budget allows at each level.
pub fn girth_tower_experiment(base: &MultiGraph, levels: usize, seed: u64, budget: &Budget) -> Result<TowerTrace> {
    let tower = random_girth_tower(base, levels, usize::MAX, seed)?;
    let records = crate::par::map(&tower.graphs.iter().zip(&tower.girths).enumerate().collect::<Vec<_>>(), |&(level, (g, &girth))| {
        let n = g.vertex_count();
        let rate = |c: &Option<BigCount>| c.as_ref().map(|c| c.root(n));
        let forests = count_forests_frontier(g, &VertexOrder::Greedy, budget).ok();
        let acyclic = (g.edge_count() <= BROKEN_CYCLE_MAX_EDGES)
            .then(|| broken_cycle_free_total(g, budget).ok())
            .flatten();
        let weakly_induced = (g.edge_count() <= ORACLE_MAX_EDGES)
            .then(|| count_weakly_induced_forests(g, budget).ok())
            .flatten();
        TowerLevel {
            level,
            n,
            m: g.edge_count(),
            girth,
            forest_rate: rate(&forests),
            acyclic_rate: rate(&acyclic),
            weakly_induced_rate: rate(&weakly_induced),
            forests,
            acyclic,
            weakly_induced,
            radius: tree_radius(girth),
            floor: weakly_induced_floor(girth),
        }
    });
    Ok(TowerTrace { seed, levels: records, stalled: tower.stalled })
}
