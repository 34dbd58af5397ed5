//! Edge correlations under the uniform distribution on forests.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::count::oracle::for_each_forest;
use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::graph::MultiGraph;

/// Largest edge count for which every forest is visited.
pub const CORRELATION_MAX_EDGES: usize = 22;

/// Forest count, per-edge counts and per-pair counts.
#[derive(Debug, Clone)]
pub struct ForestTallies {
    pub total: u64,
    pub single: Vec<u64>,
    pair: Vec<u64>,
    m: usize,
}

impl ForestTallies {
    pub fn new(g: &MultiGraph, budget: &Budget) -> Result<Self> {
        let m = g.edge_count();
        budget.check_subset_bits("forest correlation edge count", m, CORRELATION_MAX_EDGES)?;
        let mut t = ForestTallies { total: 0, single: vec![0; m], pair: vec![0; m * m], m };
        for_each_forest(g, |mask, _| {
            t.total += 1;
            let edges: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
            for (k, &e) in edges.iter().enumerate() {
                t.single[e] += 1;
                for &f in &edges[k + 1..] {
                    t.pair[e * m + f] += 1;
                }
            }
        });
        budget.check_time("forest correlation")?;
        Ok(t)
    }

    /// Forests containing both `e` and `f`.
    pub fn both(&self, e: usize, f: usize) -> u64 {
        if e == f {
            return self.single[e];
        }
        self.pair[e.min(f) * self.m + e.max(f)]
    }

    /// `(n11, n10, n01, n00)`: forests by membership of `e` and `f`.
    pub fn table(&self, e: usize, f: usize) -> (u64, u64, u64, u64) {
        let n11 = self.both(e, f);
        let n10 = self.single[e] - n11;
        let n01 = self.single[f] - n11;
        (n11, n10, n01, self.total - n11 - n10 - n01)
    }
}

fn ratio(num: u128, den: u128) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorrelationReport {
    pub graph_id: String,
    pub forests: BigCount,
    pub pairs_checked: usize,
    /// Pair with the smallest margin.
    pub worst_pair: Option<(usize, usize)>,
    /// `P(e, f ∈ F)` for the worst pair.
    pub lhs: Option<String>,
    /// `P(e ∈ F) P(f ∈ F)` for the worst pair.
    pub rhs: Option<String>,
    /// `rhs − lhs` for the worst pair, exactly.
    pub margin: Option<String>,
    pub margin_value: Option<f64>,
    /// Set when some pair has a negative margin.
    pub violation: bool,
    /// Set when the three equivalent inequalities disagreed on some pair.
    pub equivalence_mismatch: bool,
}

/// `P(e,f ∈ F) ≤ P(e ∈ F) P(f ∈ F)` for every pair of distinct edges, with
/// exact rationals.
pub fn check_negative_correlation(g: &MultiGraph, graph_id: &str, budget: &Budget) -> Result<CorrelationReport> {
    let t = ForestTallies::new(g, budget)?;
    let m = g.edge_count();
    let total = u128::from(t.total);
    let mut worst: Option<(i128, usize, usize)> = None;
    let mut mismatch = false;
    let mut pairs = 0;
    for e in 0..m {
        for f in e + 1..m {
            pairs += 1;
            // Margin numerator over the common denominator total².
            let num = i128::try_from(u128::from(t.single[e]) * u128::from(t.single[f])).expect("fits")
                - i128::try_from(u128::from(t.both(e, f)) * total).expect("fits");
            if worst.is_none_or(|(w, _, _)| num < w) {
                worst = Some((num, e, f));
            }
            let [a, b, c] = equivalences(&t, e, f);
            mismatch |= a != b || b != c;
        }
    }
    let mut report = CorrelationReport {
        graph_id: graph_id.to_owned(),
        forests: BigCount::from(t.total),
        pairs_checked: pairs,
        worst_pair: None,
        lhs: None,
        rhs: None,
        margin: None,
        margin_value: None,
        violation: worst.is_some_and(|w| w.0 < 0),
        equivalence_mismatch: mismatch,
    };
    if let Some((num, e, f)) = worst {
        let lhs = ratio(u128::from(t.both(e, f)), total);
        let rhs = ratio(u128::from(t.single[e]) * u128::from(t.single[f]), total * total);
        let margin = BigRational::new(BigInt::from(num), BigInt::from(total * total));
        report.worst_pair = Some((e, f));
        report.margin_value = Some(num as f64 / (total as f64 * total as f64));
        report.lhs = Some(lhs.to_string());
        report.rhs = Some(rhs.to_string());
        report.margin = Some(margin.to_string());
    }
    Ok(report)
}

/// The three equivalent forms, evaluated by cross-multiplication:
/// `P(e,f ∈) ≤ P(e ∈)P(f ∈)`, `P(e,f ∉) ≤ P(e ∉)P(f ∉)` and
/// `P(e,f ∈)P(e,f ∉) ≤ P(e ∈, f ∉)P(e ∉, f ∈)`.
fn equivalences(t: &ForestTallies, e: usize, f: usize) -> [bool; 3] {
    let (n11, n10, n01, n00) = t.table(e, f);
    let [n11, n10, n01, n00] = [n11, n10, n01, n00].map(u128::from);
    let total = n11 + n10 + n01 + n00;
    [
        n11 * total <= (n11 + n10) * (n11 + n01),
        n00 * total <= (n00 + n01) * (n00 + n10),
        n11 * n00 <= n10 * n01,
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrelationEquivalence {
    pub both_in: bool,
    pub both_out: bool,
    pub cross: bool,
}

impl CorrelationEquivalence {
    pub fn agree(&self) -> bool {
        self.both_in == self.both_out && self.both_out == self.cross
    }
}

/// The three equivalent inequalities for edges `e` and `f` of `g`.
pub fn check_correlation_equivalences(g: &MultiGraph, e: usize, f: usize, budget: &Budget) -> Result<CorrelationEquivalence> {
    let m = g.edge_count();
    if e >= m || f >= m {
        return Err(Error::EdgeIndex { index: e.max(f), edges: m });
    }
    let t = ForestTallies::new(g, budget)?;
    let [both_in, both_out, cross] = equivalences(&t, e, f);
    Ok(CorrelationEquivalence { both_in, both_out, cross })
}
