//! Default corpora and the verification suites run over them.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::correlation::check_negative_correlation;
use super::covers::{check_special_cover_identity, check_two_cover_inequality};
use crate::bounds::bound_suite;
use crate::budget::Budget;
use crate::count::{
    broken_cycle_free_total, count_acyclic_orientations, count_forests_oracle, count_weakly_induced_forests, Backend,
    BigCount,
};
use crate::graph::generate::{connected_cubic_graphs, connected_simple_graphs, random_multigraph, random_multigraph_suite};
use crate::graph::{to_graph6, MultiGraph, Sign, SignedLift};
use crate::par;

pub const CORPUS_SEED: u64 = 20_240_501;

/// A graph with a stable identifier.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Case {
    pub id: String,
    pub graph: MultiGraph,
}

fn simple_cases(max_n: usize) -> Vec<Case> {
    connected_simple_graphs(max_n)
        .into_iter()
        .map(|g| Case { id: format!("g6:{}", to_graph6(&g).expect("simple")), graph: g })
        .collect()
}

/// All connected simple graphs on at most 6 vertices, then 200 seeded random
/// multigraphs with at most 7 vertices and 12 edges.
pub fn default_corpus() -> Vec<Case> {
    let mut cases = simple_cases(6);
    cases.extend(
        random_multigraph_suite(CORPUS_SEED, 200, 7, 12)
            .into_iter()
            .enumerate()
            .map(|(i, g)| Case { id: format!("random:{i}"), graph: g }),
    );
    cases
}

/// All connected cubic graphs on at most 10 vertices.
pub fn cubic_corpus() -> Vec<Case> {
    [4, 6, 8, 10]
        .into_iter()
        .flat_map(connected_cubic_graphs)
        .map(|g| Case { id: format!("g6:{}", to_graph6(&g).expect("simple")), graph: g })
        .collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteLine {
    pub id: String,
    pub detail: String,
    pub ok: bool,
    /// A counterexample to a conjectured inequality rather than a defect.
    pub refutation: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteOutcome {
    pub name: String,
    pub lines: Vec<SuiteLine>,
}

impl SuiteOutcome {
    pub fn failures(&self) -> impl Iterator<Item = &SuiteLine> {
        self.lines.iter().filter(|l| !l.ok && !l.refutation)
    }

    pub fn refutations(&self) -> impl Iterator<Item = &SuiteLine> {
        self.lines.iter().filter(|l| l.refutation)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }
}

fn line(id: &str, detail: String, ok: bool) -> SuiteLine {
    SuiteLine { id: id.to_owned(), detail, ok, refutation: false }
}

/// `F_wi ≤ a ≤ F ≤ 2^m`, with `a` computed both from the chromatic polynomial
/// and from broken cycles.
pub fn sandwich_suite(cases: &[Case], budget: &Budget) -> SuiteOutcome {
    let lines = par::map(cases, |c| {
        let g = &c.graph;
        let result = (|| {
            let w = count_weakly_induced_forests(g, budget)?;
            let a = count_acyclic_orientations(g, budget)?.count;
            let a_broken = broken_cycle_free_total(g, budget)?;
            let f = count_forests_oracle(g, budget)?;
            let ok = w <= a && a <= f && f <= BigCount::pow2(g.edge_count()) && a == a_broken;
            Ok::<_, crate::Error>(line(&c.id, format!("F_wi={w} a={a} a_nbc={a_broken} F={f}"), ok))
        })();
        result.unwrap_or_else(|e| line(&c.id, e.to_string(), false))
    });
    SuiteOutcome { name: "sandwich".into(), lines }
}

/// Negative correlation on each case; a negative margin is a refutation.
pub fn correlation_suite(cases: &[Case], budget: &Budget) -> SuiteOutcome {
    let lines = par::map(cases, |c| match check_negative_correlation(&c.graph, &c.id, budget) {
        Ok(r) => SuiteLine {
            id: c.id.clone(),
            detail: format!(
                "min margin {} at {:?}; equivalent forms {}",
                r.margin.as_deref().unwrap_or("n/a"),
                r.worst_pair,
                if r.equivalence_mismatch { "DISAGREE" } else { "agree" }
            ),
            ok: !r.violation && !r.equivalence_mismatch,
            refutation: r.violation,
        },
        Err(e) => line(&c.id, e.to_string(), false),
    });
    SuiteOutcome { name: "correlation".into(), lines }
}

/// Random 2-lifts of graphs on at most 5 vertices: `F(G)² ≤ F(H)`, and the
/// exact forest count of the cover crossing a single edge.
pub fn covers_suite(count: usize, seed: u64, budget: &Budget) -> SuiteOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let simple = simple_cases(5);
    let instances: Vec<(String, MultiGraph, Vec<Sign>, Option<usize>)> = (0..count)
        .map(|i| {
            let (id, g) = if rng.random_bool(0.5) {
                let c = &simple[rng.random_range(0..simple.len())];
                (c.id.clone(), c.graph.clone())
            } else {
                let n = rng.random_range(1..=5);
                let m = rng.random_range(0..=8);
                let loops = rng.random_bool(0.2);
                (format!("random-cover:{i}"), random_multigraph(&mut rng, n, m, loops))
            };
            let signs = (0..g.edge_count())
                .map(|_| if rng.random_bool(0.5) { Sign::Minus } else { Sign::Plus })
                .collect();
            let proper: Vec<usize> = (0..g.edge_count()).filter(|&e| !g.is_loop(e)).collect();
            let edge = (!proper.is_empty()).then(|| proper[rng.random_range(0..proper.len())]);
            (id, g, signs, edge)
        })
        .collect();
    let lines = par::map(&instances, |(id, g, signs, edge)| {
        let result = (|| {
            let lift = SignedLift::new(g.clone(), signs.clone())?;
            let cover = check_two_cover_inequality(&lift, Backend::Auto, budget)?;
            let mut detail = format!("signs {} F(G)^2={} F(H)={}", cover.signs, cover.base_squared, cover.lifted);
            let mut ok = cover.holds;
            let mut refutation = !cover.holds;
            if let Some(e) = *edge {
                let s = check_special_cover_identity(g, e, Backend::Auto, budget)?;
                detail.push_str(&format!(
                    "; edge {e}: f1={} f2={} F(H_e)={} identity {}",
                    s.f1,
                    s.f2,
                    s.lifted,
                    if s.identity_holds { "holds" } else { "FAILS" }
                ));
                ok &= s.identity_holds && s.inequality_holds;
                refutation |= !s.inequality_holds;
                if !s.identity_holds {
                    refutation = false;
                }
            }
            Ok::<_, crate::Error>(SuiteLine { id: id.clone(), detail, ok, refutation })
        })();
        result.unwrap_or_else(|e| line(id, e.to_string(), false))
    });
    SuiteOutcome { name: "covers".into(), lines }
}

/// Every applicable bound from [`bound_suite`] against exact counts.
pub fn bounds_suite(cases: &[Case], budget: &Budget) -> SuiteOutcome {
    let lines = par::map(cases, |c| {
        let r = bound_suite(&c.graph, budget);
        let violated: Vec<&str> = r.violations().map(|e| e.bound.name.as_str()).collect();
        let unchecked = r.entries.iter().filter(|e| e.holds.is_none()).count();
        let detail = if violated.is_empty() {
            format!("{} bounds hold, {unchecked} unchecked", r.entries.len() - unchecked)
        } else {
            format!("violated: {}", violated.join(", "))
        };
        line(&c.id, detail, violated.is_empty())
    });
    SuiteOutcome { name: "bounds".into(), lines }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_shape() {
        let c = default_corpus();
        assert_eq!(c.len(), 1 + 1 + 2 + 6 + 21 + 112 + 200);
        assert_eq!(cubic_corpus().len(), 1 + 2 + 5 + 19);
    }

    #[test]
    fn small_suites_pass() {
        let b = Budget::default();
        let cases = simple_cases(4);
        assert!(sandwich_suite(&cases, &b).passed());
        assert!(correlation_suite(&cases, &b).passed());
        assert!(bounds_suite(&cases, &b).passed());
        let covers = covers_suite(10, 7, &b);
        assert!(covers.passed(), "{:?}", covers.failures().collect::<Vec<_>>());
        assert_eq!(covers.lines.len(), 10);
    }
}
