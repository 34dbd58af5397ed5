use serde::Serialize;

use forestry::lab::suites::{
    bounds_suite, correlation_suite, covers_suite, cubic_corpus, default_corpus, sandwich_suite, Case, SuiteLine,
    SuiteOutcome,
};

use crate::output::{emit, json, Format, Table};
use crate::{Common, Failure, Suite};

#[derive(Serialize)]
struct SuiteSummary<'a> {
    name: &'a str,
    cases: usize,
    passed: bool,
    failures: Vec<&'a SuiteLine>,
    refutations: Vec<&'a SuiteLine>,
}

fn selected(suite: Suite) -> Vec<Suite> {
    match suite {
        Suite::All => vec![Suite::Sandwich, Suite::Correlation, Suite::Covers, Suite::Bounds],
        s => vec![s],
    }
}

pub fn run(suite: Suite, covers: usize, common: &Common) -> Result<(), Failure> {
    let budget = common.budget();
    let corpus = default_corpus();
    let outcomes: Vec<SuiteOutcome> = selected(suite)
        .into_iter()
        .map(|s| match s {
            Suite::Sandwich => sandwich_suite(&corpus, &budget),
            Suite::Correlation => {
                let simple: Vec<Case> = corpus.iter().filter(|c| c.id.starts_with("g6:")).cloned().collect();
                correlation_suite(&simple, &budget)
            }
            Suite::Covers => covers_suite(covers, common.seed, &budget),
            Suite::Bounds => {
                let mut cases = corpus.clone();
                cases.extend(cubic_corpus());
                bounds_suite(&cases, &budget)
            }
            Suite::All => unreachable!("expanded above"),
        })
        .collect();
    let summaries: Vec<SuiteSummary> = outcomes
        .iter()
        .map(|o| SuiteSummary {
            name: &o.name,
            cases: o.lines.len(),
            passed: o.passed(),
            failures: o.failures().collect(),
            refutations: o.refutations().collect(),
        })
        .collect();
    let text = match common.format {
        Format::Json => json(&summaries),
        Format::Tsv => tsv(&outcomes),
        Format::Pretty => pretty(&summaries),
    };
    emit(common, &text)?;
    if summaries.iter().all(|s| s.passed) {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn tsv(outcomes: &[SuiteOutcome]) -> String {
    let mut t = Table::new(vec!["suite", "case", "ok", "refutation", "detail"]);
    for o in outcomes {
        for l in &o.lines {
            t.push(vec![o.name.clone(), l.id.clone(), l.ok.to_string(), l.refutation.to_string(), l.detail.clone()]);
        }
    }
    t.tsv()
}

fn pretty(summaries: &[SuiteSummary]) -> String {
    let mut t = Table::new(vec!["suite", "cases", "failures", "refutations", "status"]);
    for s in summaries {
        t.push(vec![
            s.name.to_owned(),
            s.cases.to_string(),
            s.failures.len().to_string(),
            s.refutations.len().to_string(),
            if s.passed { "PASS" } else { "FAIL" }.to_owned(),
        ]);
    }
    let mut out = t.pretty();
    for s in summaries {
        for l in &s.failures {
            out.push_str(&format!("FAIL {} {}: {}\n", s.name, l.id, l.detail));
        }
    }
    let refutations: Vec<String> = summaries
        .iter()
        .flat_map(|s| s.refutations.iter().map(move |l| format!("{} {}: {}", s.name, l.id, l.detail)))
        .collect();
    if !refutations.is_empty() {
        let bar = "=".repeat(60);
        out.push_str(&format!("{bar}\nREFUTATION: counterexample to a conjectured inequality\n"));
        for r in refutations {
            out.push_str(&r);
            out.push('\n');
        }
        out.push_str(&bar);
        out.push('\n');
    }
    out
}
