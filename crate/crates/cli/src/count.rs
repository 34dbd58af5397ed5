use serde::Serialize;

use forestry::count::{
    count_acyclic_orientations, count_connected_spanning, count_forests, count_spanning_trees,
    count_weakly_induced_forests, Backend, BigCount,
};
use forestry::MultiGraph;

use crate::input::load_graph;
use crate::output::{emit, json, Format, Table};
use crate::{Common, Failure};

#[derive(Serialize)]
struct Quantity {
    name: &'static str,
    /// Exact value as a decimal string.
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<String>,
    /// `value^{1/n}`, rounded to six decimals.
    #[serde(skip_serializing_if = "Option::is_none")]
    per_vertex: Option<f64>,
    method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

#[derive(Serialize)]
struct CountReport {
    graph: String,
    n: usize,
    m: usize,
    /// `F / 2^m`, when `F` was computed.
    #[serde(skip_serializing_if = "Option::is_none")]
    forest_ratio: Option<f64>,
    quantities: Vec<Quantity>,
}

fn backend_name(b: Backend) -> &'static str {
    match b {
        Backend::Oracle => "oracle",
        Backend::DeletionContraction => "dc",
        Backend::Frontier => "frontier",
        Backend::Auto => "auto",
    }
}

fn round6(x: f64) -> f64 {
    format!("{x:.6}").parse().expect("formatted float")
}

fn quantity(name: &'static str, method: String, n: usize, result: forestry::Result<BigCount>) -> (Quantity, bool) {
    match result {
        Ok(c) => {
            let per_vertex = (n > 0).then(|| round6(c.root(n)));
            (Quantity { name, value: Some(c.to_string()), per_vertex, method, error: None }, false)
        }
        Err(e) => {
            let budget = e.is_budget();
            (Quantity { name, value: None, per_vertex: None, method, error: Some(e.to_string()) }, budget)
        }
    }
}

pub fn run(common: &Common) -> Result<(), Failure> {
    let (id, g) = load_graph(common)?;
    let budget = common.budget();
    let backend = Backend::from(common.backend).resolve(&g);
    let method = backend_name(backend).to_owned();
    let n = g.vertex_count();

    let forests = count_forests(&g, backend, &budget);
    let forest_ratio = forests.as_ref().ok().map(|f| f.ratio_to_pow2(g.edge_count()));
    let results = [
        quantity("F", method.clone(), n, forests),
        quantity("C", method, n, count_connected_spanning(&g, backend, &budget)),
        quantity("a", "chromatic".into(), n, count_acyclic_orientations(&g, &budget).map(|a| a.count)),
        quantity("tau", "matrix-tree".into(), n, Ok(count_spanning_trees(&g))),
        quantity("F_wi", "oracle".into(), n, count_weakly_induced_forests(&g, &budget)),
    ];
    let exhausted = results.iter().any(|(_, b)| *b);
    let report = CountReport {
        graph: id,
        n,
        m: g.edge_count(),
        forest_ratio,
        quantities: results.into_iter().map(|(q, _)| q).collect(),
    };
    emit(common, &render(&report, &g, common.format))?;
    if exhausted {
        return Err(Failure::Budget);
    }
    Ok(())
}

fn render(report: &CountReport, g: &MultiGraph, format: Format) -> String {
    if format == Format::Json {
        return json(report);
    }
    let mut t = Table::new(vec!["quantity", "value", "per_vertex", "method"]);
    for q in &report.quantities {
        t.push(vec![
            q.name.to_owned(),
            q.value.clone().unwrap_or_else(|| format!("unavailable: {}", q.error.as_deref().unwrap_or(""))),
            q.per_vertex.map(|p| format!("{p:.6}")).unwrap_or_default(),
            q.method.clone(),
        ]);
    }
    if let Some(r) = report.forest_ratio {
        t.push(vec!["F/2^m".into(), format!("{r:.10}"), String::new(), String::new()]);
    }
    match format {
        Format::Tsv => t.tsv(),
        _ => format!("graph {} (n={}, m={})\n{}", report.graph, g.vertex_count(), g.edge_count(), t.pretty()),
    }
}
