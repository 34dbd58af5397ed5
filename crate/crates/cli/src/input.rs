use std::path::Path;

use forestry::graph::{named_graph, parse_edge_list, parse_graph6};
use forestry::{Error, MultiGraph};

use crate::{Common, Failure};

/// Resolves `--graph`: an existing file first, then a registry name, then an
/// inline graph6 string.
pub fn load_graph(common: &Common) -> Result<(String, MultiGraph), Failure> {
    let spec = common.graph.as_deref().ok_or_else(|| Failure::Input("--graph is required".into()))?;
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{spec}: {e}")))?;
        return parse_text(&text).map(|g| (spec.to_owned(), g)).map_err(|e| Failure::Input(format!("{spec}: {e}")));
    }
    match named_graph(spec) {
        Ok(g) => Ok((spec.to_owned(), g)),
        Err(Error::UnknownGraph(_)) => parse_graph6(spec.trim())
            .map(|g| (spec.to_owned(), g))
            .map_err(|_| Failure::Input(format!("`{spec}` is neither a file, a known graph name nor graph6"))),
        Err(e) => Err(Failure::Input(e.to_string())),
    }
}

/// Edge-list text starts with a number; graph6 never contains digits.
fn parse_text(text: &str) -> forestry::Result<MultiGraph> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .unwrap_or("");
    if first.is_empty() || first.starts_with(|c: char| c.is_ascii_digit() || c == '-') {
        parse_edge_list(text)
    } else {
        parse_graph6(first)
    }
}
