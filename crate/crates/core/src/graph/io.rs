use super::MultiGraph;
use crate::error::{Error, Result};

/// Parses the edge-list text format.
///
/// The first token is the vertex count, followed by one `u v` pair per line.
/// Blank lines and anything after `#` are ignored. File order fixes the edge
/// labels.
pub fn parse_edge_list(text: &str) -> Result<MultiGraph> {
    let mut graph: Option<MultiGraph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match graph.as_mut() {
            None => {
                if tokens.len() != 1 {
                    return Err(parse_err(line, "expected the vertex count alone on the first line"));
                }
                let n = parse_id(tokens[0], line, "vertex count")?;
                graph = Some(MultiGraph::new(n));
            }
            Some(g) => {
                if tokens.len() != 2 {
                    return Err(parse_err(line, format!("expected `u v`, found {} tokens", tokens.len())));
                }
                let u = parse_id(tokens[0], line, "vertex id")?;
                let v = parse_id(tokens[1], line, "vertex id")?;
                let n = g.vertex_count();
                if u >= n || v >= n {
                    return Err(parse_err(line, format!("vertex id {} is not below n = {n}", u.max(v))));
                }
                g.add_edge(u, v)?;
            }
        }
    }
    graph.ok_or_else(|| parse_err(1, "missing vertex count"))
}

fn parse_id(tok: &str, line: usize, what: &str) -> Result<usize> {
    if tok.starts_with('-') {
        return Err(parse_err(line, format!("negative {what} `{tok}`")));
    }
    tok.parse::<usize>()
        .map_err(|_| parse_err(line, format!("malformed {what} `{tok}`")))
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Decodes one graph6 string. Only simple graphs can be represented.
pub fn parse_graph6(s: &str) -> Result<MultiGraph> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(parse_err(1, "graph6 byte outside 63..=126"));
    }
    let (n, rest) = match bytes {
        [] => return Err(parse_err(1, "empty graph6 string")),
        [126, 126, ..] => return Err(parse_err(1, "graph6 graphs above 258047 vertices are not supported")),
        [126, a, b, c, rest @ ..] => {
            let n = ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63);
            (n, rest)
        }
        [126, ..] => return Err(parse_err(1, "truncated graph6 size field")),
        [a, rest @ ..] => (*a as usize - 63, rest),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    if rest.len() != pairs.div_ceil(6) {
        return Err(parse_err(1, format!("graph6 body has {} bytes, expected {}", rest.len(), pairs.div_ceil(6))));
    }
    let mut g = MultiGraph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes a simple graph as graph6.
pub fn to_graph6(g: &MultiGraph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::domain("graph6 only represents simple graphs"));
    }
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        return Err(Error::domain("graph too large for graph6"));
    }
    let mut adj = vec![false; n * n];
    for &(u, v) in g.edges() {
        adj[u * n + v] = true;
        adj[v * n + u] = true;
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(adj[i * n + j]);
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
