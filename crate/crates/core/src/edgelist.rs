//! Plain-text edge-list format.
//!
//! ```text
//! # optional comments
//! n m
//! u v        (m lines, 0-based, `u u` is a self-loop)
//! ```
//!
//! Lines starting with `#` are comments. A comment of the form
//! `# label <node> <text>` attaches a label to a node; any other comment is
//! ignored. The writer emits the header, then label comments (if the graph
//! has labels), then one `min max` line per edge in ascending order, so that
//! writing a canonical file back out reproduces it byte for byte.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{GraphError, Result};
use crate::graph::Graph;

const LABEL_PREFIX: &str = "label";

pub fn parse(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = BTreeSet::new();
    let mut labels: Vec<(usize, usize, String)> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let mut words = comment.split_whitespace();
            if words.next() == Some(LABEL_PREFIX) {
                let node = words
                    .next()
                    .and_then(|w| w.parse::<usize>().ok())
                    .ok_or_else(|| parse_err(line_no, "label comment needs a node index"))?;
                let text = words.collect::<Vec<_>>().join(" ");
                labels.push((line_no, node, text));
            }
            continue;
        }

        let fields: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = fields[..] else {
            return Err(parse_err(
                line_no,
                format!("expected two integers, found {} fields", fields.len()),
            ));
        };
        let a = parse_index(a, line_no)?;
        let b = parse_index(b, line_no)?;

        match header {
            None => header = Some((a, b)),
            Some((n, m)) => {
                if a >= n || b >= n {
                    return Err(parse_err(
                        line_no,
                        format!("edge {{{a},{b}}} references a node outside 0..{n}"),
                    ));
                }
                if !edges.insert((a.min(b), a.max(b))) {
                    return Err(parse_err(line_no, format!("duplicate edge {{{a},{b}}}")));
                }
                if edges.len() > m {
                    return Err(parse_err(
                        line_no,
                        format!("more than the declared {m} edges"),
                    ));
                }
            }
        }
    }

    let (n, m) = header.ok_or_else(|| parse_err(last_line.max(1), "missing `n m` header"))?;
    if edges.len() != m {
        return Err(parse_err(
            last_line.max(1),
            format!("header declares {m} edges but {} were listed", edges.len()),
        ));
    }
    let g = Graph::from_edges(n, edges).expect("indices validated above");
    if labels.is_empty() {
        return Ok(g);
    }
    let mut names = vec![String::new(); n];
    for (line_no, node, text) in labels {
        if node >= n {
            return Err(parse_err(line_no, format!("label for missing node {node}")));
        }
        names[node] = text;
    }
    Ok(g.with_labels(names).expect("one label per node"))
}

fn parse_index(word: &str, line: usize) -> Result<usize> {
    word.parse()
        .map_err(|_| parse_err(line, format!("`{word}` is not a nonnegative integer")))
}

fn parse_err(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        message: message.into(),
    }
}

pub fn write(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.node_count(), g.edge_count()).unwrap();
    if let Some(labels) = g.labels() {
        for (i, l) in labels.iter().enumerate().filter(|(_, l)| !l.is_empty()) {
            writeln!(out, "# {LABEL_PREFIX} {i} {l}").unwrap();
        }
    }
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
