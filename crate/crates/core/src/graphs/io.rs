//! Graph file formats.
//!
//! Text form, one graph per file:
//!
//! ```text
//! vertices: x1 x2 x3
//! edge: x1 x2
//! edge: x2 x3
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. The JSON form
//! `{"vertices": [...], "edges": [[a, b], ...]}` is accepted interchangeably.

use serde::{Deserialize, Serialize};

use super::{SimplicialGraph, VertexId};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<String>,
    edges: Vec<[String; 2]>,
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

/// Parses either format, choosing JSON when the first non-blank character is `{`.
pub fn parse_graph(input: &str) -> Result<SimplicialGraph> {
    if input.trim_start().starts_with('{') {
        parse_graph_json(input)
    } else {
        parse_graph_text(input)
    }
}

pub fn parse_graph_json(input: &str) -> Result<SimplicialGraph> {
    let raw: GraphJson = serde_json::from_str(input)
        .map_err(|e| parse_err(e.line(), e.column(), e.to_string()))?;
    let labels: Vec<&str> = raw.vertices.iter().map(String::as_str).collect();
    let edges: Vec<(&str, &str)> = raw.edges.iter().map(|[a, b]| (a.as_str(), b.as_str())).collect();
    SimplicialGraph::from_labels(&labels, &edges).map_err(|e| parse_err(1, 1, e.to_string()))
}

/// Splits a line into `(column, token)` pairs, columns 1-based.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

pub fn parse_graph_text(input: &str) -> Result<SimplicialGraph> {
    let mut labels: Option<Vec<VertexId>> = None;
    let mut edges = Vec::new();
    for (lineno, line) in input.lines().enumerate() {
        let lineno = lineno + 1;
        let toks = tokens(line);
        let Some(&(col, head)) = toks.first() else { continue };
        if head.starts_with('#') {
            continue;
        }
        match head {
            "vertices:" => {
                if labels.is_some() {
                    return Err(parse_err(lineno, col, "duplicate `vertices:` line"));
                }
                let mut ids = Vec::new();
                for &(c, t) in &toks[1..] {
                    let id = VertexId::new(t).map_err(|e| parse_err(lineno, c, e.to_string()))?;
                    if ids.contains(&id) {
                        return Err(parse_err(lineno, c, format!("duplicate vertex {t}")));
                    }
                    ids.push(id);
                }
                labels = Some(ids);
            }
            "edge:" => {
                let ids = labels
                    .as_ref()
                    .ok_or_else(|| parse_err(lineno, col, "`edge:` before `vertices:`"))?;
                if toks.len() != 3 {
                    return Err(parse_err(lineno, col, "expected `edge: a b`"));
                }
                let mut ends = [0usize; 2];
                for (k, &(c, t)) in toks[1..].iter().enumerate() {
                    ends[k] = ids
                        .iter()
                        .position(|l| l.as_str() == t)
                        .ok_or_else(|| parse_err(lineno, c, format!("unknown vertex {t}")))?;
                }
                if ends[0] == ends[1] {
                    return Err(parse_err(lineno, toks[2].0, "loops are not allowed"));
                }
                edges.push((ends[0], ends[1]));
            }
            other => {
                return Err(parse_err(lineno, col, format!("unexpected {other:?}; expected `vertices:` or `edge:`")))
            }
        }
    }
    let labels = labels.ok_or_else(|| parse_err(1, 1, "missing `vertices:` line"))?;
    SimplicialGraph::new(labels, edges).map_err(|e| parse_err(1, 1, e.to_string()))
}

impl SimplicialGraph {
    pub fn to_text(&self) -> String {
        let mut s = String::from("vertices:");
        for l in self.labels() {
            s.push(' ');
            s.push_str(l.as_str());
        }
        s.push('\n');
        for (u, v) in self.edges() {
            s.push_str(&format!("edge: {} {}\n", self.label(u), self.label(v)));
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let raw = GraphJson {
            vertices: self.labels().iter().map(|l| l.to_string()).collect(),
            edges: self
                .edges()
                .into_iter()
                .map(|(u, v)| [self.label(u).to_string(), self.label(v).to_string()])
                .collect(),
        };
        serde_json::to_value(raw).expect("plain data serializes")
    }
}
