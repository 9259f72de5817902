//! Reading hypergraphs from the line-oriented text format and its JSON
//! equivalent.
//!
//! Text format:
//!
//! ```text
//! # comment
//! vertices: 1 2 3 4 5     # labels, or `vertices: 5` for ids 0..4
//! 1 3                     # one edge per line, in order
//! {1, 2, 3}               # braces/brackets and commas are optional
//! ```
//!
//! JSON format: `{"vertices": [...], "edges": [[...], ...]}` where
//! `vertices` is either a label array or a vertex count.

use std::collections::HashMap;
use std::path::Path;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Reads a hypergraph from disk; `.json` files use the JSON format.
pub fn read_hypergraph(path: &Path) -> Result<Hypergraph> {
    let text = std::fs::read_to_string(path).map_err(|err| Error::Parse {
        line: 0,
        column: 0,
        message: format!("cannot read {}: {err}", path.display()),
    })?;
    let is_json = path
        .extension()
        .is_some_and(|ext| ext.eq_ignore_ascii_case("json"));
    if is_json {
        parse_json(&text)
    } else {
        parse_hypergraph(&text)
    }
}

enum Vertices {
    Count(usize),
    Labels(HashMap<String, usize>),
}

impl Vertices {
    fn resolve(&self, token: &str, line: usize, column: usize) -> Result<usize> {
        match self {
            // Out-of-range ids are left for validation to report.
            Vertices::Count(_) => token.parse::<usize>().map_err(|_| Error::Parse {
                line,
                column,
                message: format!("expected a vertex id, found {token:?}"),
            }),
            Vertices::Labels(index) => index.get(token).copied().ok_or_else(|| Error::Parse {
                line,
                column,
                message: format!("unknown vertex label {token:?}"),
            }),
        }
    }
}

/// Whitespace- or comma-separated tokens of `text` with their 1-based
/// columns, counted from `offset`.
fn tokens(text: &str, offset: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in text.char_indices() {
        let separator = ch.is_whitespace() || ch == ',';
        match (separator, start) {
            (true, Some(s)) => {
                out.push((s, &text[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    out.into_iter()
        .map(|(byte, token)| (offset + text[..byte].chars().count() + 1, token))
        .collect()
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Parses the text format. Edge listing order becomes the edge table order.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut vertices = None;
    let mut labels = None;
    let mut edges = Vec::new();

    for (index, raw) in text.lines().enumerate() {
        let line_no = index + 1;
        let content = strip_comment(raw);
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        let lead = content.chars().take_while(|c| c.is_whitespace()).count();

        let Some(declared) = &vertices else {
            let Some(rest) = trimmed.strip_prefix("vertices:") else {
                return Err(Error::Parse {
                    line: line_no,
                    column: lead + 1,
                    message: "expected `vertices: <n>` or `vertices: <labels>`".into(),
                });
            };
            let listed = tokens(rest, lead + "vertices:".len());
            match listed.as_slice() {
                [(_, count)] if count.parse::<usize>().is_ok() => {
                    vertices = Some(Vertices::Count(count.parse().unwrap()));
                }
                _ => {
                    let mut index = HashMap::new();
                    for (column, label) in &listed {
                        if index.insert(label.to_string(), index.len()).is_some() {
                            return Err(Error::Parse {
                                line: line_no,
                                column: *column,
                                message: format!("duplicate vertex label {label:?}"),
                            });
                        }
                    }
                    labels = Some(listed.iter().map(|(_, l)| l.to_string()).collect());
                    vertices = Some(Vertices::Labels(index));
                }
            }
            continue;
        };

        let (body, offset) = unwrap_brackets(trimmed, line_no, lead)?;
        let mut edge = Vec::new();
        for (column, token) in tokens(body, offset) {
            edge.push(declared.resolve(token, line_no, column)?);
        }
        edges.push(edge);
    }

    let (vertex_count, labels) = match vertices {
        None => {
            return Err(Error::Parse {
                line: text.lines().count().max(1),
                column: 1,
                message: "missing `vertices:` line".into(),
            })
        }
        Some(Vertices::Count(n)) => (n, None),
        Some(Vertices::Labels(index)) => (index.len(), labels),
    };
    let g = Hypergraph::new(vertex_count, edges)?;
    match labels {
        Some(labels) => g.with_labels(labels),
        None => Ok(g),
    }
}

/// Removes one optional `{...}` or `[...]` around an edge.
fn unwrap_brackets(line: &str, line_no: usize, lead: usize) -> Result<(&str, usize)> {
    let closing = match line.chars().next() {
        Some('{') => '}',
        Some('[') => ']',
        _ => return Ok((line, lead)),
    };
    match line[1..].strip_suffix(closing) {
        Some(inner) => Ok((inner, lead + 1)),
        None => Err(Error::Parse {
            line: line_no,
            column: lead + line.chars().count(),
            message: format!("expected closing {closing:?}"),
        }),
    }
}

fn json_label(value: &Value) -> Option<String> {
    match value {
        Value::String(s) => Some(s.clone()),
        Value::Number(n) => Some(n.to_string()),
        _ => None,
    }
}

/// Parses `{"vertices": [...] | n, "edges": [[...], ...]}`.
pub fn parse_json(text: &str) -> Result<Hypergraph> {
    let root: Value = serde_json::from_str(text).map_err(|err| Error::Parse {
        line: err.line(),
        column: err.column(),
        message: err.to_string(),
    })?;
    let vertices = root
        .get("vertices")
        .ok_or_else(|| Error::Json("missing \"vertices\"".into()))?;
    let raw_edges = root
        .get("edges")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Json("missing \"edges\" array".into()))?;

    let (declared, labels) = match vertices {
        Value::Number(n) => {
            let count = n
                .as_u64()
                .ok_or_else(|| Error::Json(format!("bad vertex count {n}")))?;
            (Vertices::Count(count as usize), None)
        }
        Value::Array(items) => {
            let mut index = HashMap::new();
            let mut labels = Vec::new();
            for item in items {
                let label = json_label(item)
                    .ok_or_else(|| Error::Json(format!("bad vertex label {item}")))?;
                if index.insert(label.clone(), labels.len()).is_some() {
                    return Err(Error::Json(format!("duplicate vertex label {label:?}")));
                }
                labels.push(label);
            }
            (Vertices::Labels(index), Some(labels))
        }
        other => return Err(Error::Json(format!("bad \"vertices\" value {other}"))),
    };

    let mut edges = Vec::with_capacity(raw_edges.len());
    for (i, raw) in raw_edges.iter().enumerate() {
        let members = raw
            .as_array()
            .ok_or_else(|| Error::Json(format!("edge {i} is not an array")))?;
        let mut edge = Vec::with_capacity(members.len());
        for member in members {
            let id = match (&declared, member) {
                (Vertices::Count(_), Value::Number(n)) => n.as_u64().map(|v| v as usize),
                (Vertices::Labels(index), _) => {
                    json_label(member).and_then(|l| index.get(&l).copied())
                }
                _ => None,
            };
            edge.push(id.ok_or_else(|| Error::Json(format!("edge {i}: unknown vertex {member}")))?);
        }
        edges.push(edge);
    }

    let vertex_count = match &declared {
        Vertices::Count(n) => *n,
        Vertices::Labels(index) => index.len(),
    };
    let g = Hypergraph::new(vertex_count, edges)?;
    match labels {
        Some(labels) => g.with_labels(labels),
        None => Ok(g),
    }
}
