//! Plain-text edge lists.
//!
//! ```text
//! # optional comments
//! n 4
//! 0 1
//! 1 2
//! ```
//!
//! The header `n <N>` must be the first non-comment line. Vertices are
//! 0-indexed. [`write_graph`] emits the canonical form: no comments, one
//! `u v` line per edge with `u < v`, sorted lexicographically.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

/// A repeated edge that was merged during parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DuplicateEdge {
    pub line: usize,
    pub u: usize,
    pub v: usize,
}

/// Parses an edge list, returning the graph and every duplicate edge seen.
pub fn parse_edge_list(text: &str) -> Result<(Graph, Vec<DuplicateEdge>)> {
    let mut builder: Option<GraphBuilder> = None;
    let mut duplicates = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parse_err = |message: String| Error::Parse {
            line: line_no,
            message,
        };

        let Some(b) = builder.as_mut() else {
            match fields.as_slice() {
                ["n", count] => {
                    let n = count
                        .parse::<usize>()
                        .map_err(|_| parse_err(format!("bad vertex count {count:?}")))?;
                    if n == 0 {
                        return Err(Error::EmptyGraph);
                    }
                    builder = Some(GraphBuilder::new(n));
                    continue;
                }
                _ => {
                    return Err(parse_err(format!(
                        "expected header `n <N>`, found {line:?}"
                    )))
                }
            }
        };

        let [a, c] = fields.as_slice() else {
            return Err(parse_err(format!("expected `u v`, found {line:?}")));
        };
        let u = a
            .parse::<usize>()
            .map_err(|_| parse_err(format!("bad vertex {a:?}")))?;
        let v = c
            .parse::<usize>()
            .map_err(|_| parse_err(format!("bad vertex {c:?}")))?;
        match b.add_edge(u, v) {
            Ok(true) => {}
            Ok(false) => {
                log::warn!("line {line_no}: duplicate edge {u} {v} ignored");
                duplicates.push(DuplicateEdge {
                    line: line_no,
                    u,
                    v,
                });
            }
            Err(Error::VertexOutOfRange { vertex, n }) => {
                return Err(parse_err(format!(
                    "vertex {vertex} out of range for n = {n}"
                )))
            }
            Err(Error::SelfLoop { vertex }) => {
                return Err(parse_err(format!("self-loop at vertex {vertex}")))
            }
            Err(e) => return Err(e),
        }
    }

    match builder {
        Some(b) => Ok((b.build()?, duplicates)),
        None => Err(Error::Parse {
            line: text.lines().count(),
            message: "missing header `n <N>`".into(),
        }),
    }
}

/// Parses an edge list. Duplicate edges are merged with a logged warning.
pub fn read_graph(text: &str) -> Result<Graph> {
    parse_edge_list(text).map(|(g, _)| g)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
