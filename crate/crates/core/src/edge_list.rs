//! Plain-text edge lists.
//!
//! ```text
//! # optional comment lines
//! 4
//! 0 1
//! 1 2
//! 2 3
//! ```
//!
//! The first non-comment line is the order `n`; every other non-empty line is
//! one edge `u v` with `0 <= u < v < n`. Several documents in one file are
//! separated by blank lines.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    /// 1-based line number within the input text.
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing order line")]
    MissingOrder,
    #[error("malformed line {0:?}")]
    Malformed(String),
    #[error("{0}")]
    Graph(#[from] GraphError),
}

/// Serializable form of a graph: its order and normalized edge list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeListDocument {
    pub order: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<&Graph> for EdgeListDocument {
    fn from(g: &Graph) -> Self {
        EdgeListDocument {
            order: g.order(),
            edges: g.edges(),
        }
    }
}

impl TryFrom<&EdgeListDocument> for Graph {
    type Error = GraphError;

    fn try_from(doc: &EdgeListDocument) -> Result<Self, GraphError> {
        Graph::from_edges(doc.order, &doc.edges)
    }
}

fn is_skipped(line: &str) -> bool {
    let t = line.trim();
    t.is_empty() || t.starts_with('#')
}

/// Parses one edge-list document.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    parse_lines(text.lines().enumerate().map(|(i, l)| (i + 1, l)), 1)
}

fn parse_lines<'a>(
    mut lines: impl Iterator<Item = (usize, &'a str)>,
    first_line: usize,
) -> Result<Graph, ParseError> {
    let (order_line, order_text) = loop {
        match lines.next() {
            Some((_, l)) if is_skipped(l) => continue,
            Some(found) => break found,
            None => {
                return Err(ParseError {
                    line: first_line,
                    kind: ParseErrorKind::MissingOrder,
                })
            }
        }
    };
    let n: usize = order_text.trim().parse().map_err(|_| ParseError {
        line: order_line,
        kind: ParseErrorKind::Malformed(order_text.to_string()),
    })?;
    let mut g = Graph::new(n).map_err(|e| ParseError {
        line: order_line,
        kind: e.into(),
    })?;
    for (line, text) in lines {
        if is_skipped(text) {
            continue;
        }
        let malformed = || ParseError {
            line,
            kind: ParseErrorKind::Malformed(text.to_string()),
        };
        let mut fields = text.split_whitespace();
        let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(malformed());
        };
        let u: usize = a.parse().map_err(|_| malformed())?;
        let v: usize = b.parse().map_err(|_| malformed())?;
        g.add_edge(u, v).map_err(|e| ParseError {
            line,
            kind: e.into(),
        })?;
    }
    Ok(g)
}

/// Parses blank-line separated documents; line numbers in errors refer to the whole text.
pub fn parse_edge_list_documents(text: &str) -> Result<Vec<Graph>, ParseError> {
    let mut graphs = Vec::new();
    let mut block: Vec<(usize, &str)> = Vec::new();
    let mut flush = |block: &mut Vec<(usize, &str)>| -> Result<(), ParseError> {
        if block.iter().any(|(_, l)| !is_skipped(l)) {
            let first = block[0].0;
            graphs.push(parse_lines(block.drain(..), first)?);
        }
        block.clear();
        Ok(())
    };
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            flush(&mut block)?;
        } else {
            block.push((i + 1, line));
        }
    }
    flush(&mut block)?;
    Ok(graphs)
}

/// Order line followed by one `u v` line per edge, ascending, LF-terminated.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::{cycle, path};

    #[test]
    fn parses_paths_and_cycles() {
        assert_eq!(parse_edge_list("4\n0 1\n1 2\n2 3").unwrap(), path(4));
        assert_eq!(parse_edge_list("4\n0 1\n1 2\n2 3\n3 0").unwrap(), cycle(4));
        assert_eq!(
            parse_edge_list("# comment\n4\n# inner\n0 1\n\n1 2\n2 3\n").unwrap(),
            path(4)
        );
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_edge_list("3\n0 1\n0 1").unwrap_err();
        assert_eq!(err.line, 3);
        assert_eq!(
            err.kind,
            ParseErrorKind::Graph(GraphError::DuplicateEdge(0, 1))
        );

        let err = parse_edge_list("3\n0 1\n2 2").unwrap_err();
        assert_eq!(err.line, 3);
        assert_eq!(err.kind, ParseErrorKind::Graph(GraphError::SelfLoop(2)));

        let err = parse_edge_list("3\n0 3").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(matches!(
            err.kind,
            ParseErrorKind::Graph(GraphError::VertexOutOfRange { vertex: 3, .. })
        ));

        let err = parse_edge_list("3\n0 1 2").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::Malformed(_)));
        let err = parse_edge_list("x\n").unwrap_err();
        assert_eq!(err.line, 1);
        assert_eq!(
            parse_edge_list("").unwrap_err().kind,
            ParseErrorKind::MissingOrder
        );
    }

    #[test]
    fn serializes_sorted() {
        let g = parse_edge_list("4\n2 3\n0 1\n1 2").unwrap();
        assert_eq!(to_edge_list(&g), "4\n0 1\n1 2\n2 3\n");
        assert_eq!(to_edge_list(&Graph::new(1).unwrap()), "1\n");
    }

    #[test]
    fn multiple_documents() {
        let text = format!(
            "{}\n{}\n\n",
            to_edge_list(&path(4)),
            to_edge_list(&cycle(5))
        );
        let graphs = parse_edge_list_documents(&text).unwrap();
        assert_eq!(graphs, vec![path(4), cycle(5)]);
        let err = parse_edge_list_documents("2\n0 1\n\n2\n0 1\n0 1\n").unwrap_err();
        assert_eq!(err.line, 6);
    }
}
