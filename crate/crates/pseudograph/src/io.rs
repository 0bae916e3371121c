//! Text formats: the edge-list file format (bit-exact round trip), DOT
//! export, and claims JSON.
//!
//! Edge-list format: first line `n m`, then exactly m lines `u v` with
//! 0-indexed endpoints, u <= v, loops written `u u`, edges in sorted order.

use crate::construct::Claims;
use crate::graph::Graph;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    Empty,
    BadHeader { line: usize, text: String },
    BadEdgeLine { line: usize, text: String },
    EdgeCountMismatch { declared: usize, found: usize },
    OutOfRange { line: usize, vertex: usize, n: usize },
    OrderViolation { line: usize, u: usize, v: usize },
    DuplicateEdge { line: usize, u: usize, v: usize },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Empty => write!(f, "empty edge-list file"),
            ParseError::BadHeader { line, text } => {
                write!(f, "line {line}: expected header \"n m\", got {text:?}")
            }
            ParseError::BadEdgeLine { line, text } => {
                write!(f, "line {line}: expected \"u v\", got {text:?}")
            }
            ParseError::EdgeCountMismatch { declared, found } => {
                write!(f, "header declares {declared} edges but {found} edge lines follow")
            }
            ParseError::OutOfRange { line, vertex, n } => {
                write!(f, "line {line}: vertex {vertex} out of range for n = {n}")
            }
            ParseError::OrderViolation { line, u, v } => {
                write!(f, "line {line}: endpoints must satisfy u <= v, got {u} {v}")
            }
            ParseError::DuplicateEdge { line, u, v } => {
                write!(f, "line {line}: duplicate edge {u} {v}")
            }
        }
    }
}

impl std::error::Error for ParseError {}

pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edge_list();
    let mut out = String::with_capacity(8 + 8 * edges.len());
    out.push_str(&format!("{} {}\n", g.n(), edges.len()));
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (hline, header) = lines.next().ok_or(ParseError::Empty)?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(ParseError::BadHeader { line: hline + 1, text: header.to_string() })?;
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(ParseError::BadHeader { line: hline + 1, text: header.to_string() })?;
    if parts.next().is_some() {
        return Err(ParseError::BadHeader { line: hline + 1, text: header.to_string() });
    }
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m);
    let mut seen = std::collections::BTreeSet::new();
    for (lineno, line) in lines {
        let mut parts = line.split_whitespace();
        let parse_pair = (|| {
            let u: usize = parts.next()?.parse().ok()?;
            let v: usize = parts.next()?.parse().ok()?;
            if parts.next().is_some() {
                return None;
            }
            Some((u, v))
        })();
        let (u, v) = parse_pair.ok_or(ParseError::BadEdgeLine { line: lineno + 1, text: line.to_string() })?;
        if u > v {
            return Err(ParseError::OrderViolation { line: lineno + 1, u, v });
        }
        if u >= n || v >= n {
            let vertex = if u >= n { u } else { v };
            return Err(ParseError::OutOfRange { line: lineno + 1, vertex, n });
        }
        if !seen.insert((u, v)) {
            return Err(ParseError::DuplicateEdge { line: lineno + 1, u, v });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCountMismatch { declared: m, found: edges.len() });
    }
    Ok(Graph::from_edge_list(n, &edges).expect("validated above"))
}

/// Graphviz DOT rendering (undirected; loops drawn as self-edges).
pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in 0..g.n() {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in g.edge_list() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

pub fn claims_to_json(claims: &Claims) -> String {
    serde_json::to_string_pretty(claims).expect("claims serialize cleanly")
}

pub fn claims_from_json(text: &str) -> Result<Claims, serde_json::Error> {
    serde_json::from_str(text)
}
