//! Text formats: `biregular-edgelist v1` (optionally followed by a
//! `rotations:` block) and DOT export.
//!
//! ```text
//! biregular-edgelist v1
//! p=2 q=2 a=2 b=2
//! 0 0
//! 0 1
//! 1 0
//! 1 1
//! rotations:
//! A0: B0 B1
//! A1: B1 B0
//! B0: A1 A0
//! B1: A0 A1
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{BipartiteGraph, EmbeddedGraph, EmbeddingError, GraphError};

pub const EDGELIST_HEADER: &str = "biregular-edgelist v1";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

/// Contents of an edge-list or embedding file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub graph: BipartiteGraph,
    /// Declared `(a, b)` degrees, if the size line carries them.
    pub declared_degrees: Option<(u64, u64)>,
    pub embedding: Option<EmbeddedGraph>,
}

/// Significant lines with their 1-based numbers; comments and blank lines
/// are dropped.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_kv(line: usize, token: &str) -> Result<(String, u64), ParseError> {
    let (key, value) = token
        .split_once('=')
        .ok_or_else(|| syntax(line, format!("expected key=value, got `{token}`")))?;
    let value = value
        .parse()
        .map_err(|_| syntax(line, format!("bad number in `{token}`")))?;
    Ok((key.to_string(), value))
}

fn parse_label(line: usize, token: &str, prefix: char, bound: usize) -> Result<usize, ParseError> {
    let rest = token
        .strip_prefix(prefix)
        .ok_or_else(|| syntax(line, format!("expected {prefix}<index>, got `{token}`")))?;
    let index: usize = rest
        .parse()
        .map_err(|_| syntax(line, format!("bad vertex label `{token}`")))?;
    if index >= bound {
        return Err(syntax(line, format!("vertex `{token}` out of range")));
    }
    Ok(index)
}

pub fn parse_document(text: &str) -> Result<Document, ParseError> {
    let mut it = lines(text).peekable();
    match it.next() {
        Some((_, h)) if h == EDGELIST_HEADER => {}
        Some((line, h)) => return Err(syntax(line, format!("expected `{EDGELIST_HEADER}`, got `{h}`"))),
        None => return Err(syntax(1, "empty input")),
    }
    let (size_line, sizes) = it.next().ok_or_else(|| syntax(2, "missing size line"))?;
    let (mut p, mut q, mut a, mut b) = (None, None, None, None);
    for token in sizes.split_whitespace() {
        let (key, value) = parse_kv(size_line, token)?;
        let slot = match key.as_str() {
            "p" => &mut p,
            "q" => &mut q,
            "a" => &mut a,
            "b" => &mut b,
            _ => return Err(syntax(size_line, format!("unknown key `{key}`"))),
        };
        *slot = Some(value);
    }
    let (Some(p), Some(q)) = (p, q) else {
        return Err(syntax(size_line, "size line needs p=<p> q=<q>"));
    };
    let declared_degrees = match (a, b) {
        (Some(a), Some(b)) => Some((a, b)),
        (None, None) => None,
        _ => return Err(syntax(size_line, "a= and b= must be given together")),
    };
    let (p, q) = (p as usize, q as usize);

    let mut edges = Vec::new();
    let mut has_rotations = false;
    for (line, text) in it.by_ref() {
        if text == "rotations:" {
            has_rotations = true;
            break;
        }
        let mut parts = text.split_whitespace();
        let (Some(u), Some(v), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(syntax(line, format!("expected `<u> <v>`, got `{text}`")));
        };
        let u = u.parse().map_err(|_| syntax(line, format!("bad index `{u}`")))?;
        let v = v.parse().map_err(|_| syntax(line, format!("bad index `{v}`")))?;
        edges.push((u, v));
    }
    let graph = BipartiteGraph::new(p, q, edges)?;

    let embedding = if has_rotations {
        let mut a_rot: Vec<Option<Vec<usize>>> = vec![None; p];
        let mut b_rot: Vec<Option<Vec<usize>>> = vec![None; q];
        for (line, text) in it {
            let (label, list) = text
                .split_once(':')
                .ok_or_else(|| syntax(line, format!("expected `<vertex>: <neighbors>`, got `{text}`")))?;
            let label = label.trim();
            let (slot, other, other_bound) = if label.starts_with('A') {
                (&mut a_rot[parse_label(line, label, 'A', p)?], 'B', q)
            } else {
                (&mut b_rot[parse_label(line, label, 'B', q)?], 'A', p)
            };
            if slot.is_some() {
                return Err(syntax(line, format!("rotation for {label} given twice")));
            }
            *slot = Some(
                list.split_whitespace()
                    .map(|t| parse_label(line, t, other, other_bound))
                    .collect::<Result<_, _>>()?,
            );
        }
        let a_rot: Vec<Vec<usize>> = a_rot.into_iter().map(Option::unwrap_or_default).collect();
        let b_rot: Vec<Vec<usize>> = b_rot.into_iter().map(Option::unwrap_or_default).collect();
        Some(EmbeddedGraph::from_neighbors(graph.clone(), &a_rot, &b_rot)?)
    } else {
        None
    };
    Ok(Document {
        graph,
        declared_degrees,
        embedding,
    })
}

fn write_edges(out: &mut String, g: &BipartiteGraph, degrees: Option<(u64, u64)>) {
    out.push_str(EDGELIST_HEADER);
    out.push('\n');
    write!(out, "p={} q={}", g.p(), g.q()).unwrap();
    if let Some((a, b)) = degrees {
        write!(out, " a={a} b={b}").unwrap();
    }
    out.push('\n');
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
}

/// Common degree of each part, when both parts are nonempty and regular.
fn uniform_degrees(g: &BipartiteGraph) -> Option<(u64, u64)> {
    let (da, db) = g.degrees();
    let a = *da.first()?;
    let b = *db.first()?;
    (da.iter().all(|&d| d == a) && db.iter().all(|&d| d == b)).then_some((a as u64, b as u64))
}

pub fn write_edgelist(g: &BipartiteGraph) -> String {
    let mut out = String::new();
    write_edges(&mut out, g, uniform_degrees(g));
    out
}

pub fn write_embedding(g: &EmbeddedGraph) -> String {
    let mut out = String::new();
    write_edges(&mut out, g.graph(), uniform_degrees(g.graph()));
    out.push_str("rotations:\n");
    let (a_rot, b_rot) = g.neighbor_rotation();
    for (u, nbrs) in a_rot.iter().enumerate() {
        write!(out, "A{u}:").unwrap();
        for v in nbrs {
            write!(out, " B{v}").unwrap();
        }
        out.push('\n');
    }
    for (v, nbrs) in b_rot.iter().enumerate() {
        write!(out, "B{v}:").unwrap();
        for u in nbrs {
            write!(out, " A{u}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Graphviz export. Parts are colored differently; no coordinates are
/// emitted.
pub fn write_dot(g: &BipartiteGraph) -> String {
    let mut out = String::from("graph biregular {\n  node [shape=circle, style=filled];\n");
    for u in 0..g.p() {
        writeln!(out, "  A{u} [fillcolor=\"#9ecae1\"];").unwrap();
    }
    for v in 0..g.q() {
        writeln!(out, "  B{v} [fillcolor=\"#fc9272\"];").unwrap();
    }
    for &(u, v) in g.edges() {
        writeln!(out, "  A{u} -- B{v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQUARE: &str = "biregular-edgelist v1\n# a 4-cycle\np=2 q=2 a=2 b=2\n0 0\n0 1\n1 0\n1 1\nrotations:\nA0: B0 B1\nA1: B1 B0\nB0: A1 A0\nB1: A0 A1\n";

    #[test]
    fn parses_embedding() {
        let doc = parse_document(SQUARE).unwrap();
        assert_eq!(doc.graph.edge_count(), 4);
        assert_eq!(doc.declared_degrees, Some((2, 2)));
        assert!(doc.embedding.is_some());
    }

    #[test]
    fn edge_list_without_rotations() {
        let doc = parse_document("biregular-edgelist v1\np=1 q=2\n0 0\n0 1\n").unwrap();
        assert_eq!(doc.graph.edges(), &[(0, 0), (0, 1)]);
        assert!(doc.embedding.is_none());
        assert!(doc.declared_degrees.is_none());
    }

    #[test]
    fn writes_what_it_reads() {
        let doc = parse_document(SQUARE).unwrap();
        let text = write_embedding(doc.embedding.as_ref().unwrap());
        assert_eq!(parse_document(&text).unwrap(), doc);
        let plain = write_edgelist(&doc.graph);
        assert_eq!(parse_document(&plain).unwrap().graph, doc.graph);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_document(""), Err(ParseError::Syntax { .. })));
        assert!(matches!(
            parse_document("biregular-edgelist v2\np=1 q=1\n"),
            Err(ParseError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_document("biregular-edgelist v1\np=1 q=1\n0 0\n0 0\n"),
            Err(ParseError::Graph(GraphError::DuplicateEdge { u: 0, v: 0 }))
        ));
        assert!(matches!(
            parse_document("biregular-edgelist v1\np=1 q=1\n0 x\n"),
            Err(ParseError::Syntax { line: 3, .. })
        ));
        assert!(matches!(
            parse_document("biregular-edgelist v1\np=1 q=1\n0 0\nrotations:\nA0: B1\nB0: A0\n"),
            Err(ParseError::Syntax { line: 5, .. })
        ));
    }

    #[test]
    fn dot_has_both_colors() {
        let doc = parse_document(SQUARE).unwrap();
        let dot = write_dot(&doc.graph);
        assert!(dot.contains("A0 -- B1;"));
        assert!(dot.contains("#9ecae1") && dot.contains("#fc9272"));
        assert!(!dot.contains("pos="));
    }
}
