//! Edge-list input format:
//!
//! ```text
//! # comment
//! v <label> <A|B|C>
//! e <label> <label>
//! ```
//!
//! Vertices must be declared before edges that use them. Blank lines and
//! `#` comments (whole-line or trailing) are ignored.

use std::collections::HashMap;

use thiserror::Error;

use super::{Color, ColoredGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseGraphError {
    pub line: usize,
    pub kind: ParseGraphErrorKind,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseGraphErrorKind {
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown color {0:?}")]
    UnknownColor(String),
    #[error("edge endpoint {0:?} was not declared")]
    UndeclaredEndpoint(String),
    #[error("self-loop at {0:?}")]
    SelfLoop(String),
    #[error("duplicate edge {0:?}-{1:?}")]
    DuplicateEdge(String, String),
    #[error("malformed line: {0:?}")]
    Syntax(String),
}

pub fn parse_graph(text: &str) -> Result<ColoredGraph, ParseGraphError> {
    let mut graph = ColoredGraph::new();
    let mut by_label: HashMap<String, usize> = HashMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |kind| ParseGraphError { line, kind };
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        match fields.as_slice() {
            ["v", label, color] => {
                let color = match color.chars().collect::<Vec<_>>().as_slice() {
                    [c] => Color::from_char(*c),
                    _ => None,
                }
                .ok_or_else(|| err(ParseGraphErrorKind::UnknownColor(color.to_string())))?;
                if by_label.contains_key(*label) {
                    return Err(err(ParseGraphErrorKind::DuplicateLabel(label.to_string())));
                }
                let v = graph
                    .add_vertex(color, *label)
                    .map_err(|_| err(ParseGraphErrorKind::DuplicateLabel(label.to_string())))?;
                by_label.insert(label.to_string(), v);
            }
            ["e", a, b] => {
                let lookup = |l: &str| {
                    by_label.get(l).copied().ok_or_else(|| err(ParseGraphErrorKind::UndeclaredEndpoint(l.to_string())))
                };
                let (u, v) = (lookup(a)?, lookup(b)?);
                if u == v {
                    return Err(err(ParseGraphErrorKind::SelfLoop(a.to_string())));
                }
                if graph.has_edge(u, v) {
                    return Err(err(ParseGraphErrorKind::DuplicateEdge(a.to_string(), b.to_string())));
                }
                graph.add_edge(u, v).expect("checked simple edge");
            }
            _ => return Err(err(ParseGraphErrorKind::Syntax(content.to_string()))),
        }
    }
    Ok(graph)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kind(text: &str) -> (usize, ParseGraphErrorKind) {
        let e = parse_graph(text).unwrap_err();
        (e.line, e.kind)
    }

    #[test]
    fn parses_k2() {
        let g = parse_graph("v 1 A\nv 2 B\ne 1 2").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.colors(), &[Color::A, Color::B]);
        assert!(g.has_edge(0, 1));
        assert_eq!(g.label(1), "2");
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_graph("# header\n\nv a C # center\nv b C\n  \ne a b # edge\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(kind("v 1 A\ne 1 1"), (2, ParseGraphErrorKind::SelfLoop("1".into())));
        assert_eq!(kind("v 1 A\nv 1 B"), (2, ParseGraphErrorKind::DuplicateLabel("1".into())));
        assert_eq!(kind("v 1 D"), (1, ParseGraphErrorKind::UnknownColor("D".into())));
        assert_eq!(kind("v 1 A\ne 1 2"), (2, ParseGraphErrorKind::UndeclaredEndpoint("2".into())));
        assert_eq!(kind("v 1 A\nv 2 A\ne 1 2\ne 2 1"), (4, ParseGraphErrorKind::DuplicateEdge("2".into(), "1".into())));
        assert_eq!(kind("x 1 2"), (1, ParseGraphErrorKind::Syntax("x 1 2".into())));
    }
}
