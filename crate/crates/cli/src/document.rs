//! Plain-text graph documents.
//!
//! Edge lists:
//!
//! ```text
//! # comment
//! graph 4
//! name 0 alice
//! 0 1
//! 2 3
//! ```
//!
//! Orientations use `digraph <n>` and `u -> v` lines. Blank lines and lines
//! starting with `#` are ignored by both parsers.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use primorient::{Adjacency, Graph, OrientedGraph, Vertex};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// Non-blank, non-comment lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    keyword: &str,
) -> Result<usize, ParseError> {
    let Some((line, text)) = lines.next() else {
        return err(1, format!("missing '{keyword} <n>' header"));
    };
    let mut tokens = text.split_whitespace();
    match (tokens.next(), tokens.next(), tokens.next()) {
        (Some(k), Some(n), None) if k == keyword => n
            .parse()
            .or_else(|_| err(line, format!("invalid vertex count '{n}'"))),
        _ => err(line, format!("expected '{keyword} <n>' header")),
    }
}

fn parse_vertex(line: usize, token: &str, order: usize) -> Result<Vertex, ParseError> {
    let v: Vertex = token
        .parse()
        .or_else(|_| err(line, format!("invalid vertex id '{token}'")))?;
    if v >= order {
        return err(line, format!("vertex {v} out of range (n = {order})"));
    }
    Ok(v)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeListDocument {
    pub graph: Graph,
    pub names: BTreeMap<Vertex, String>,
}

impl EdgeListDocument {
    pub fn new(graph: Graph) -> Self {
        EdgeListDocument {
            graph,
            names: BTreeMap::new(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = content_lines(text);
        let order = parse_header(&mut lines, "graph")?;
        let mut graph = Graph::new(order);
        let mut names = BTreeMap::new();
        for (line, text) in lines {
            let tokens: Vec<&str> = text.split_whitespace().collect();
            match tokens.as_slice() {
                ["name", id, ..] => {
                    let v = parse_vertex(line, id, order)?;
                    let label = text
                        .splitn(3, char::is_whitespace)
                        .nth(2)
                        .map(str::trim)
                        .unwrap_or("");
                    if label.is_empty() {
                        return err(line, "missing label");
                    }
                    if names.insert(v, label.to_string()).is_some() {
                        return err(line, format!("vertex {v} named twice"));
                    }
                }
                [u, v] => {
                    let u = parse_vertex(line, u, order)?;
                    let v = parse_vertex(line, v, order)?;
                    graph.add_edge(u, v).or_else(|e| err(line, e.to_string()))?;
                }
                _ => {
                    return err(
                        line,
                        format!("expected 'u v' or 'name <id> <label>', got '{text}'"),
                    )
                }
            }
        }
        Ok(EdgeListDocument { graph, names })
    }

    pub fn label(&self, v: Vertex) -> String {
        self.names.get(&v).cloned().unwrap_or_else(|| v.to_string())
    }
}

impl std::fmt::Display for EdgeListDocument {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "graph {}", self.graph.order())?;
        for (id, label) in &self.names {
            writeln!(f, "name {id} {label}")?;
        }
        for (u, v) in self.graph.edges() {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientationDocument {
    pub orientation: OrientedGraph,
}

impl OrientationDocument {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = content_lines(text);
        let order = parse_header(&mut lines, "digraph")?;
        let mut orientation = OrientedGraph::new(order);
        for (line, text) in lines {
            let tokens: Vec<&str> = text.split_whitespace().collect();
            let [u, "->", v] = tokens.as_slice() else {
                return err(line, format!("expected 'u -> v', got '{text}'"));
            };
            let u = parse_vertex(line, u, order)?;
            let v = parse_vertex(line, v, order)?;
            orientation
                .add_arc(u, v)
                .or_else(|e| err(line, e.to_string()))?;
        }
        Ok(OrientationDocument { orientation })
    }
}

impl std::fmt::Display for OrientationDocument {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "digraph {}", self.orientation.order())?;
        for (u, v) in self.orientation.arcs() {
            writeln!(f, "{u} -> {v}")?;
        }
        Ok(())
    }
}

fn dot_escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz rendering of an orientation, labeling vertices from `names`.
pub fn to_dot(o: &OrientedGraph, names: &BTreeMap<Vertex, String>) -> String {
    let mut out = String::from("digraph G {\n");
    for v in 0..o.order() {
        match names.get(&v) {
            Some(label) => writeln!(out, "  {v} [label=\"{}\"];", dot_escape(label)),
            None => writeln!(out, "  {v};"),
        }
        .unwrap();
    }
    for (u, v) in o.arcs() {
        writeln!(out, "  {u} -> {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_edge_list_with_names_and_comments() {
        let doc = EdgeListDocument::parse("# a path\ngraph 3\nname 1 middle vertex\n0 1\n\n1 2\n")
            .unwrap();
        assert_eq!(doc.graph.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(doc.label(1), "middle vertex");
        assert_eq!(doc.label(2), "2");
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        let cases = [
            ("", 1),
            ("graph x\n", 1),
            ("digraph 3\n", 1),
            ("graph 3\n0 1\n0 3\n", 3),
            ("graph 3\n0 1\n1 0\n", 3),
            ("graph 3\n\n1 1\n", 3),
            ("graph 3\n0 1 2\n", 2),
            ("graph 3\nname 0 a\nname 0 b\n", 3),
            ("graph 3\nname 0\n", 2),
        ];
        for (text, line) in cases {
            let e = EdgeListDocument::parse(text).unwrap_err();
            assert_eq!(e.line, line, "{text:?}: {e}");
        }
    }

    #[test]
    fn prints_edge_list() {
        let g = Graph::from_edges(4, [(2, 3), (0, 1), (0, 3)]).unwrap();
        let mut doc = EdgeListDocument::new(g);
        doc.names.insert(2, "c".into());
        assert_eq!(doc.to_string(), "graph 4\nname 2 c\n0 1\n0 3\n2 3\n");
    }

    #[test]
    fn orientation_document() {
        let doc = OrientationDocument::parse("digraph 3\n0 -> 1\n# c\n2 -> 1\n").unwrap();
        assert_eq!(doc.to_string(), "digraph 3\n0 -> 1\n2 -> 1\n");
        assert_eq!(
            OrientationDocument::parse("digraph 3\n0 -> 1\n1 -> 0\n")
                .unwrap_err()
                .line,
            3
        );
        assert_eq!(
            OrientationDocument::parse("digraph 3\n0 1\n")
                .unwrap_err()
                .line,
            2
        );
    }

    #[test]
    fn dot_output() {
        let o = OrientedGraph::from_arcs(2, [(1, 0)]).unwrap();
        let mut names = BTreeMap::new();
        names.insert(0, "a \"b\"".to_string());
        assert_eq!(
            to_dot(&o, &names),
            "digraph G {\n  0 [label=\"a \\\"b\\\"\"];\n  1;\n  1 -> 0;\n}\n"
        );
    }
}
