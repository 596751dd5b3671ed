//! Graph file format: `{"n": 3, "edges": [[0, 1], [0, 2]]}` with 0-based
//! vertices. Serialized edges always have `u < v` and are sorted.

use std::collections::BTreeSet;
use std::fmt;

use laplaceq_core::Graph;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    SelfLoop { vertex: usize },
    VertexOutOfRange { vertex: usize, n: usize },
    DuplicateEdge { u: usize, v: usize },
}

/// Where the problem is: a line/column for malformed JSON, the edge index
/// for well-formed JSON describing an invalid graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Position {
    Text { line: usize, column: usize },
    Edge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct GraphParseError {
    pub kind: ParseErrorKind,
    pub position: Position,
}

impl fmt::Display for GraphParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.position {
            Position::Text { line, column } => write!(f, "line {line} column {column}: ")?,
            Position::Edge(i) => write!(f, "edges[{i}]: ")?,
        }
        match &self.kind {
            ParseErrorKind::Syntax(msg) => write!(f, "{msg}"),
            ParseErrorKind::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            ParseErrorKind::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for n = {n}")
            }
            ParseErrorKind::DuplicateEdge { u, v } => write!(f, "duplicate edge ({u},{v})"),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

pub fn parse_graph(text: &str) -> Result<Graph, GraphParseError> {
    let raw: RawGraph = serde_json::from_str(text).map_err(|e| GraphParseError {
        kind: ParseErrorKind::Syntax(strip_position(&e)),
        position: Position::Text {
            line: e.line(),
            column: e.column(),
        },
    })?;
    let mut seen = BTreeSet::new();
    for (i, &[u, v]) in raw.edges.iter().enumerate() {
        let fail = |kind| GraphParseError {
            kind,
            position: Position::Edge(i),
        };
        if let Some(&vertex) = [u, v].iter().find(|&&x| x >= raw.n) {
            return Err(fail(ParseErrorKind::VertexOutOfRange { vertex, n: raw.n }));
        }
        if u == v {
            return Err(fail(ParseErrorKind::SelfLoop { vertex: u }));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(fail(ParseErrorKind::DuplicateEdge { u, v }));
        }
    }
    Ok(Graph::from_edges(raw.n, seen).expect("edges validated above"))
}

// serde_json appends " at line L column C"; the position is reported separately
fn strip_position(e: &serde_json::Error) -> String {
    let msg = e.to_string();
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg,
    }
}

pub fn graph_to_value(g: &Graph) -> Value {
    let edges: Vec<[usize; 2]> = g.edges().map(|(u, v)| [u, v]).collect();
    json!({ "n": g.order(), "edges": edges })
}

#[derive(Serialize)]
struct OutGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

/// Compact single-line form, `n` first.
pub fn serialize_graph(g: &Graph) -> String {
    let out = OutGraph {
        n: g.order(),
        edges: g.edges().map(|(u, v)| [u, v]).collect(),
    };
    serde_json::to_string(&out).expect("plain struct serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use laplaceq_core::graph::star;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let k2 = parse_graph(r#"{"n":2,"edges":[[0,1]]}"#).unwrap();
        assert_eq!(k2, Graph::from_edges(2, [(0, 1)]).unwrap());
        assert_eq!(serialize_graph(&star(3).unwrap()), r#"{"n":3,"edges":[[0,1],[0,2]]}"#);
        let err = parse_graph(r#"{"n":3,"edges":[[0,0]]}"#).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::SelfLoop { vertex: 0 });
        assert_eq!(err.position, Position::Edge(0));
    }

    #[test]
    fn reversed_edges_normalized() {
        let g = parse_graph(r#"{"n":3,"edges":[[2,0],[1,0]]}"#).unwrap();
        assert_eq!(g, star(3).unwrap());
    }

    #[test]
    fn semantic_errors() {
        let e = parse_graph(r#"{"n":3,"edges":[[0,1],[1,0]]}"#).unwrap_err();
        assert_eq!(e.position, Position::Edge(1));
        assert!(matches!(e.kind, ParseErrorKind::DuplicateEdge { .. }));
        let e = parse_graph(r#"{"n":3,"edges":[[0,3]]}"#).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::VertexOutOfRange { vertex: 3, n: 3 });
    }

    #[test]
    fn syntax_errors_have_line_and_column() {
        for bad in [
            "{\"n\":3,\n\"edges\":[[0,1]",
            "{\"n\":-1,\"edges\":[]}",
            "{\"n\":3,\"edges\":[[0,1,2]]}",
            "{\"n\":3}",
            "{\"n\":3,\"edges\":[],\"hub\":0}",
            "",
        ] {
            let e = parse_graph(bad).unwrap_err();
            assert!(matches!(e.kind, ParseErrorKind::Syntax(_)), "{bad}");
            assert!(matches!(e.position, Position::Text { .. }));
        }
        let e = parse_graph("{\"n\":3,\n\"edges\":[[0,1]").unwrap_err();
        assert_eq!(e.position, Position::Text { line: 2, column: 14 });
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..12).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let len = pairs.len();
            proptest::collection::vec(any::<bool>(), len).prop_map(move |mask| {
                let edges = pairs.iter().zip(&mask).filter(|(_, &keep)| keep).map(|(&e, _)| e);
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn round_trip(g in arb_graph()) {
            let text = serialize_graph(&g);
            prop_assert_eq!(parse_graph(&text).unwrap(), g.clone());
            let pretty = serde_json::to_string_pretty(&graph_to_value(&g)).unwrap();
            prop_assert_eq!(parse_graph(&pretty).unwrap(), parse_graph(&text).unwrap());
        }
    }
}
