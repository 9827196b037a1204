//! JSON graph and complex files.
//!
//! A graph file is `{"vertices": [..], "edges": [[a, b], ..]}`; a complex file
//! is `{"facets": [[..], ..]}`.

use serde::{Deserialize, Serialize};

use crate::complex::{clique_complex, complex_from_facets, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub vertices: Vec<i64>,
    pub edges: Vec<(i64, i64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub facets: Vec<Vec<i64>>,
}

fn parse_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| {
        let full = e.to_string();
        // serde_json appends the position, which the error already carries
        let message = full.rsplit_once(" at line ").map_or(full.as_str(), |(m, _)| m).to_string();
        Error::Parse { line: e.line(), column: e.column(), message }
    })
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let f: GraphFile = parse_json(text)?;
    Graph::new(f.vertices, &f.edges)
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let f: ComplexFile = parse_json(text)?;
    complex_from_facets(&f.facets)
}

pub fn graph_file(g: &Graph) -> GraphFile {
    GraphFile { vertices: g.vertices().to_vec(), edges: g.edges() }
}

/// Compact JSON with one edge per element, terminated by a newline.
pub fn write_graph(g: &Graph) -> String {
    let mut s = serde_json::to_string(&graph_file(g)).expect("graph serializes");
    s.push('\n');
    s
}

pub fn write_complex(c: &SimplicialComplex) -> String {
    let facets = c.facets().iter().map(|s| s.vertices().to_vec()).collect();
    let mut s = serde_json::to_string(&ComplexFile { facets }).expect("complex serializes");
    s.push('\n');
    s
}

/// Either input kind, viewed as a simplicial complex when needed.
#[derive(Clone, Debug)]
pub enum Input {
    Graph(Graph),
    Complex(SimplicialComplex),
}

impl Input {
    pub fn complex(&self) -> SimplicialComplex {
        match self {
            Input::Graph(g) => clique_complex(g),
            Input::Complex(c) => c.clone(),
        }
    }

    /// The graph itself, or the 1-skeleton of a complex.
    pub fn graph(&self) -> Graph {
        match self {
            Input::Graph(g) => g.clone(),
            Input::Complex(c) => c.skeleton_graph(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::cross_polytope;

    #[test]
    fn round_trip() {
        let g = cross_polytope(2);
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
        let c = clique_complex(&g);
        assert_eq!(parse_complex(&write_complex(&c)).unwrap(), c);
    }

    #[test]
    fn parse_errors_carry_position() {
        match parse_graph("{\n  \"vertices\": [0, 1],\n  \"edges\": [[0, ]]\n}") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected a parse error, got {other:?}"),
        }
        assert!(matches!(parse_graph("{\"vertices\": [0], \"edges\": [[0, 5]]}"), Err(Error::UnknownVertex(5))));
        assert!(matches!(parse_complex("{\"facets\": 3}"), Err(Error::Parse { line: 1, .. })));
    }
}
