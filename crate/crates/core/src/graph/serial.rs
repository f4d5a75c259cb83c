use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{ResolutionGraph, Vertex};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct VertexSpec {
    selfint: i64,
    genus: u64,
}

/// The canonical JSON shape of a graph.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphSpec {
    vertices: Vec<VertexSpec>,
    edges: Vec<[usize; 2]>,
    central: Option<usize>,
}

impl From<&ResolutionGraph> for GraphSpec {
    fn from(g: &ResolutionGraph) -> Self {
        GraphSpec {
            vertices: g
                .vertices()
                .iter()
                .map(|v| VertexSpec {
                    selfint: v.selfint,
                    genus: v.genus,
                })
                .collect(),
            edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
            central: g.central(),
        }
    }
}

impl GraphSpec {
    pub fn build(self) -> Result<ResolutionGraph> {
        ResolutionGraph::new(
            self.vertices
                .into_iter()
                .map(|v| Vertex::new(v.selfint, v.genus))
                .collect(),
            self.edges.into_iter().map(|[a, b]| (a, b)).collect(),
            self.central,
        )
    }
}

impl ResolutionGraph {
    /// Compact canonical JSON: vertices in id order, edges as sorted `[a, b]`
    /// pairs with `a < b`, `central` id or `null`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphSpec::from(self)).expect("graph serialization cannot fail")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(GraphSpec::from(self)).expect("graph serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: GraphSpec = serde_json::from_str(text)
            .map_err(|e| Error::InvalidInput(format!("graph JSON: {e}")))?;
        spec.build()
    }

    pub fn from_json_value(value: &serde_json::Value) -> Result<Self> {
        let spec: GraphSpec = serde_json::from_value(value.clone())
            .map_err(|e| Error::InvalidInput(format!("graph JSON: {e}")))?;
        spec.build()
    }

    /// Graphviz rendering; genus is shown in brackets when positive.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph resolution {\n  node [shape=circle];\n");
        for (i, v) in self.vertices().iter().enumerate() {
            let mut label = v.selfint.to_string();
            if v.genus > 0 {
                write!(label, " [{}]", v.genus).unwrap();
            }
            let style = if self.central() == Some(i) {
                ", style=bold"
            } else {
                ""
            };
            writeln!(out, "  v{i} [label=\"{label}\"{style}];").unwrap();
        }
        for &(a, b) in self.edges() {
            writeln!(out, "  v{a} -- v{b};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}
