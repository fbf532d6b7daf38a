use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{GradedGraph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: String,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub a: String,
    pub b: String,
    pub m: u64,
}

/// `{"vertices":[{"id":..,"rank":..}],"edges":[{"a":..,"b":..,"m":..}]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<EdgeJson>,
}

impl GradedGraph {
    pub fn to_json_value(&self) -> GraphJson {
        GraphJson {
            vertices: (0..self.vertex_count())
                .map(|v| VertexJson {
                    id: self.label(v).to_string(),
                    rank: self.rank_of(v),
                })
                .collect(),
            edges: self
                .edges()
                .map(|(lo, hi, m)| EdgeJson {
                    a: self.label(lo).to_string(),
                    b: self.label(hi).to_string(),
                    m,
                })
                .collect(),
        }
    }

    pub fn from_json_value(json: &GraphJson) -> Result<Self, GraphError> {
        let vertices: Vec<(&str, usize)> = json
            .vertices
            .iter()
            .map(|v| (v.id.as_str(), v.rank))
            .collect();
        let edges: Vec<(&str, &str, u64)> = json
            .edges
            .iter()
            .map(|e| (e.a.as_str(), e.b.as_str(), e.m))
            .collect();
        GradedGraph::build(&vertices, &edges)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("graph JSON serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        let json: GraphJson =
            serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
        GradedGraph::from_json_value(&json)
    }

    /// Graphviz rendering: one `rank=same` subgraph per rank, edge labels only
    /// for multiplicities above one.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph graded {\n  rankdir=BT;\n");
        for n in 0..=self.max_rank() {
            let _ = write!(out, "  subgraph rank_{n} {{\n    rank=same;\n");
            for &v in self.rank(n) {
                let _ = writeln!(out, "    {};", quote(self.label(v)));
            }
            out.push_str("  }\n");
        }
        for (lo, hi, m) in self.edges() {
            let _ = write!(out, "  {} -- {}", quote(self.label(lo)), quote(self.label(hi)));
            if m > 1 {
                let _ = write!(out, " [label=\"{m}\"]");
            }
            out.push_str(";\n");
        }
        out.push_str("}\n");
        out
    }
}

fn quote(label: &str) -> String {
    format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
}
