//! The graph input document.
//!
//! ```json
//! {
//!   "vertices": [{"id": "a", "x": 0.0, "y": 0.0}, {"id": "b", "x": 1.0, "y": 0.0}],
//!   "edges": [["a", "b"]],
//!   "rotation": {"a": [0], "b": [0]}
//! }
//! ```
//!
//! Coordinates are all-or-nothing. `rotation` lists edge indices around a
//! vertex in clockwise order and overrides the order read off the
//! coordinates; vertices it leaves out keep the derived (or input) order.

use std::collections::BTreeMap;

use arc3d::{Drawing2D, Graph, RotationSystem};
use serde::{Deserialize, Serialize};

use crate::error::FormatError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub vertices: Vec<VertexRecord>,
    pub edges: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotation: Option<BTreeMap<String, Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<GraphMeta>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexRecord {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<f64>,
}

/// Provenance written by the generators.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct GraphMeta {
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Exact angular resolution of the drawing, when the family has one.
    #[serde(default, skip_serializing_if = "Option::is_none", rename = "resolution2d")]
    pub resolution_2d: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub drawing: Option<Drawing2D>,
    pub rotation: Option<RotationSystem>,
    pub meta: Option<GraphMeta>,
}

impl ParsedGraph {
    /// Explicit rotation if given, otherwise the drawing's clockwise order.
    pub fn effective_rotation(&self) -> Result<Option<RotationSystem>, FormatError> {
        if let Some(rot) = &self.rotation {
            return Ok(Some(rot.clone()));
        }
        match &self.drawing {
            Some(d) => d.rotation_system(&self.graph).map(Some).map_err(|e| FormatError::validation(e.to_string())),
            None => Ok(None),
        }
    }
}

pub fn parse_graph(text: &str) -> Result<ParsedGraph, FormatError> {
    let file: GraphFile = serde_json::from_str(text)?;
    graph_from_file(&file)
}

pub fn graph_from_file(file: &GraphFile) -> Result<ParsedGraph, FormatError> {
    let invalid = |e: arc3d::GraphError| FormatError::validation(e.to_string());
    let graph = Graph::build(
        file.vertices.iter().map(|v| v.id.clone()),
        file.edges.iter().map(|[a, b]| (a.as_str(), b.as_str())),
    )
    .map_err(invalid)?;

    let with_coords = file.vertices.iter().filter(|v| v.x.is_some() || v.y.is_some()).count();
    let drawing = if with_coords == 0 {
        None
    } else {
        let mut positions = Vec::with_capacity(file.vertices.len());
        for v in &file.vertices {
            match (v.x, v.y) {
                (Some(x), Some(y)) => positions.push([x, y]),
                _ => return Err(FormatError::validation(format!("vertex `{}` is missing a coordinate", v.id))),
            }
        }
        Some(Drawing2D::new(&graph, positions).map_err(invalid)?)
    };

    let rotation = match &file.rotation {
        None => None,
        Some(map) => {
            let base = match &drawing {
                Some(d) => d.rotation_system(&graph).ok(),
                None => None,
            };
            let mut order: Vec<Vec<usize>> = (0..graph.vertex_count())
                .map(|v| base.as_ref().map_or_else(|| graph.incident(v).to_vec(), |r| r.around(v).to_vec()))
                .collect();
            for (id, edges) in map {
                let v = graph
                    .index_of(id)
                    .ok_or_else(|| FormatError::validation(format!("rotation names unknown vertex id `{id}`")))?;
                order[v] = edges.clone();
            }
            Some(RotationSystem::new(&graph, order).map_err(invalid)?)
        }
    };

    Ok(ParsedGraph { graph, drawing, rotation, meta: file.meta.clone() })
}

pub fn graph_to_file(graph: &Graph, drawing: Option<&Drawing2D>, meta: Option<GraphMeta>) -> GraphFile {
    let vertices = (0..graph.vertex_count())
        .map(|v| {
            let p = drawing.map(|d| d.position(v));
            VertexRecord { id: graph.vertex_id(v).to_string(), x: p.map(|p| p[0]), y: p.map(|p| p[1]) }
        })
        .collect();
    let edges = graph
        .edges()
        .iter()
        .map(|&(u, v)| [graph.vertex_id(u).to_string(), graph.vertex_id(v).to_string()])
        .collect();
    GraphFile { vertices, edges, rotation: None, meta }
}

pub fn emit_graph(file: &GraphFile) -> String {
    let mut s = serde_json::to_string_pretty(file).expect("graph documents serialize");
    s.push('\n');
    s
}
