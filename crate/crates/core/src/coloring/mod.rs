//! Vertex colorings, classical edge colorings, and L-localized edge colorings.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::graph::{EdgeId, Graph, RotationSystem, VertexIdx};

mod localized;
mod vizing;

pub use localized::{localized_edge_coloring, localized_greedy, localized_greedy_proper, window, verify_localized};
pub use vizing::edge_coloring_vizing;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum ColoringError {
    #[error("window size L must be even, got {0}")]
    OddL(usize),
    #[error("window size L must be at least 2, got {0}")]
    WindowTooSmall(usize),
    #[error("rotation system does not cover the graph")]
    MissingRotation,
    #[error("coloring covers {found} items, expected {expected}")]
    WrongLength { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexColoring {
    pub colors: Vec<usize>,
    pub palette_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    pub colors: Vec<usize>,
    pub palette_size: usize,
}

impl EdgeColoring {
    /// Wraps raw colors; the palette is `max + 1`.
    pub fn from_colors(colors: Vec<usize>) -> Self {
        let palette_size = colors.iter().max().map_or(0, |c| c + 1);
        EdgeColoring { colors, palette_size }
    }

    pub fn color(&self, e: EdgeId) -> usize {
        self.colors[e]
    }
}

/// Two edges meeting at `vertex` that carry the same color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct EdgeConflict {
    pub vertex: VertexIdx,
    pub first: EdgeId,
    pub second: EdgeId,
}

/// Greedy coloring in vertex input order; uses at most `max_degree + 1` colors.
pub fn greedy_vertex_coloring(graph: &Graph) -> VertexColoring {
    const NONE: usize = usize::MAX;
    let n = graph.vertex_count();
    let mut colors = alloc::vec![NONE; n];
    let mut taken = alloc::vec![NONE; graph.max_degree() + 1];
    for v in 0..n {
        for u in graph.neighbors(v) {
            let c = colors[u];
            if c != NONE && c < taken.len() {
                taken[c] = v;
            }
        }
        colors[v] = (0..).find(|&c| taken[c] != v).unwrap();
    }
    let palette_size = colors.iter().max().map_or(0, |c| c + 1);
    VertexColoring { colors, palette_size }
}

pub fn verify_vertex_coloring(graph: &Graph, coloring: &VertexColoring) -> Vec<(VertexIdx, VertexIdx)> {
    graph
        .edges()
        .iter()
        .filter(|&&(u, v)| coloring.colors[u] == coloring.colors[v])
        .copied()
        .collect()
}

/// All pairs of incident edges sharing a color. Empty iff the coloring is
/// proper. Colors outside the palette count as a conflict of an edge with
/// itself.
pub fn verify_edge_coloring(graph: &Graph, coloring: &EdgeColoring) -> Result<Vec<EdgeConflict>, ColoringError> {
    if coloring.colors.len() != graph.edge_count() {
        return Err(ColoringError::WrongLength { expected: graph.edge_count(), found: coloring.colors.len() });
    }
    let mut out = BTreeSet::new();
    for (e, &c) in coloring.colors.iter().enumerate() {
        if c >= coloring.palette_size {
            let (u, _) = graph.endpoints(e);
            out.insert(EdgeConflict { vertex: u, first: e, second: e });
        }
    }
    for v in 0..graph.vertex_count() {
        let inc = graph.incident(v);
        for (i, &e) in inc.iter().enumerate() {
            for &f in &inc[i + 1..] {
                if coloring.colors[e] == coloring.colors[f] {
                    out.insert(EdgeConflict { vertex: v, first: e.min(f), second: e.max(f) });
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

pub(crate) fn check_rotation(graph: &Graph, rot: &RotationSystem) -> Result<(), ColoringError> {
    if rot.vertex_count() != graph.vertex_count()
        || (0..graph.vertex_count()).any(|v| rot.around(v).len() != graph.degree(v))
    {
        return Err(ColoringError::MissingRotation);
    }
    Ok(())
}
