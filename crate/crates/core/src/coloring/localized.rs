//! L-localized edge coloring.
//!
//! Around each endpoint `u` of an edge `e`, the L-neighborhood of `e` is the
//! `L/2` edges before and the `L/2` edges after `e` in the clockwise rotation
//! at `u`, wrapping cyclically. When `degree(u) - 1 <= L` the window simply
//! holds every other edge at `u`. A coloring is L-localized when no edge
//! shares its color with an edge in either of its two neighborhoods.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{check_rotation, edge_coloring_vizing, ColoringError, EdgeColoring, EdgeConflict};
use crate::graph::{EdgeId, Graph, RotationSystem, VertexIdx};

const NONE: usize = usize::MAX;

fn check_window(l: usize) -> Result<usize, ColoringError> {
    if l % 2 == 1 {
        return Err(ColoringError::OddL(l));
    }
    if l < 2 {
        return Err(ColoringError::WindowTooSmall(l));
    }
    Ok(l / 2)
}

/// Edges in the L-neighborhood of `e` around its endpoint `v`.
pub fn window<'a>(
    graph: &Graph,
    rot: &'a RotationSystem,
    e: EdgeId,
    v: VertexIdx,
    l: usize,
) -> impl Iterator<Item = EdgeId> + 'a {
    let cyc = rot.around(v);
    let k = cyc.len();
    let i = rot.position(graph, e, v);
    let half = l / 2;
    let all = k <= l + 1;
    let count = if all { k.saturating_sub(1) } else { 2 * half };
    (1..=count).map(move |j| {
        let offset = if all || j <= half { j } else { k - (j - half) };
        cyc[(i + offset) % k]
    })
}

/// The greedy from the definition: edges in input order, each gets the
/// smallest color absent from both of its L-neighborhoods. Uses at most
/// `2L + 1` colors and `O(mL)` time. The result need not be a proper edge
/// coloring when some vertex has degree above `L + 1`.
pub fn localized_greedy(graph: &Graph, rot: &RotationSystem, l: usize) -> Result<EdgeColoring, ColoringError> {
    check_window(l)?;
    check_rotation(graph, rot)?;
    let mut colors = alloc::vec![NONE; graph.edge_count()];
    let mut stamp = alloc::vec![NONE; 2 * l + 1];
    for e in 0..graph.edge_count() {
        let (u, v) = graph.endpoints(e);
        for f in window(graph, rot, e, u, l).chain(window(graph, rot, e, v, l)) {
            let c = colors[f];
            if c != NONE {
                stamp[c] = e;
            }
        }
        colors[e] = (0..).find(|&c| stamp[c] != e).unwrap();
    }
    Ok(EdgeColoring::from_colors(colors))
}

/// Greedy that avoids the colors of every incident edge, so the result is
/// both proper and L-localized for any `L`. At most `2d - 1` colors.
pub fn localized_greedy_proper(graph: &Graph, rot: &RotationSystem, l: usize) -> Result<EdgeColoring, ColoringError> {
    check_window(l)?;
    check_rotation(graph, rot)?;
    let mut colors = alloc::vec![NONE; graph.edge_count()];
    let mut stamp = alloc::vec![NONE; 2 * graph.max_degree() + 1];
    for e in 0..graph.edge_count() {
        let (u, v) = graph.endpoints(e);
        for &f in graph.incident(u).iter().chain(graph.incident(v)) {
            let c = colors[f];
            if c != NONE {
                stamp[c] = e;
            }
        }
        colors[e] = (0..).find(|&c| stamp[c] != e).unwrap();
    }
    Ok(EdgeColoring::from_colors(colors))
}

/// L-localized edge coloring with at most `min(d, 2L) + 1` colors: the
/// smaller of [`localized_greedy`] (`<= 2L + 1`) and a Vizing coloring
/// (`<= d + 1`, localized for every `L` because it is proper). Ties go to the
/// proper coloring.
pub fn localized_edge_coloring(graph: &Graph, rot: &RotationSystem, l: usize) -> Result<EdgeColoring, ColoringError> {
    let greedy = localized_greedy(graph, rot, l)?;
    let proper = edge_coloring_vizing(graph);
    Ok(if greedy.palette_size < proper.palette_size { greedy } else { proper })
}

/// Every same-colored pair that violates the localized condition, reported
/// at the vertex whose window is violated.
pub fn verify_localized(
    graph: &Graph,
    rot: &RotationSystem,
    l: usize,
    coloring: &EdgeColoring,
) -> Result<Vec<EdgeConflict>, ColoringError> {
    check_window(l)?;
    check_rotation(graph, rot)?;
    if coloring.colors.len() != graph.edge_count() {
        return Err(ColoringError::WrongLength { expected: graph.edge_count(), found: coloring.colors.len() });
    }
    let mut out = BTreeSet::new();
    for e in 0..graph.edge_count() {
        let (u, v) = graph.endpoints(e);
        for w in [u, v] {
            for f in window(graph, rot, e, w, l) {
                if coloring.colors[f] == coloring.colors[e] {
                    out.insert(EdgeConflict { vertex: w, first: e.min(f), second: e.max(f) });
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}
