use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_2;

use super::{angle_schedule, check_drawing, default_window, LayoutError};
use crate::coloring::{edge_coloring_vizing, localized_edge_coloring, EdgeColoring};
use crate::diagram::{ArcDiagram3D, LayoutMethod};
use crate::geometry::{CircularArc, Side, Vec3};
use crate::graph::{Drawing2D, Graph, RotationSystem};

fn lift(drawing: &Drawing2D) -> Vec<Vec3> {
    drawing.positions().iter().map(|p| Vec3::new(p[0], p[1], 0.0)).collect()
}

fn perpendicular(
    graph: &Graph,
    drawing: &Drawing2D,
    coloring: EdgeColoring,
    method: LayoutMethod,
) -> Result<ArcDiagram3D, LayoutError> {
    let positions = lift(drawing);
    let schedule = angle_schedule(coloring.palette_size);
    let arcs = graph
        .edges()
        .iter()
        .zip(&coloring.colors)
        .map(|(&(u, v), &c)| CircularArc::new(positions[u], positions[v], schedule[c], FRAC_PI_2, Side::Positive))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ArcDiagram3D::new(graph.clone(), positions, arcs, method, coloring.colors, coloring.palette_size)?)
}

/// Keeps the drawing's vertex positions and lifts every edge to a
/// perpendicular arc whose in-plane angle is set by a proper edge coloring
/// with `c <= d + 1` colors. Any two incident arcs differ in angle by at
/// least `π / (4(c-1))`, whatever the drawing's own resolution.
pub fn stationary_layout(graph: &Graph, drawing: &Drawing2D) -> Result<ArcDiagram3D, LayoutError> {
    check_drawing(graph, drawing)?;
    let coloring = edge_coloring_vizing(graph);
    perpendicular(graph, drawing, coloring, LayoutMethod::Stationary)
}

/// Like [`stationary_layout`] but colors with an L-localized coloring
/// (`c <= min(d, 2L) + 1`). Equal colors only meet outside each other's
/// windows, where the drawing already separates them. `window` defaults to
/// [`default_window`] of the maximum degree.
pub fn free_layout(graph: &Graph, drawing: &Drawing2D, window: Option<usize>) -> Result<ArcDiagram3D, LayoutError> {
    check_drawing(graph, drawing)?;
    let rot = drawing.rotation_system(graph).map_err(LayoutError::ZeroResolutionDrawing)?;
    free_layout_with_rotation(graph, drawing, &rot, window)
}

/// [`free_layout`] with the windows taken from `rot` instead of the
/// drawing's own clockwise order.
pub fn free_layout_with_rotation(
    graph: &Graph,
    drawing: &Drawing2D,
    rot: &RotationSystem,
    window: Option<usize>,
) -> Result<ArcDiagram3D, LayoutError> {
    check_drawing(graph, drawing)?;
    let window = window.unwrap_or_else(|| default_window(graph.max_degree()));
    let coloring = localized_edge_coloring(graph, rot, window)?;
    perpendicular(graph, drawing, coloring, LayoutMethod::Free { window })
}
