use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_4;

use super::{check_drawing, LayoutError};
use crate::coloring::{edge_coloring_vizing, verify_edge_coloring, EdgeColoring};
use crate::diagram::{ArcDiagram3D, LayoutMethod, SlantedInterpretation};
use crate::geometry::{CircularArc, Side, Vec3};
use crate::graph::{Drawing2D, Graph};
use crate::math;

/// One slanted "color": the arc plane's tilt against the base plane and the
/// arc's in-plane tangent angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlantedColor {
    pub plane_tilt: f64,
    pub in_plane_angle: f64,
}

/// Number of uniformly spaced angles in `[0, π/4]` used for maximum degree
/// `d`: `⌈√d⌉ + 1`. Under [`SlantedInterpretation::Elevation`] only pairs
/// with elevation at most the tilt are realizable, so the count grows until
/// `levels·(levels+1)/2 >= d + 1`.
pub fn slanted_levels(d: usize, interpretation: SlantedInterpretation) -> usize {
    let base = math::ceil(math::sqrt(d as f64)) as usize + 1;
    match interpretation {
        SlantedInterpretation::InPlane => base,
        SlantedInterpretation::Elevation => {
            let mut t = base;
            while t * (t + 1) / 2 < d + 1 {
                t += 1;
            }
            t
        }
    }
}

fn uniform_angles(levels: usize) -> Vec<f64> {
    if levels <= 1 {
        return alloc::vec![0.0];
    }
    (0..levels).map(|i| i as f64 * FRAC_PI_4 / (levels - 1) as f64).collect()
}

/// Palette for maximum degree `d`, ordered by (tilt, second angle).
///
/// With `InPlane` every pair of angles is a color and the second angle is the
/// in-plane tangent angle. With `Elevation` the second angle is the tangent's
/// elevation above the base plane, converted to the in-plane angle
/// `asin(sin ε / sin τ)`; pairs with elevation above the tilt are dropped.
pub fn slanted_palette(d: usize, interpretation: SlantedInterpretation) -> Vec<SlantedColor> {
    let angles = uniform_angles(slanted_levels(d, interpretation));
    let mut out = Vec::new();
    for &tilt in &angles {
        for &second in &angles {
            match interpretation {
                SlantedInterpretation::InPlane => out.push(SlantedColor { plane_tilt: tilt, in_plane_angle: second }),
                SlantedInterpretation::Elevation if second <= tilt => {
                    let in_plane = if tilt == 0.0 {
                        0.0
                    } else {
                        math::asin((math::sin(second) / math::sin(tilt)).min(1.0))
                    };
                    out.push(SlantedColor { plane_tilt: tilt, in_plane_angle: in_plane });
                }
                SlantedInterpretation::Elevation => {}
            }
        }
    }
    out
}

/// Keeps the drawing's vertex positions; every edge becomes an arc in a
/// plane tilted about its chord, with (tilt, angle) taken from a proper
/// edge coloring over [`slanted_palette`].
pub fn slanted_layout(
    graph: &Graph,
    drawing: &Drawing2D,
    interpretation: SlantedInterpretation,
    side: Side,
) -> Result<ArcDiagram3D, LayoutError> {
    check_drawing(graph, drawing)?;
    let palette = slanted_palette(graph.max_degree(), interpretation);
    let coloring = edge_coloring_vizing(graph);
    let levels = slanted_levels(graph.max_degree(), interpretation);
    build(graph, drawing, &palette, coloring, interpretation, levels, side)
}

/// Slanted layout from a caller-supplied proper coloring and palette. The
/// coloring is checked for properness.
pub fn slanted_layout_with_colors(
    graph: &Graph,
    drawing: &Drawing2D,
    palette: &[SlantedColor],
    coloring: &EdgeColoring,
    interpretation: SlantedInterpretation,
    side: Side,
) -> Result<ArcDiagram3D, LayoutError> {
    check_drawing(graph, drawing)?;
    if let Some(&conflict) = verify_edge_coloring(graph, coloring)?.first() {
        return Err(LayoutError::ImproperColoring(conflict));
    }
    let mut distinct: Vec<f64> = palette.iter().flat_map(|c| [c.plane_tilt, c.in_plane_angle]).collect();
    distinct.sort_by(f64::total_cmp);
    distinct.dedup();
    build(graph, drawing, palette, coloring.clone(), interpretation, distinct.len().max(1), side)
}

fn build(
    graph: &Graph,
    drawing: &Drawing2D,
    palette: &[SlantedColor],
    coloring: EdgeColoring,
    interpretation: SlantedInterpretation,
    levels: usize,
    side: Side,
) -> Result<ArcDiagram3D, LayoutError> {
    if coloring.palette_size > palette.len() {
        return Err(LayoutError::PaletteTooSmall { palette: palette.len(), colors: coloring.palette_size });
    }
    let positions: Vec<Vec3> = drawing.positions().iter().map(|p| Vec3::new(p[0], p[1], 0.0)).collect();
    let arcs = graph
        .edges()
        .iter()
        .zip(&coloring.colors)
        .map(|(&(u, v), &c)| {
            let color = palette[c];
            CircularArc::new(positions[u], positions[v], color.in_plane_angle, color.plane_tilt, side)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ArcDiagram3D::new(
        graph.clone(),
        positions,
        arcs,
        LayoutMethod::Slanted { interpretation, levels },
        coloring.colors,
        palette.len(),
    )?)
}
