//! The four layout constructions and the resolution certifier.
//!
//! | method       | vertices            | arcs                         | coloring               |
//! |--------------|---------------------|------------------------------|------------------------|
//! | `sphere`     | unit sphere         | straight chords              | vertex coloring of G²  |
//! | `stationary` | given 2D drawing    | perpendicular, angle schedule| proper edge coloring   |
//! | `slanted`    | given 2D drawing    | tilted planes, (tilt, angle) | proper edge coloring   |
//! | `free`       | given 2D drawing    | perpendicular, angle schedule| L-localized coloring   |

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::coloring::{ColoringError, EdgeConflict};
use crate::diagram::DiagramError;
use crate::geometry::GeometryError;
use crate::graph::{Drawing2D, Graph, GraphError};
use crate::math;

mod certify;
mod planar;
mod slanted;
mod sphere;

pub use certify::{angular_resolution_3d, bound_checks, guarantee_check, BoundCheck, BoundKind, ResolutionReport};
pub use planar::{free_layout, free_layout_with_rotation, stationary_layout};
pub use slanted::{slanted_layout, slanted_layout_with_colors, slanted_levels, slanted_palette, SlantedColor};
pub use sphere::{cluster_positions, min_pairwise_distance, sphere_layout, SphereParams};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LayoutError {
    #[error("invalid drawing: {0}")]
    InvalidDrawing(GraphError),
    #[error("drawing has zero angular resolution: {0}")]
    ZeroResolutionDrawing(GraphError),
    #[error("sphere layout needs at least one edge")]
    NoEdges,
    #[error("{colors} colors but only {positions} cluster positions")]
    TooManyColors { colors: usize, positions: usize },
    #[error("palette has {palette} entries but the coloring uses {colors}")]
    PaletteTooSmall { palette: usize, colors: usize },
    #[error("edges {} and {} share a color at vertex {}", .0.first, .0.second, .0.vertex)]
    ImproperColoring(EdgeConflict),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("no vertex has two incident arcs")]
    NoAngles,
    #[error(
        "bound violated at vertex {} by edges {} and {}: measured {} < guaranteed {}",
        .0.vertex, .0.first, .0.second, .0.measured, .0.guaranteed
    )]
    BoundViolation(BoundCheck),
}

/// In-plane angle for color `i` of `c`: `i·π / (4(c-1))`, or 0 when there
/// is a single color.
pub fn angle_schedule(c: usize) -> Vec<f64> {
    if c <= 1 {
        return alloc::vec![0.0; c];
    }
    let gap = PI / (4.0 * (c - 1) as f64);
    (0..c).map(|i| i as f64 * gap).collect()
}

/// Default localized window for maximum degree `d`: the even number
/// `2·⌈√d / 2⌉`, at least 2.
pub fn default_window(d: usize) -> usize {
    let half = math::ceil(math::sqrt(d as f64) / 2.0) as usize;
    (2 * half).max(2)
}

pub(crate) fn check_drawing(graph: &Graph, drawing: &Drawing2D) -> Result<(), LayoutError> {
    let n = drawing.positions().len();
    if n != graph.vertex_count() {
        let missing = graph.vertex_ids().get(n).cloned().unwrap_or_default();
        return Err(LayoutError::InvalidDrawing(GraphError::MissingPosition(missing)));
    }
    Ok(())
}
