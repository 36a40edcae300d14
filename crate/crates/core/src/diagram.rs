//! A finished 3D arc diagram together with the metadata needed to certify it.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_4, PI};

use crate::geometry::{CircularArc, Endpoint, Vec3};
use crate::graph::{EdgeId, Graph, VertexIdx};

/// How the second coordinate of a slanted palette entry is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SlantedInterpretation {
    /// Angle between the tangent and the chord, measured inside the arc plane.
    #[default]
    InPlane,
    /// Elevation of the tangent above the base plane.
    Elevation,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LayoutMethod {
    /// Straight chords between vertices on the unit sphere, grouped by a
    /// vertex coloring of the square graph. Colors index cluster positions.
    Sphere { epsilon: f64, min_cluster_distance: f64 },
    /// Perpendicular arcs over a fixed drawing, classical edge coloring.
    Stationary,
    /// Tilted arc planes over a fixed drawing; `levels` angles per axis.
    Slanted { interpretation: SlantedInterpretation, levels: usize },
    /// Perpendicular arcs over a fixed drawing, L-localized edge coloring.
    Free { window: usize },
}

impl LayoutMethod {
    pub fn name(&self) -> &'static str {
        match self {
            LayoutMethod::Sphere { .. } => "sphere",
            LayoutMethod::Stationary => "stationary",
            LayoutMethod::Slanted { .. } => "slanted",
            LayoutMethod::Free { .. } => "free",
        }
    }

    /// Whether `colors` holds one entry per vertex (sphere) or per edge.
    pub fn colors_vertices(&self) -> bool {
        matches!(self, LayoutMethod::Sphere { .. })
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DiagramError {
    #[error("expected {expected} {what}, found {found}")]
    Length { what: &'static str, expected: usize, found: usize },
    #[error("arc of edge {0} does not start and end at its vertices")]
    EndpointMismatch(EdgeId),
    #[error("color {color} of item {index} is outside the palette of {palette}")]
    ColorOutOfPalette { index: usize, color: usize, palette: usize },
}

/// 3D positions for every vertex and one arc per edge. The arc of edge
/// `e = (u, v)` runs from the position of `u` to the position of `v`.
#[derive(Debug, Clone, PartialEq)]
pub struct ArcDiagram3D {
    graph: Graph,
    positions: Vec<Vec3>,
    arcs: Vec<CircularArc>,
    method: LayoutMethod,
    colors: Vec<usize>,
    palette_size: usize,
}

impl ArcDiagram3D {
    pub fn new(
        graph: Graph,
        positions: Vec<Vec3>,
        arcs: Vec<CircularArc>,
        method: LayoutMethod,
        colors: Vec<usize>,
        palette_size: usize,
    ) -> Result<Self, DiagramError> {
        let check = |what, expected, found| {
            if expected == found {
                Ok(())
            } else {
                Err(DiagramError::Length { what, expected, found })
            }
        };
        check("positions", graph.vertex_count(), positions.len())?;
        check("arcs", graph.edge_count(), arcs.len())?;
        let colored = if method.colors_vertices() { graph.vertex_count() } else { graph.edge_count() };
        check("colors", colored, colors.len())?;
        if let Some((index, &color)) = colors.iter().enumerate().find(|(_, &c)| c >= palette_size) {
            return Err(DiagramError::ColorOutOfPalette { index, color, palette: palette_size });
        }
        for (e, arc) in arcs.iter().enumerate() {
            let (u, v) = graph.endpoints(e);
            if arc.a() != positions[u] || arc.b() != positions[v] {
                return Err(DiagramError::EndpointMismatch(e));
            }
        }
        Ok(ArcDiagram3D { graph, positions, arcs, method, colors, palette_size })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn positions(&self) -> &[Vec3] {
        &self.positions
    }

    pub fn position(&self, v: VertexIdx) -> Vec3 {
        self.positions[v]
    }

    pub fn arcs(&self) -> &[CircularArc] {
        &self.arcs
    }

    pub fn arc(&self, e: EdgeId) -> &CircularArc {
        &self.arcs[e]
    }

    pub fn method(&self) -> LayoutMethod {
        self.method
    }

    /// Per-edge colors, or per-vertex colors for sphere layouts.
    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn palette_size(&self) -> usize {
        self.palette_size
    }

    /// Which end of edge `e` sits at vertex `v`.
    pub fn end_at(&self, e: EdgeId, v: VertexIdx) -> Endpoint {
        if self.graph.endpoints(e).0 == v {
            Endpoint::A
        } else {
            Endpoint::B
        }
    }

    /// Unit tangent of edge `e` leaving vertex `v`.
    pub fn tangent(&self, e: EdgeId, v: VertexIdx) -> Vec3 {
        self.arcs[e].tangent_at(self.end_at(e, v))
    }

    /// Smallest angular step the construction separates colors by; the unit
    /// for perturbation nudges.
    pub fn nominal_gap(&self) -> f64 {
        match self.method {
            LayoutMethod::Stationary | LayoutMethod::Free { .. } => {
                if self.palette_size >= 2 {
                    PI / (4.0 * (self.palette_size - 1) as f64)
                } else {
                    FRAC_PI_4
                }
            }
            LayoutMethod::Slanted { levels, .. } => {
                if levels >= 2 {
                    FRAC_PI_4 / (levels - 1) as f64
                } else {
                    FRAC_PI_4
                }
            }
            LayoutMethod::Sphere { min_cluster_distance, .. } => min_cluster_distance / 2.0,
        }
    }

    pub(crate) fn replace_arc(&mut self, e: EdgeId, arc: CircularArc) {
        debug_assert!(arc.a() == self.arcs[e].a() && arc.b() == self.arcs[e].b());
        self.arcs[e] = arc;
    }
}
