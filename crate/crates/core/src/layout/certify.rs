//! Measurement of realized angular resolution and per-pair certification
//! against the lower bound each construction guarantees.

use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_4;

use super::LayoutError;
use crate::diagram::{ArcDiagram3D, LayoutMethod};
use crate::geometry::{angle_between, Vec3};
use crate::graph::{EdgeId, VertexIdx};
use crate::{math, ANGLE_TOLERANCE};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    /// `|α_e - α_f|`: tangents at different elevations are at least that far apart.
    ColorGap,
    /// Same color, equal elevation `<= π/4`: at least half the planar angle.
    HalfPlanarAngle,
    /// Minimum over both tilt sides of each arc, given the chord directions.
    PaletteSearch,
    /// Chords of the unit sphere: the inscribed angle is at least `asin(|ac|/2)`.
    InscribedAngle,
}

impl BoundKind {
    pub fn name(self) -> &'static str {
        match self {
            BoundKind::ColorGap => "color-gap",
            BoundKind::HalfPlanarAngle => "half-planar-angle",
            BoundKind::PaletteSearch => "palette-search",
            BoundKind::InscribedAngle => "inscribed-angle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundCheck {
    pub vertex: VertexIdx,
    pub first: EdgeId,
    pub second: EdgeId,
    pub measured: f64,
    pub guaranteed: f64,
    pub kind: BoundKind,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResolutionReport {
    pub min_angle: f64,
    pub argmin: (VertexIdx, EdgeId, EdgeId),
    /// `None` for vertices of degree below two.
    pub per_vertex_min: Vec<Option<f64>>,
    pub bound_checks: Vec<BoundCheck>,
}

impl ResolutionReport {
    pub fn all_pass(&self) -> bool {
        self.bound_checks.iter().all(|c| c.pass)
    }
}

fn planar(v: Vec3) -> Vec3 {
    Vec3::new(v.x, v.y, 0.0)
}

/// Tangent of an arc leaving `v` along horizontal direction `dir`, written
/// out directly from the palette parameters.
fn palette_tangent(dir: Vec3, in_plane: f64, tilt: f64, sign: f64) -> Vec3 {
    let left = Vec3::Z.cross(dir);
    let bulge = Vec3::Z * math::sin(tilt) + left * (sign * math::cos(tilt));
    dir * math::cos(in_plane) + bulge * math::sin(in_plane)
}

fn guaranteed(diagram: &ArcDiagram3D, v: VertexIdx, e: EdgeId, f: EdgeId) -> (f64, BoundKind) {
    let graph = diagram.graph();
    let (ae, af) = (diagram.arc(e), diagram.arc(f));
    let gap = (ae.in_plane_angle() - af.in_plane_angle()).abs();
    let here = diagram.position(v);
    let toward = |edge: EdgeId| diagram.position(graph.opposite(edge, v));
    match diagram.method() {
        LayoutMethod::Stationary => (gap, BoundKind::ColorGap),
        LayoutMethod::Free { .. } => {
            if diagram.colors()[e] != diagram.colors()[f] {
                return (gap, BoundKind::ColorGap);
            }
            let low = ae.in_plane_angle().min(af.in_plane_angle());
            let de = planar(toward(e) - here);
            let df = planar(toward(f) - here);
            match angle_between(de, df) {
                // a perturbed partner loses at most its elevation change
                Ok(theta) if low <= FRAC_PI_4 => ((theta / 2.0 - gap).max(gap), BoundKind::HalfPlanarAngle),
                _ => (gap, BoundKind::HalfPlanarAngle),
            }
        }
        LayoutMethod::Slanted { .. } => {
            let (Some(de), Some(df)) = (planar(toward(e) - here).normalized(), planar(toward(f) - here).normalized())
            else {
                return (0.0, BoundKind::PaletteSearch);
            };
            let mut best = f64::INFINITY;
            for se in [1.0, -1.0] {
                for sf in [1.0, -1.0] {
                    let te = palette_tangent(de, ae.in_plane_angle(), ae.plane_tilt(), se);
                    let tf = palette_tangent(df, af.in_plane_angle(), af.plane_tilt(), sf);
                    if let Ok(a) = angle_between(te, tf) {
                        best = best.min(a);
                    }
                }
            }
            (if best.is_finite() { best } else { 0.0 }, BoundKind::PaletteSearch)
        }
        LayoutMethod::Sphere { .. } => {
            let chord = toward(e).distance(toward(f));
            let inscribed = math::asin((chord / 2.0).min(1.0));
            // a bent arc leaves the chord direction by exactly its in-plane angle
            let slack = ae.in_plane_angle() + af.in_plane_angle();
            ((inscribed - slack).max(0.0), BoundKind::InscribedAngle)
        }
    }
}

/// Measured angle and guaranteed bound for every pair of arcs sharing a
/// vertex, ordered by vertex and then by incident-edge order.
pub fn bound_checks(diagram: &ArcDiagram3D) -> Vec<BoundCheck> {
    let graph = diagram.graph();
    let mut out = Vec::new();
    for v in 0..graph.vertex_count() {
        let inc = graph.incident(v);
        for (i, &e) in inc.iter().enumerate() {
            for &f in &inc[i + 1..] {
                let measured = angle_between(diagram.tangent(e, v), diagram.tangent(f, v)).unwrap_or(0.0);
                let (bound, kind) = guaranteed(diagram, v, e, f);
                out.push(BoundCheck {
                    vertex: v,
                    first: e.min(f),
                    second: e.max(f),
                    measured,
                    guaranteed: bound,
                    kind,
                    pass: measured >= bound - ANGLE_TOLERANCE,
                });
            }
        }
    }
    out
}

/// Smallest angle between tangents of two arcs at a shared vertex, with the
/// per-pair certificate attached.
pub fn angular_resolution_3d(diagram: &ArcDiagram3D) -> Result<ResolutionReport, LayoutError> {
    let checks = bound_checks(diagram);
    let mut per_vertex_min: Vec<Option<f64>> = alloc::vec![None; diagram.graph().vertex_count()];
    let mut best: Option<&BoundCheck> = None;
    for c in &checks {
        let slot = &mut per_vertex_min[c.vertex];
        *slot = Some(slot.map_or(c.measured, |m| m.min(c.measured)));
        if best.is_none_or(|b| c.measured < b.measured) {
            best = Some(c);
        }
    }
    let best = best.ok_or(LayoutError::NoAngles)?;
    Ok(ResolutionReport {
        min_angle: best.measured,
        argmin: (best.vertex, best.first, best.second),
        per_vertex_min,
        bound_checks: checks,
    })
}

/// All bound checks, or the first failing one as `BoundViolation`.
pub fn guarantee_check(diagram: &ArcDiagram3D) -> Result<Vec<BoundCheck>, LayoutError> {
    let checks = bound_checks(diagram);
    if let Some(bad) = checks.iter().find(|c| !c.pass) {
        return Err(LayoutError::BoundViolation(*bad));
    }
    Ok(checks)
}
