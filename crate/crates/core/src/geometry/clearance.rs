//! Sampled distance between non-incident arcs, and the deterministic nudge
//! that separates arcs that come too close.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_2;

use super::{GeometryError, Vec3};
use crate::diagram::ArcDiagram3D;
use crate::graph::EdgeId;

/// Retry budget for [`perturb`].
pub const PERTURB_ROUNDS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CloseArcs {
    pub first: EdgeId,
    pub second: EdgeId,
    pub distance: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClearanceReport {
    /// Closest non-incident pair, if any such pair exists.
    pub closest: Option<CloseArcs>,
    /// Pairs closer than the threshold, ordered by edge indices.
    pub flagged: Vec<CloseArcs>,
}

impl ClearanceReport {
    pub fn min_distance(&self) -> Option<f64> {
        self.closest.map(|c| c.distance)
    }
}

fn interior(points: Vec<Vec3>) -> Vec<Vec3> {
    let n = points.len();
    points.into_iter().skip(1).take(n.saturating_sub(2)).collect()
}

/// Minimum distance between every pair of arcs that share no vertex,
/// estimated from `k` samples per arc. Endpoints are excluded: they are
/// vertex positions, which are distinct by construction. Pairs closer than
/// `threshold` are flagged.
pub fn arc_clearance(diagram: &ArcDiagram3D, k: usize, threshold: f64) -> ClearanceReport {
    let k = k.max(3);
    let graph = diagram.graph();
    let samples: Vec<Vec<Vec3>> = diagram.arcs().iter().map(|a| interior(a.sample(k))).collect();
    let mut closest: Option<CloseArcs> = None;
    let mut flagged = Vec::new();
    for e in 0..graph.edge_count() {
        for f in e + 1..graph.edge_count() {
            if graph.adjacent_edges(e, f) {
                continue;
            }
            let mut best = f64::INFINITY;
            for p in &samples[e] {
                for q in &samples[f] {
                    best = best.min(p.distance(*q));
                }
            }
            let pair = CloseArcs { first: e, second: f, distance: best };
            if closest.is_none_or(|c| best < c.distance) {
                closest = Some(pair);
            }
            if best < threshold {
                flagged.push(pair);
            }
        }
    }
    ClearanceReport { closest, flagged }
}

/// Nudges the in-plane angle of the later arc of every flagged pair by
/// `epsilon_fraction` times the diagram's nominal color gap, then re-checks,
/// for at most [`PERTURB_ROUNDS`] rounds. A diagram with nothing flagged is
/// returned unchanged.
pub fn perturb(
    diagram: &ArcDiagram3D,
    epsilon_fraction: f64,
    k: usize,
    threshold: f64,
) -> Result<ArcDiagram3D, GeometryError> {
    let step = epsilon_fraction * diagram.nominal_gap();
    let mut current = diagram.clone();
    for round in 0..PERTURB_ROUNDS {
        let report = arc_clearance(&current, k, threshold);
        if report.flagged.is_empty() {
            return Ok(current);
        }
        if step.is_nan() || step <= 0.0 {
            return Err(GeometryError::PerturbationFailed(round));
        }
        let movers: BTreeSet<EdgeId> = report.flagged.iter().map(|p| p.second).collect();
        for e in movers {
            let arc = *current.arc(e);
            let alpha = arc.in_plane_angle();
            let nudged = if alpha + step <= FRAC_PI_2 { alpha + step } else { (alpha - step).max(0.0) };
            current.replace_arc(e, arc.with_in_plane_angle(nudged)?);
        }
    }
    if arc_clearance(&current, k, threshold).flagged.is_empty() {
        Ok(current)
    } else {
        Err(GeometryError::PerturbationFailed(PERTURB_ROUNDS))
    }
}
