use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};

use super::LayoutError;
use crate::coloring::greedy_vertex_coloring;
use crate::diagram::{ArcDiagram3D, LayoutMethod};
use crate::geometry::{CircularArc, Side, Vec3};
use crate::graph::Graph;
use crate::math;

/// Azimuth offset between consecutive circles, `π(3 - √5)`.
const GOLDEN_ANGLE: f64 = 2.399_963_229_728_653;

/// Cluster geometry for maximum degree `d`: `d + 1` parallel planes at
/// heights uniformly spaced in `[-h, h]`, `h = π / √(1 + π²)`, each cutting
/// the unit sphere in a circle that carries `d` evenly spaced points.
#[derive(Debug, Clone, PartialEq)]
pub struct SphereParams {
    pub h: f64,
    pub levels: Vec<f64>,
    pub points_per_circle: usize,
}

impl SphereParams {
    pub fn for_degree(d: usize) -> Self {
        let h = PI / math::sqrt(1.0 + PI * PI);
        let levels = if d == 0 {
            Vec::new()
        } else {
            (0..=d).map(|i| -h + i as f64 * 2.0 * h / d as f64).collect()
        };
        SphereParams { h, levels, points_per_circle: d }
    }

    pub fn plane_spacing(&self) -> f64 {
        2.0 * self.h / self.points_per_circle as f64
    }
}

/// The `d(d + 1)` cluster positions, circle by circle from the lowest plane.
/// The `i`-th circle is rotated by `i` golden angles so points on adjacent
/// circles do not line up.
pub fn cluster_positions(d: usize) -> Vec<Vec3> {
    let params = SphereParams::for_degree(d);
    let mut out = Vec::with_capacity(d * (d + 1));
    for (i, &z) in params.levels.iter().enumerate() {
        let r = math::sqrt(1.0 - z * z);
        for j in 0..d {
            let phi = 2.0 * PI * j as f64 / d as f64 + i as f64 * GOLDEN_ANGLE;
            out.push(Vec3::new(r * math::cos(phi), r * math::sin(phi), z));
        }
    }
    out
}

pub fn min_pairwise_distance(points: &[Vec3]) -> f64 {
    let mut best = f64::INFINITY;
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            best = best.min(p.distance(*q));
        }
    }
    best
}

/// Point on the unit sphere at chord distance `eps` from the unit vector
/// `center`, at azimuth `psi` around it.
fn offset_on_sphere(center: Vec3, eps: f64, psi: f64) -> Vec3 {
    let e1 = Vec3::Z
        .cross(center)
        .normalized()
        .unwrap_or_else(|| Vec3::X.cross(center).normalized().unwrap());
    let e2 = center.cross(e1);
    let rho = 2.0 * math::asin(eps / 2.0);
    center * math::cos(rho) + (e1 * math::cos(psi) + e2 * math::sin(psi)) * math::sin(rho)
}

/// Straight-line drawing with every vertex on the unit sphere.
///
/// Vertices are colored greedily in the square graph, so neighbors and
/// co-neighbors get different colors; color `i` goes to cluster position
/// `i`, and a class of `m` vertices is spread evenly on the circle of chord
/// radius `ε = δ/8` around it, `δ` being the minimum cluster distance.
pub fn sphere_layout(graph: &Graph) -> Result<ArcDiagram3D, LayoutError> {
    let d = graph.max_degree();
    if d == 0 {
        return Err(LayoutError::NoEdges);
    }
    let coloring = greedy_vertex_coloring(&graph.square());
    let clusters = cluster_positions(d);
    if coloring.palette_size > clusters.len() {
        return Err(LayoutError::TooManyColors { colors: coloring.palette_size, positions: clusters.len() });
    }
    let delta = min_pairwise_distance(&clusters);
    let epsilon = delta / 8.0;
    let mut class_size = alloc::vec![0usize; coloring.palette_size];
    for &c in &coloring.colors {
        class_size[c] += 1;
    }
    let mut seen = alloc::vec![0usize; coloring.palette_size];
    let positions: Vec<Vec3> = coloring
        .colors
        .iter()
        .map(|&c| {
            let k = seen[c];
            seen[c] += 1;
            let psi = 2.0 * PI * k as f64 / class_size[c] as f64;
            offset_on_sphere(clusters[c], epsilon, psi)
        })
        .collect();
    let arcs = graph
        .edges()
        .iter()
        .map(|&(u, v)| CircularArc::new(positions[u], positions[v], 0.0, FRAC_PI_2, Side::Positive))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ArcDiagram3D::new(
        graph.clone(),
        positions,
        arcs,
        LayoutMethod::Sphere { epsilon, min_cluster_distance: delta },
        coloring.colors,
        coloring.palette_size,
    )?)
}
