//! The scene document: vertex positions, one arc per edge with its derived
//! circle, the layout metadata, and the resolution report.
//!
//! Everything except the arc parameters (`inPlaneAngle`, `planeTilt`,
//! `side`) and positions is derived. Parsing rebuilds the arcs from those
//! parameters and rejects documents whose derived fields disagree. Floats
//! are written as shortest round-trip decimals, so `emit(parse(emit(d)))`
//! reproduces the text byte for byte.

use std::collections::BTreeSet;

use arc3d::geometry::Side;
use arc3d::layout::{angular_resolution_3d, ResolutionReport};
use arc3d::{ArcDiagram3D, CircularArc, Graph, LayoutMethod, SlantedInterpretation, Vec3};
use serde::{Deserialize, Serialize};

use crate::error::FormatError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct SceneFile {
    pub method: MethodRecord,
    pub palette_size: usize,
    pub vertices: Vec<SceneVertex>,
    pub arcs: Vec<SceneArc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<ReportRecord>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "lowercase", deny_unknown_fields)]
pub enum MethodRecord {
    Sphere {
        epsilon: f64,
        #[serde(rename = "minClusterDistance")]
        min_cluster_distance: f64,
    },
    Stationary,
    Slanted {
        interpretation: InterpretationRecord,
        levels: usize,
    },
    Free {
        window: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InterpretationRecord {
    Inplane,
    Elevation,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneVertex {
    pub id: String,
    pub position: [f64; 3],
    /// Cluster index (sphere layouts only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cluster: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct SceneArc {
    pub edge: usize,
    pub u: String,
    pub v: String,
    pub a: [f64; 3],
    pub b: [f64; 3],
    pub in_plane_angle: f64,
    pub plane_tilt: f64,
    pub side: i32,
    /// `null` for straight segments.
    pub center: Option<[f64; 3]>,
    pub radius: Option<f64>,
    pub plane_normal: [f64; 3],
    /// Edge color (every layout except sphere).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub color: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct ReportRecord {
    /// `null` when no vertex has two arcs.
    pub min_angle: Option<f64>,
    pub argmin: Option<PairRecord>,
    pub checks: usize,
    pub failed: usize,
    /// Aligned with `vertices`; `null` below degree two.
    pub per_vertex_min: Vec<Option<f64>>,
    pub bound_checks: Vec<CheckRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairRecord {
    pub vertex: String,
    pub first: usize,
    pub second: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckRecord {
    pub vertex: String,
    pub first: usize,
    pub second: usize,
    pub measured: f64,
    pub guaranteed: f64,
    pub kind: String,
    pub pass: bool,
}

impl From<LayoutMethod> for MethodRecord {
    fn from(m: LayoutMethod) -> Self {
        match m {
            LayoutMethod::Sphere { epsilon, min_cluster_distance } => MethodRecord::Sphere { epsilon, min_cluster_distance },
            LayoutMethod::Stationary => MethodRecord::Stationary,
            LayoutMethod::Slanted { interpretation, levels } => MethodRecord::Slanted {
                interpretation: match interpretation {
                    SlantedInterpretation::InPlane => InterpretationRecord::Inplane,
                    SlantedInterpretation::Elevation => InterpretationRecord::Elevation,
                },
                levels,
            },
            LayoutMethod::Free { window } => MethodRecord::Free { window },
        }
    }
}

impl From<MethodRecord> for LayoutMethod {
    fn from(m: MethodRecord) -> Self {
        match m {
            MethodRecord::Sphere { epsilon, min_cluster_distance } => LayoutMethod::Sphere { epsilon, min_cluster_distance },
            MethodRecord::Stationary => LayoutMethod::Stationary,
            MethodRecord::Slanted { interpretation, levels } => LayoutMethod::Slanted {
                interpretation: match interpretation {
                    InterpretationRecord::Inplane => SlantedInterpretation::InPlane,
                    InterpretationRecord::Elevation => SlantedInterpretation::Elevation,
                },
                levels,
            },
            MethodRecord::Free { window } => LayoutMethod::Free { window },
        }
    }
}

fn report_record(diagram: &ArcDiagram3D, report: Option<&ResolutionReport>) -> ReportRecord {
    let graph = diagram.graph();
    let id = |v: usize| graph.vertex_id(v).to_string();
    match report {
        None => ReportRecord {
            min_angle: None,
            argmin: None,
            checks: 0,
            failed: 0,
            per_vertex_min: vec![None; graph.vertex_count()],
            bound_checks: Vec::new(),
        },
        Some(r) => ReportRecord {
            min_angle: Some(r.min_angle),
            argmin: Some(PairRecord { vertex: id(r.argmin.0), first: r.argmin.1, second: r.argmin.2 }),
            checks: r.bound_checks.len(),
            failed: r.bound_checks.iter().filter(|c| !c.pass).count(),
            per_vertex_min: r.per_vertex_min.clone(),
            bound_checks: r
                .bound_checks
                .iter()
                .map(|c| CheckRecord {
                    vertex: id(c.vertex),
                    first: c.first,
                    second: c.second,
                    measured: c.measured,
                    guaranteed: c.guaranteed,
                    kind: c.kind.name().to_string(),
                    pass: c.pass,
                })
                .collect(),
        },
    }
}

/// Scene record for `diagram`, with a freshly measured report.
pub fn scene_record(diagram: &ArcDiagram3D) -> SceneFile {
    let graph = diagram.graph();
    let by_vertex = diagram.method().colors_vertices();
    let vertices = (0..graph.vertex_count())
        .map(|v| SceneVertex {
            id: graph.vertex_id(v).to_string(),
            position: diagram.position(v).into(),
            cluster: by_vertex.then(|| diagram.colors()[v]),
        })
        .collect();
    let arcs = diagram
        .arcs()
        .iter()
        .enumerate()
        .map(|(e, arc)| {
            let (u, v) = graph.endpoints(e);
            SceneArc {
                edge: e,
                u: graph.vertex_id(u).to_string(),
                v: graph.vertex_id(v).to_string(),
                a: arc.a().into(),
                b: arc.b().into(),
                in_plane_angle: arc.in_plane_angle(),
                plane_tilt: arc.plane_tilt(),
                side: arc.side().sign() as i32,
                center: arc.center().map(Into::into),
                radius: arc.radius(),
                plane_normal: arc.plane_normal().into(),
                color: (!by_vertex).then(|| diagram.colors()[e]),
            }
        })
        .collect();
    let report = angular_resolution_3d(diagram).ok();
    SceneFile {
        method: diagram.method().into(),
        palette_size: diagram.palette_size(),
        vertices,
        arcs,
        report: Some(report_record(diagram, report.as_ref())),
    }
}

pub fn emit_scene(diagram: &ArcDiagram3D) -> String {
    let mut s = serde_json::to_string_pretty(&scene_record(diagram)).expect("scenes serialize");
    s.push('\n');
    s
}

pub fn parse_scene(text: &str) -> Result<ArcDiagram3D, FormatError> {
    let file: SceneFile = serde_json::from_str(text)?;
    diagram_from_record(&file)
}

fn close(x: f64, y: f64) -> bool {
    (x - y).abs() <= 1e-9 * (1.0 + x.abs().max(y.abs()))
}

fn close3(x: [f64; 3], y: [f64; 3]) -> bool {
    (0..3).all(|i| close(x[i], y[i]))
}

/// Rebuilds the diagram and checks every derived field against it.
pub fn diagram_from_record(file: &SceneFile) -> Result<ArcDiagram3D, FormatError> {
    let invalid = FormatError::validation;
    let method: LayoutMethod = file.method.into();
    for (e, arc) in file.arcs.iter().enumerate() {
        if arc.edge != e {
            return Err(invalid(format!("arc {e} is labelled as edge {}", arc.edge)));
        }
    }
    let graph = Graph::build(
        file.vertices.iter().map(|v| v.id.clone()),
        file.arcs.iter().map(|a| (a.u.as_str(), a.v.as_str())),
    )
    .map_err(|e| invalid(e.to_string()))?;
    let positions: Vec<Vec3> = file.vertices.iter().map(|v| Vec3::from(v.position)).collect();
    if let Some(v) = file.vertices.iter().find(|v| !Vec3::from(v.position).is_finite()) {
        return Err(invalid(format!("vertex `{}` has a non-finite position", v.id)));
    }

    let mut arcs = Vec::with_capacity(file.arcs.len());
    for (e, rec) in file.arcs.iter().enumerate() {
        let (u, v) = graph.endpoints(e);
        if Vec3::from(rec.a) != positions[u] || Vec3::from(rec.b) != positions[v] {
            return Err(invalid(format!("arc {e} does not start at `{}` and end at `{}`", rec.u, rec.v)));
        }
        let side = Side::from_sign(rec.side).ok_or_else(|| invalid(format!("arc {e}: side must be 1 or -1")))?;
        let arc = CircularArc::new(positions[u], positions[v], rec.in_plane_angle, rec.plane_tilt, side)
            .map_err(|err| invalid(format!("arc {e}: {err}")))?;
        let center_ok = match (arc.center(), rec.center) {
            (Some(c), Some(r)) => close3(c.into(), r),
            (None, None) => true,
            _ => false,
        };
        let radius_ok = match (arc.radius(), rec.radius) {
            (Some(c), Some(r)) => close(c, r),
            (None, None) => true,
            _ => false,
        };
        if !center_ok || !radius_ok || !close3(arc.plane_normal().into(), rec.plane_normal) {
            return Err(invalid(format!("arc {e}: center, radius or planeNormal disagree with its angles")));
        }
        arcs.push(arc);
    }

    let colors: Vec<usize> = if method.colors_vertices() {
        file.vertices
            .iter()
            .map(|v| v.cluster.ok_or_else(|| invalid(format!("vertex `{}` has no cluster", v.id))))
            .collect::<Result<_, _>>()?
    } else {
        file.arcs
            .iter()
            .map(|a| a.color.ok_or_else(|| invalid(format!("arc {} has no color", a.edge))))
            .collect::<Result<_, _>>()?
    };
    let diagram = ArcDiagram3D::new(graph, positions, arcs, method, colors, file.palette_size)
        .map_err(|e| invalid(e.to_string()))?;

    if let Some(claimed) = &file.report {
        check_report(&diagram, claimed)?;
    }
    Ok(diagram)
}

fn check_report(diagram: &ArcDiagram3D, claimed: &ReportRecord) -> Result<(), FormatError> {
    let actual = report_record(diagram, angular_resolution_3d(diagram).ok().as_ref());
    let mismatch = |what: &str| Err(FormatError::validation(format!("report {what} disagrees with the arcs")));
    let opt_close = |x: Option<f64>, y: Option<f64>| match (x, y) {
        (Some(x), Some(y)) => close(x, y),
        (None, None) => true,
        _ => false,
    };
    if !opt_close(actual.min_angle, claimed.min_angle) {
        return mismatch("minAngle");
    }
    if actual.checks != claimed.checks || actual.failed != claimed.failed {
        return mismatch("check counts");
    }
    if actual.per_vertex_min.len() != claimed.per_vertex_min.len()
        || !actual.per_vertex_min.iter().zip(&claimed.per_vertex_min).all(|(a, c)| opt_close(*a, *c))
    {
        return mismatch("perVertexMin");
    }
    if actual.bound_checks.len() != claimed.bound_checks.len() {
        return mismatch("boundChecks");
    }
    let keys = |v: &[CheckRecord]| v.iter().map(|c| (c.vertex.clone(), c.first, c.second)).collect::<BTreeSet<_>>();
    if keys(&actual.bound_checks) != keys(&claimed.bound_checks) {
        return mismatch("boundChecks");
    }
    for (a, c) in actual.bound_checks.iter().zip(&claimed.bound_checks) {
        if a.kind != c.kind || a.pass != c.pass || !close(a.measured, c.measured) || !close(a.guaranteed, c.guaranteed) {
            return mismatch(&format!("check at `{}` for edges {} and {}", c.vertex, c.first, c.second));
        }
    }
    Ok(())
}
