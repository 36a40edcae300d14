use std::fmt::Write;

use arc3d::ArcDiagram3D;

/// Wavefront OBJ with every arc as a `k`-point polyline: all vertex records
/// first (arc by arc, endpoints not shared between arcs), then one two-point
/// line record per polyline segment. `k` below 2 is raised to 2.
pub fn export_obj(diagram: &ArcDiagram3D, k: usize) -> String {
    let k = k.max(2);
    let graph = diagram.graph();
    let mut out = String::new();
    let _ = writeln!(out, "# arc3d {} layout: {} arcs, {} points per arc", diagram.method().name(), graph.edge_count(), k);
    for (e, arc) in diagram.arcs().iter().enumerate() {
        let (u, v) = graph.endpoints(e);
        let _ = writeln!(out, "# edge {e}: {} {}", graph.vertex_id(u), graph.vertex_id(v));
        for p in arc.sample(k) {
            let _ = writeln!(out, "v {} {} {}", p.x, p.y, p.z);
        }
    }
    for e in 0..graph.edge_count() {
        let _ = writeln!(out, "o edge{e}");
        let base = e * k + 1;
        for i in 0..k - 1 {
            let _ = writeln!(out, "l {} {}", base + i, base + i + 1);
        }
    }
    out
}
