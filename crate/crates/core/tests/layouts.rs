use std::collections::BTreeSet;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use arc3d::geometry::{angle_between, arc_clearance, perturb, GeometryError};
use arc3d::layout::{
    angular_resolution_3d, cluster_positions, free_layout, guarantee_check, min_pairwise_distance, sphere_layout,
    stationary_layout, BoundKind,
};
use arc3d::{Drawing2D, Graph, LayoutMethod};

fn star(k: usize) -> (Graph, Drawing2D) {
    let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    let g = Graph::from_indices(k + 1, &edges).unwrap();
    let mut pos = vec![[0.0, 0.0]];
    pos.extend((0..k).map(|i| {
        let t = 2.0 * PI * i as f64 / k as f64;
        [t.cos(), t.sin()]
    }));
    let d = Drawing2D::new(&g, pos).unwrap();
    (g, d)
}

fn cube() -> Graph {
    let mut edges = Vec::new();
    for u in 0..8usize {
        for bit in [1, 2, 4] {
            if u & bit == 0 {
                edges.push((u, u | bit));
            }
        }
    }
    Graph::from_indices(8, &edges).unwrap()
}

fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_indices(n, &edges).unwrap()
}

#[test]
fn stationary_right_angle() {
    let g = Graph::from_indices(3, &[(0, 1), (0, 2)]).unwrap();
    let d = Drawing2D::new(&g, vec![[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]).unwrap();
    let diagram = stationary_layout(&g, &d).unwrap();
    let report = angular_resolution_3d(&diagram).unwrap();
    // tangents (1,0,0) and (0, cos π/4, sin π/4)
    assert!((report.min_angle - FRAC_PI_2).abs() < 1e-12);
    assert_eq!(report.argmin, (0, 0, 1));
}

#[test]
fn stationary_near_collinear_six_star() {
    let edges: Vec<_> = (1..=6).map(|i| (0, i)).collect();
    let g = Graph::from_indices(7, &edges).unwrap();
    let mut pos = vec![[0.0, 0.0]];
    pos.extend((0..6).map(|i| {
        let t = 1e-6 * i as f64;
        [t.cos(), t.sin()]
    }));
    let d = Drawing2D::new(&g, pos).unwrap();
    assert!(d.angular_resolution(&g).unwrap() < 1.1e-6);
    let diagram = stationary_layout(&g, &d).unwrap();
    let c = diagram.palette_size();
    assert!(c <= 7);
    let report = angular_resolution_3d(&diagram).unwrap();
    assert!(report.min_angle >= PI / (4.0 * (c - 1) as f64) - 1e-9);
    assert!(report.all_pass());
}

#[test]
fn free_plus_star_halves_opposite_pairs() {
    let (g, d) = star(4);
    let diagram = free_layout(&g, &d, Some(2)).unwrap();
    assert_eq!(diagram.method(), LayoutMethod::Free { window: 2 });
    let colors = diagram.colors();
    let rot = d.rotation_system(&g).unwrap();
    let around: Vec<usize> = rot.around(0).iter().map(|&e| colors[e]).collect();
    for i in 0..4 {
        assert_ne!(around[i], around[(i + 1) % 4]);
    }
    let checks = guarantee_check(&diagram).unwrap();
    let mut same = 0;
    for c in &checks {
        if colors[c.first] == colors[c.second] {
            same += 1;
            assert_eq!(c.kind, BoundKind::HalfPlanarAngle);
            assert!((c.guaranteed - FRAC_PI_2).abs() < 1e-12);
            assert!(c.measured >= FRAC_PI_2 - 1e-9);
        }
    }
    assert_eq!(same, 2);
}

#[test]
fn free_eight_star_window_two() {
    let (g, d) = star(8);
    let diagram = free_layout(&g, &d, Some(2)).unwrap();
    assert!(diagram.palette_size() <= 3);
    let rot = d.rotation_system(&g).unwrap();
    let order = rot.around(0);
    for i in 0..8 {
        for j in i + 1..8 {
            if diagram.colors()[order[i]] == diagram.colors()[order[j]] {
                assert!((j - i).min(8 - (j - i)) >= 2);
                assert!(d.angle_at(&g, 0, order[i], order[j]) >= 2.0 * (2.0 * PI / 8.0) - 1e-12);
            }
        }
    }
    assert!(guarantee_check(&diagram).is_ok());
}

#[test]
fn free_path_matches_stationary() {
    let g = Graph::from_indices(3, &[(0, 1), (1, 2)]).unwrap();
    let d = Drawing2D::new(&g, vec![[0.0, 0.0], [1.0, 0.0], [1.0, 1.0]]).unwrap();
    let free = free_layout(&g, &d, Some(2)).unwrap();
    let stat = stationary_layout(&g, &d).unwrap();
    assert_ne!(free.colors()[0], free.colors()[1]);
    assert_eq!(free.arcs(), stat.arcs());
}

#[test]
fn sphere_triangle_and_k4() {
    let tri = complete(3);
    let diagram = sphere_layout(&tri).unwrap();
    let delta = min_pairwise_distance(&cluster_positions(2));
    let LayoutMethod::Sphere { epsilon, min_cluster_distance } = diagram.method() else {
        panic!("wrong method")
    };
    assert_eq!(min_cluster_distance, delta);
    assert_eq!(epsilon, delta / 8.0);
    let report = angular_resolution_3d(&diagram).unwrap();
    assert!(report.min_angle >= ((delta - 2.0 * epsilon) / 2.0).asin() - 1e-9);
    assert!(report.bound_checks.iter().all(|c| c.kind == BoundKind::InscribedAngle && c.pass));

    let k4 = complete(4);
    let diagram = sphere_layout(&k4).unwrap();
    let clusters: BTreeSet<usize> = diagram.colors().iter().copied().collect();
    assert_eq!(clusters.len(), 4);
    let report = angular_resolution_3d(&diagram).unwrap();
    assert!(report.min_angle > 0.0);
    let min_check = report.bound_checks.iter().map(|c| c.measured).fold(f64::INFINITY, f64::min);
    assert_eq!(report.min_angle, min_check);
    assert!(report.all_pass());
}

#[test]
fn sphere_cube_on_unit_sphere() {
    let g = cube();
    let diagram = sphere_layout(&g).unwrap();
    for p in diagram.positions() {
        assert!((p.norm() - 1.0).abs() <= 1e-12);
    }
    let sq = g.square();
    for &(u, v) in sq.edges() {
        assert_ne!(diagram.colors()[u], diagram.colors()[v]);
    }
    assert!(guarantee_check(&diagram).is_ok());
}

#[test]
fn single_edge_sphere_has_no_angles() {
    let g = Graph::from_indices(2, &[(0, 1)]).unwrap();
    let diagram = sphere_layout(&g).unwrap();
    assert_ne!(diagram.colors()[0], diagram.colors()[1]);
    assert!(angular_resolution_3d(&diagram).is_err());
}

fn x_shape() -> (Graph, Drawing2D) {
    let g = Graph::from_indices(4, &[(0, 1), (2, 3)]).unwrap();
    let d = Drawing2D::new(&g, vec![[-1.0, -1.0], [1.0, 1.0], [-1.0, 1.0], [1.0, -1.0]]).unwrap();
    (g, d)
}

#[test]
fn clearance_of_far_arcs() {
    let g = Graph::from_indices(4, &[(0, 1), (2, 3)]).unwrap();
    let d = Drawing2D::new(&g, vec![[0.0, 0.0], [1.0, 0.0], [0.0, 10.0], [1.0, 10.0]]).unwrap();
    let diagram = stationary_layout(&g, &d).unwrap();
    let report = arc_clearance(&diagram, 9, 0.1);
    assert!(report.flagged.is_empty());
    assert!(report.min_distance().unwrap() > 9.0);
    let same = perturb(&diagram, 0.25, 9, 0.1).unwrap();
    assert_eq!(same, diagram);
}

#[test]
fn crossing_x_is_flagged_then_separated() {
    let (g, d) = x_shape();
    // disjoint edges share color 0: both are flat segments through the origin
    let diagram = stationary_layout(&g, &d).unwrap();
    assert_eq!(diagram.colors(), &[0, 0]);
    let report = arc_clearance(&diagram, 9, 1e-3);
    assert_eq!(report.min_distance(), Some(0.0));
    assert_eq!(report.flagged.len(), 1);

    let moved = perturb(&diagram, 0.5, 9, 1e-3).unwrap();
    assert_eq!(moved.arc(0), diagram.arc(0));
    assert!((moved.arc(1).in_plane_angle() - 0.5 * FRAC_PI_4).abs() < 1e-15);
    assert!(arc_clearance(&moved, 9, 1e-3).flagged.is_empty());
    assert!(guarantee_check(&moved).is_ok());

    assert_eq!(perturb(&diagram, 0.0, 9, 1e-3), Err(GeometryError::PerturbationFailed(0)));
}

#[test]
fn crossing_x_with_distinct_angles_is_clear() {
    let (_, d) = x_shape();
    let g2 = Graph::from_indices(5, &[(0, 1), (2, 3), (1, 4), (3, 4)]).unwrap();
    let mut pos = d.positions().to_vec();
    pos.push([2.0, 0.0]);
    let d2 = Drawing2D::new(&g2, pos).unwrap();
    let diagram = stationary_layout(&g2, &d2).unwrap();
    assert_ne!(diagram.colors()[0], diagram.colors()[1]);
    let report = arc_clearance(&diagram, 33, 1e-3);
    assert!(report.closest.unwrap().distance > 1e-2);
}

#[test]
fn tangents_measured_from_leaving_direction() {
    let (g, d) = star(3);
    let diagram = stationary_layout(&g, &d).unwrap();
    for e in 0..3 {
        let t = diagram.tangent(e, 0);
        let leaf = diagram.position(e + 1);
        let flat = arc3d::Vec3::new(t.x, t.y, 0.0);
        assert!(angle_between(flat, leaf).unwrap() < 1e-12);
        assert!(t.z >= 0.0);
    }
}
