use std::collections::BTreeSet;
use std::f64::consts::PI;

use arc3d::coloring::{
    edge_coloring_vizing, greedy_vertex_coloring, localized_edge_coloring, localized_greedy, verify_localized,
};
use arc3d::{Drawing2D, Graph, RotationSystem};
use proptest::prelude::*;

/// Simple graph on `n` vertices with every vertex degree at most `d`.
fn bounded_graph(max_n: usize, max_d: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..n * max_d / 2 + 1).prop_map(move |pairs| {
            let mut deg = vec![0usize; n];
            let mut seen = BTreeSet::new();
            let mut edges = Vec::new();
            for (u, v) in pairs {
                let key = (u.min(v), u.max(v));
                if u == v || deg[u] == max_d || deg[v] == max_d || !seen.insert(key) {
                    continue;
                }
                deg[u] += 1;
                deg[v] += 1;
                edges.push((u, v));
            }
            Graph::from_indices(n, &edges).unwrap()
        })
    })
}

/// Graph plus vertex positions on a jittered circle, so directions at every
/// vertex are distinct.
fn embedded_graph(max_n: usize, max_d: usize) -> impl Strategy<Value = (Graph, Drawing2D)> {
    bounded_graph(max_n, max_d).prop_flat_map(|g| {
        let n = g.vertex_count();
        prop::collection::vec(0.0..0.4f64, n).prop_map(move |jitter| {
            let pos = (0..n)
                .map(|i| {
                    let t = 2.0 * PI * i as f64 / n as f64 + jitter[i] / n as f64;
                    [(1.0 + jitter[i]) * t.cos(), (1.0 + jitter[i]) * t.sin()]
                })
                .collect();
            let d = Drawing2D::new(&g, pos).unwrap();
            (g.clone(), d)
        })
    })
}

fn max_degree(g: &Graph) -> usize {
    (0..g.vertex_count()).map(|v| g.incident(v).len()).max().unwrap_or(0)
}

fn proper_oracle(g: &Graph, colors: &[usize]) -> bool {
    (0..g.vertex_count()).all(|v| {
        let seen: BTreeSet<usize> = g.incident(v).iter().map(|&e| colors[e]).collect();
        seen.len() == g.incident(v).len()
    })
}

/// Same-colored pairs within cyclic distance `l/2` of each other at a
/// shared vertex, counted directly from rotation positions.
fn localized_violations(g: &Graph, rot: &RotationSystem, l: usize, colors: &[usize]) -> usize {
    let half = l / 2;
    let mut bad = 0;
    for v in 0..g.vertex_count() {
        let order = rot.around(v);
        let k = order.len();
        for i in 0..k {
            for j in i + 1..k {
                let gap = (j - i).min(k - (j - i));
                if gap <= half && colors[order[i]] == colors[order[j]] {
                    bad += 1;
                }
            }
        }
    }
    bad
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn vizing_is_proper_with_d_plus_one(g in bounded_graph(40, 10)) {
        let c = edge_coloring_vizing(&g);
        prop_assert!(proper_oracle(&g, &c.colors));
        prop_assert!(c.palette_size <= max_degree(&g) + 1);
        prop_assert!(c.colors.iter().all(|&x| x < c.palette_size.max(1)));
    }

    #[test]
    fn localized_coloring_bounds((g, d) in embedded_graph(30, 8), half in 1usize..=3) {
        let l = 2 * half;
        let rot = d.rotation_system(&g).unwrap();
        let greedy = localized_greedy(&g, &rot, l).unwrap();
        prop_assert_eq!(localized_violations(&g, &rot, l, &greedy.colors), 0);
        prop_assert!(greedy.palette_size <= 2 * l + 1);

        let best = localized_edge_coloring(&g, &rot, l).unwrap();
        prop_assert_eq!(localized_violations(&g, &rot, l, &best.colors), 0);
        prop_assert!(verify_localized(&g, &rot, l, &best).unwrap().is_empty());
        prop_assert!(best.palette_size <= max_degree(&g).min(2 * l) + 1);
    }

    #[test]
    fn verifier_agrees_with_oracle((g, d) in embedded_graph(12, 5), seed in any::<u64>(), half in 1usize..=2) {
        let l = 2 * half;
        let rot = d.rotation_system(&g).unwrap();
        let colors: Vec<usize> = (0..g.edge_count()).map(|e| ((seed >> (e % 60)) & 3) as usize).collect();
        let coloring = arc3d::EdgeColoring::from_colors(colors.clone());
        let reported = verify_localized(&g, &rot, l, &coloring).unwrap();
        let distinct: BTreeSet<(usize, usize, usize)> = reported.iter().map(|c| (c.vertex, c.first, c.second)).collect();
        prop_assert_eq!(distinct.len(), localized_violations(&g, &rot, l, &colors));
    }

    #[test]
    fn rotation_is_clockwise((g, d) in embedded_graph(20, 6)) {
        let rot = d.rotation_system(&g).unwrap();
        for v in 0..g.vertex_count() {
            let order = rot.around(v);
            let mut want: Vec<usize> = g.incident(v).to_vec();
            want.sort();
            let mut got = order.to_vec();
            got.sort();
            prop_assert_eq!(got, want);
            let angle = |e: usize| {
                let (a, b) = g.endpoints(e);
                let w = if a == v { b } else { a };
                let (p, q) = (d.position(v), d.position(w));
                (q[1] - p[1]).atan2(q[0] - p[0])
            };
            // going clockwise the angle decreases everywhere except one wrap
            let k = order.len();
            let rises = (0..k).filter(|&i| angle(order[(i + 1) % k]) > angle(order[i])).count();
            prop_assert!(k < 2 || rises == 1, "vertex {} rises {}", v, rises);
        }
    }

    #[test]
    fn square_graph_and_its_coloring(g in bounded_graph(25, 5)) {
        let sq = g.square();
        let n = g.vertex_count();
        let mut adj = vec![vec![false; n]; n];
        for &(u, v) in g.edges() {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        let mut want = BTreeSet::new();
        for u in 0..n {
            for v in u + 1..n {
                if adj[u][v] || (0..n).any(|w| adj[u][w] && adj[w][v]) {
                    want.insert((u, v));
                }
            }
        }
        let got: BTreeSet<(usize, usize)> = sq.edges().iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        prop_assert_eq!(&got, &want);

        let d = max_degree(&g);
        prop_assert!(max_degree(&sq) <= d * d);
        let c = greedy_vertex_coloring(&sq);
        prop_assert!(want.iter().all(|&(u, v)| c.colors[u] != c.colors[v]));
        prop_assert!(c.palette_size <= max_degree(&sq) + 1);
    }
}
