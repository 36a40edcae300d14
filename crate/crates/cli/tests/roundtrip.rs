use arc3d::geometry::Side;
use arc3d::layout::{free_layout, slanted_layout, sphere_layout, stationary_layout};
use arc3d::{ArcDiagram3D, Drawing2D, Graph, SlantedInterpretation};
use arc3d_cli::graph_file::graph_to_file;
use arc3d_cli::{emit_graph, emit_scene, parse_graph, parse_scene};
use proptest::prelude::*;

fn instance() -> impl Strategy<Value = (Graph, Drawing2D)> {
    (2usize..12).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        (
            proptest::sample::subsequence(pairs.clone(), 0..=pairs.len().min(20)),
            proptest::collection::vec((-50.0f64..50.0, -50.0f64..50.0), n),
        )
            .prop_filter_map("coincident vertices", move |(edges, pts)| {
                let g = Graph::from_indices(n, &edges).ok()?;
                let d = Drawing2D::new(&g, pts.into_iter().map(|(x, y)| [x, y]).collect()).ok()?;
                Some((g, d))
            })
    })
}

fn layout(g: &Graph, d: &Drawing2D, which: u8) -> Option<ArcDiagram3D> {
    match which {
        0 => stationary_layout(g, d).ok(),
        1 => free_layout(g, d, None).ok(),
        2 => slanted_layout(g, d, SlantedInterpretation::Elevation, Side::Negative).ok(),
        _ => sphere_layout(g).ok(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn graph_documents_round_trip((g, d) in instance()) {
        let text = emit_graph(&graph_to_file(&g, Some(&d), None));
        let parsed = parse_graph(&text).unwrap();
        prop_assert_eq!(&parsed.graph, &g);
        prop_assert_eq!(parsed.drawing.as_ref(), Some(&d));
        prop_assert_eq!(emit_graph(&graph_to_file(&parsed.graph, parsed.drawing.as_ref(), None)), text);
    }

    #[test]
    fn scenes_round_trip((g, d) in instance(), which in 0u8..4) {
        if let Some(diagram) = layout(&g, &d, which) {
            let text = emit_scene(&diagram);
            let back = parse_scene(&text).unwrap();
            prop_assert_eq!(&back, &diagram);
            prop_assert_eq!(emit_scene(&back), text);
        }
    }
}
