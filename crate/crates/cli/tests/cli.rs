use std::f64::consts::{FRAC_PI_4, PI};
use std::process::{Command, Stdio};
use std::io::Write;

use arc3d::geometry::Side;
use arc3d::{ArcDiagram3D, CircularArc, Graph, LayoutMethod, Vec3};
use arc3d_cli::{emit_scene, parse_scene};
use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("arc3d").chain(args.iter().copied());
    let code = arc3d_cli::cli::run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str], stdin: &str) -> String {
    let (code, out, err) = run(args, stdin);
    assert_eq!(code, 0, "{args:?} failed: {err}");
    out
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap()
}

const FOLDED_PATH: &str = r#"{"vertices":[{"id":"a","x":1,"y":0},{"id":"b","x":0,"y":0},{"id":"c","x":1,"y":1}],
    "edges":[["a","b"],["b","c"]]}"#;

#[test]
fn star_pipeline_checks_clean() {
    let graph = ok(&["generate", "star", "8"], "");
    for method in ["stationary", "free", "slanted", "sphere"] {
        let scene = ok(&["layout", "--method", method], &graph);
        let (code, out, _) = run(&["check"], &scene);
        assert_eq!(code, 0, "{method}: {out}");
        assert!(out.contains("ok"), "{out}");
    }
}

#[test]
fn measure_reports_min_angle() {
    let scene = ok(&["layout", "--method", "stationary"], FOLDED_PATH);
    let m = json(&ok(&["measure"], &scene));
    let min = m["minAngle"].as_f64().unwrap();
    assert!(min > 0.0 && min <= PI);
    assert!((m["minAngleDegrees"].as_f64().unwrap() - min.to_degrees()).abs() < 1e-9);
    assert_eq!(m["argmin"]["vertex"], "b");
}

#[test]
fn sphere_vertices_on_unit_sphere() {
    let k4 = r#"{"vertices":[{"id":"a"},{"id":"b"},{"id":"c"},{"id":"d"}],
        "edges":[["a","b"],["a","c"],["a","d"],["b","c"],["b","d"],["c","d"]]}"#;
    let scene = json(&ok(&["layout", "--method", "sphere"], k4));
    let vs = scene["vertices"].as_array().unwrap();
    assert_eq!(vs.len(), 4);
    for v in vs {
        let p: Vec<f64> = v["position"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
        assert!((p.iter().map(|x| x * x).sum::<f64>().sqrt() - 1.0).abs() < 1e-12);
    }
    let clusters: std::collections::BTreeSet<_> = vs.iter().map(|v| v["cluster"].as_u64().unwrap()).collect();
    assert_eq!(clusters.len(), 4);
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(run(&["bogus"], "").0, 1);
    assert_eq!(run(&["layout", "--method", "free", "--L", "3"], FOLDED_PATH).0, 1);
    assert_eq!(run(&["color-edges", "--localized", "--L", "0"], FOLDED_PATH).0, 1);
    assert_eq!(run(&["export", "--obj", "--samples", "1"], "").0, 1);
    let (code, out, _) = run(&["--help"], "");
    assert_eq!(code, 0);
    assert!(out.contains("layout"));
}

#[test]
fn invalid_input_exits_2() {
    assert_eq!(run(&["layout", "--method", "stationary"], "{not json").0, 2);
    let no_coords = r#"{"vertices":[{"id":"a"},{"id":"b"}],"edges":[["a","b"]]}"#;
    let (code, _, err) = run(&["layout", "--method", "stationary"], no_coords);
    assert_eq!(code, 2);
    assert!(err.contains("coordinates"), "{err}");
    let unknown = r#"{"vertices":[{"id":"a","x":0,"y":0}],"edges":[["a","zz"]]}"#;
    let (code, _, err) = run(&["color-edges"], unknown);
    assert_eq!(code, 2);
    assert!(err.contains("zz"), "{err}");
    assert_eq!(run(&["measure", "/nonexistent/scene.json"], "").0, 2);
}

#[test]
fn tampered_scene_exits_2() {
    let scene = ok(&["layout", "--method", "stationary"], FOLDED_PATH);
    let mut v = json(&scene);
    v["arcs"][0]["radius"] = Value::from(123.0);
    assert_eq!(run(&["check"], &v.to_string()).0, 2);
}

#[test]
fn mislabeled_scene_exits_3() {
    // a nearly folded planar path presented as a sphere scene: the chord
    // bound asin(|ac|/2) far exceeds the actual angle at b
    let g = Graph::from_indices(3, &[(0, 1), (1, 2)]).unwrap();
    let pos = vec![Vec3::new(1.0, 0.0, 0.0), Vec3::ZERO, Vec3::new(2.0, 0.01, 0.0)];
    let arcs = vec![
        CircularArc::new(pos[0], pos[1], 0.0, 0.0, Side::Positive).unwrap(),
        CircularArc::new(pos[1], pos[2], 0.0, 0.0, Side::Positive).unwrap(),
    ];
    let method = LayoutMethod::Sphere { epsilon: 0.01, min_cluster_distance: 0.5 };
    let d = ArcDiagram3D::new(g, pos, arcs, method, vec![0, 1, 2], 3).unwrap();
    let (code, out, _) = run(&["check"], &emit_scene(&d));
    assert_eq!(code, 3, "{out}");
    assert!(out.contains("FAIL"), "{out}");
}

#[test]
fn fan_resolution_in_meta() {
    let g = json(&ok(&["generate", "fan", "5", "--spread", "0.4"], ""));
    assert!((g["meta"]["resolution2d"].as_f64().unwrap() - 0.1).abs() < 1e-12);
    assert_eq!(g["edges"].as_array().unwrap().len(), 5);
}

#[test]
fn random_generation_is_seeded() {
    let a = ok(&["generate", "random", "--n", "20", "--d", "4", "--seed", "5"], "");
    assert_eq!(a, ok(&["generate", "random", "--n", "20", "--d", "4", "--seed", "5"], ""));
    assert_ne!(a, ok(&["generate", "random", "--n", "20", "--d", "4", "--seed", "6"], ""));
    let g = json(&a);
    assert_eq!(g["meta"]["seed"], 5);
}

#[test]
fn color_edges_output() {
    let star = ok(&["generate", "star", "6"], "");
    let plain = json(&ok(&["color-edges"], &star));
    assert_eq!(plain["paletteSize"], 6);
    assert_eq!(plain["conflicts"], 0);
    let local = json(&ok(&["color-edges", "--localized", "--L", "2"], &star));
    assert_eq!(local["window"], 2);
    assert_eq!(local["paletteSize"], 2);
    let colors: Vec<u64> = local["colors"].as_array().unwrap().iter().map(|c| c.as_u64().unwrap()).collect();
    for i in 0..6 {
        assert_ne!(colors[i], colors[(i + 1) % 6]);
    }
}

#[test]
fn obj_counts() {
    let graph = ok(&["generate", "grid", "3", "2"], "");
    let scene = ok(&["layout", "--method", "free"], &graph);
    let obj = ok(&["export", "--obj", "--samples", "10"], &scene);
    let count = |tag: &str| obj.lines().filter(|l| l.split_whitespace().next() == Some(tag)).count();
    assert_eq!(count("v"), 7 * 10);
    assert_eq!(count("l"), 7 * 9);
    assert_eq!(count("o"), 7);
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("arc3d-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("star.json");
    let p = path.to_str().unwrap();
    assert_eq!(ok(&["generate", "star", "4", "-o", p], ""), "");
    let scene = ok(&["layout", "--method", "free", p], "");
    assert!(parse_scene(&scene).is_ok());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_pipeline() {
    let exe = env!("CARGO_BIN_EXE_arc3d");
    let graph = Command::new(exe).args(["generate", "star", "5"]).output().unwrap();
    assert!(graph.status.success());
    let mut child = Command::new(exe)
        .args(["layout", "--method", "stationary"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&graph.stdout).unwrap();
    let scene = child.wait_with_output().unwrap();
    assert!(scene.status.success());
    let d = parse_scene(std::str::from_utf8(&scene.stdout).unwrap()).unwrap();
    assert_eq!(d.graph().edge_count(), 5);
    let bad = Command::new(exe).arg("nope").output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn folded_path_stationary_is_quarter_turn() {
    // both neighbours on the same side: in the plane the rays coincide
    let folded = r#"{"vertices":[{"id":"a","x":1,"y":0},{"id":"b","x":0,"y":0},{"id":"c","x":2,"y":0}],
        "edges":[["a","b"],["b","c"]]}"#;
    let scene = ok(&["layout", "--method", "stationary"], folded);
    let m = json(&ok(&["measure"], &scene));
    assert!((m["minAngle"].as_f64().unwrap() - FRAC_PI_4).abs() < 1e-12, "{m}");
}

#[test]
fn straight_path_stationary_is_three_quarter_turn() {
    let straight = r#"{"vertices":[{"id":"a","x":-1,"y":0},{"id":"b","x":0,"y":0},{"id":"c","x":1,"y":0}],
        "edges":[["a","b"],["b","c"]]}"#;
    let scene = ok(&["layout", "--method", "stationary"], straight);
    let m = json(&ok(&["measure"], &scene));
    assert!((m["minAngle"].as_f64().unwrap() - 3.0 * FRAC_PI_4).abs() < 1e-12, "{m}");
}
