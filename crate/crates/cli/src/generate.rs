//! Instance families with drawings. Every generator is a pure function of
//! its parameters (and seed).

use std::collections::BTreeSet;
use std::f64::consts::{FRAC_PI_2, PI};

use arc3d::{Drawing2D, Graph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph_file::{graph_to_file, GraphFile, GraphMeta};

#[derive(Debug, Clone, PartialEq, Error)]
#[error("bad parameters: {0}")]
pub struct BadParams(pub String);

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// Center `c` and leaves `l0..` evenly spaced on the unit circle.
    Star { k: usize },
    /// Center `c` and `k` leaves whose directions span `spread` radians.
    Fan { k: usize, spread: f64 },
    /// `w × h` lattice with unit spacing, vertices `x,y`.
    Grid { w: usize, h: usize },
    /// `n` vertices, max degree at most `d`, random or near-collinear
    /// positions.
    Random { n: usize, d: usize, seed: u64, near_collinear: bool },
}

pub struct Instance {
    pub graph: Graph,
    pub drawing: Drawing2D,
    pub meta: GraphMeta,
}

impl Instance {
    pub fn to_file(&self) -> GraphFile {
        graph_to_file(&self.graph, Some(&self.drawing), Some(self.meta.clone()))
    }
}

fn bad(msg: impl Into<String>) -> BadParams {
    BadParams(msg.into())
}

fn leaves(prefix: &str, angles: &[f64]) -> (Graph, Drawing2D) {
    let ids = std::iter::once("c".to_string()).chain((0..angles.len()).map(|i| format!("{prefix}{i}")));
    let edges: Vec<(String, String)> = (0..angles.len()).map(|i| ("c".to_string(), format!("{prefix}{i}"))).collect();
    let graph = Graph::build(ids, edges.iter().map(|(a, b)| (a.as_str(), b.as_str()))).expect("star is simple");
    let mut pos = vec![[0.0, 0.0]];
    pos.extend(angles.iter().map(|t| [t.cos(), t.sin()]));
    let drawing = Drawing2D::new(&graph, pos).expect("leaves are distinct");
    (graph, drawing)
}

pub fn generate(family: &Family) -> Result<Instance, BadParams> {
    match *family {
        Family::Star { k } => {
            if k == 0 {
                return Err(bad("star needs k >= 1"));
            }
            let angles: Vec<f64> = (0..k).map(|i| 2.0 * PI * i as f64 / k as f64).collect();
            let (graph, drawing) = leaves("l", &angles);
            let resolution = (k >= 2).then(|| 2.0 * PI / k as f64);
            Ok(Instance { graph, drawing, meta: meta("star", None, resolution) })
        }
        Family::Fan { k, spread } => {
            if k < 2 {
                return Err(bad("fan needs k >= 2"));
            }
            if !(spread > 0.0 && spread <= PI) {
                return Err(bad("fan spread must lie in (0, π]"));
            }
            let step = spread / (k - 1) as f64;
            let angles: Vec<f64> = (0..k).map(|i| i as f64 * step).collect();
            let (graph, drawing) = leaves("l", &angles);
            Ok(Instance { graph, drawing, meta: meta("fan", None, Some(step)) })
        }
        Family::Grid { w, h } => {
            if w == 0 || h == 0 {
                return Err(bad("grid needs w, h >= 1"));
            }
            let id = |x: usize, y: usize| format!("{x},{y}");
            let mut ids = Vec::new();
            let mut pos = Vec::new();
            let mut edges = Vec::new();
            for y in 0..h {
                for x in 0..w {
                    ids.push(id(x, y));
                    pos.push([x as f64, y as f64]);
                    if x + 1 < w {
                        edges.push((id(x, y), id(x + 1, y)));
                    }
                    if y + 1 < h {
                        edges.push((id(x, y), id(x, y + 1)));
                    }
                }
            }
            let graph = Graph::build(ids, edges.iter().map(|(a, b)| (a.as_str(), b.as_str()))).expect("grid is simple");
            let drawing = Drawing2D::new(&graph, pos).expect("lattice points are distinct");
            let resolution = if w >= 2 && h >= 2 {
                Some(FRAC_PI_2)
            } else if w.max(h) >= 3 {
                Some(PI)
            } else {
                None
            };
            Ok(Instance { graph, drawing, meta: meta("grid", None, resolution) })
        }
        Family::Random { n, d, seed, near_collinear } => random(n, d, seed, near_collinear),
    }
}

fn meta(family: &str, seed: Option<u64>, resolution_2d: Option<f64>) -> GraphMeta {
    GraphMeta { family: family.to_string(), seed, resolution_2d }
}

fn random(n: usize, d: usize, seed: u64, near_collinear: bool) -> Result<Instance, BadParams> {
    if n < 2 || d == 0 {
        return Err(bad("random needs n >= 2 and d >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let target = n * d / 2;
    let mut deg = vec![0usize; n];
    let mut seen = BTreeSet::new();
    let mut edges = Vec::new();
    for _ in 0..20 * target.max(1) {
        if edges.len() == target {
            break;
        }
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u == v || deg[u] == d || deg[v] == d || !seen.insert((u.min(v), u.max(v))) {
            continue;
        }
        deg[u] += 1;
        deg[v] += 1;
        edges.push((u, v));
    }
    let graph = Graph::from_indices(n, &edges).expect("edges are simple");
    let pos: Vec<[f64; 2]> = if near_collinear {
        // distinct x along a line, heights of order 1e-6
        let mut xs: Vec<usize> = (0..n).collect();
        xs.shuffle(&mut rng);
        xs.into_iter().map(|x| [x as f64 + 1.0, rng.gen_range(-1e-6..1e-6)]).collect()
    } else {
        (0..n).map(|_| [rng.gen_range(0.0..10.0), rng.gen_range(0.0..10.0)]).collect()
    };
    let drawing = Drawing2D::new(&graph, pos).map_err(|e| bad(format!("seed {seed} produced an invalid drawing: {e}")))?;
    let resolution = drawing.angular_resolution(&graph).ok();
    let family = if near_collinear { "random-collinear" } else { "random" };
    Ok(Instance { graph, drawing, meta: meta(family, Some(seed), resolution) })
}
