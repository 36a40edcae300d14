//! Misra–Gries constructive proof of Vizing's theorem: every simple graph of
//! maximum degree `d` has a proper edge coloring with `d + 1` colors.

use alloc::vec::Vec;

use super::EdgeColoring;
use crate::graph::{EdgeId, Graph, VertexIdx};

const NONE: usize = usize::MAX;

struct MisraGries<'g> {
    graph: &'g Graph,
    palette: usize,
    color: Vec<usize>,
    // at[v * palette + c] = edge at v with color c
    at: Vec<EdgeId>,
}

impl<'g> MisraGries<'g> {
    fn new(graph: &'g Graph) -> Self {
        let palette = graph.max_degree() + 1;
        MisraGries {
            graph,
            palette,
            color: alloc::vec![NONE; graph.edge_count()],
            at: alloc::vec![NONE; graph.vertex_count() * palette],
        }
    }

    fn edge_at(&self, v: VertexIdx, c: usize) -> EdgeId {
        self.at[v * self.palette + c]
    }

    fn is_free(&self, v: VertexIdx, c: usize) -> bool {
        self.edge_at(v, c) == NONE
    }

    fn free_color(&self, v: VertexIdx) -> usize {
        (0..self.palette).find(|&c| self.is_free(v, c)).expect("degree < palette")
    }

    fn uncolor(&mut self, e: EdgeId) {
        let c = self.color[e];
        if c != NONE {
            let (u, v) = self.graph.endpoints(e);
            self.at[u * self.palette + c] = NONE;
            self.at[v * self.palette + c] = NONE;
            self.color[e] = NONE;
        }
    }

    fn set(&mut self, e: EdgeId, c: usize) {
        let (u, v) = self.graph.endpoints(e);
        debug_assert!(self.is_free(u, c) && self.is_free(v, c));
        self.at[u * self.palette + c] = e;
        self.at[v * self.palette + c] = e;
        self.color[e] = c;
    }

    /// Maximal fan at `u` starting with the uncolored edge `first`: a sequence
    /// of distinct edges `(u, f_0), (u, f_1), ...` where the color of
    /// `(u, f_{i+1})` is free on `f_i`.
    fn fan(&self, u: VertexIdx, first: EdgeId) -> Vec<EdgeId> {
        let mut fan = alloc::vec![first];
        let mut last = self.graph.opposite(first, u);
        loop {
            let next = self.graph.incident(u).iter().copied().find(|&e| {
                let c = self.color[e];
                c != NONE && self.is_free(last, c) && !fan.contains(&e)
            });
            match next {
                Some(e) => {
                    fan.push(e);
                    last = self.graph.opposite(e, u);
                }
                None => return fan,
            }
        }
    }

    /// Swaps colors `c` and `d` along the maximal path from `u` whose edges
    /// alternate `d, c, d, ...`. Requires `c` free on `u`.
    fn invert_path(&mut self, u: VertexIdx, c: usize, d: usize) {
        let mut path = Vec::new();
        let (mut x, mut want) = (u, d);
        loop {
            let e = self.edge_at(x, want);
            if e == NONE {
                break;
            }
            path.push(e);
            x = self.graph.opposite(e, x);
            want = if want == d { c } else { d };
        }
        let old: Vec<usize> = path.iter().map(|&e| self.color[e]).collect();
        for &e in &path {
            self.uncolor(e);
        }
        for (&e, &col) in path.iter().zip(&old) {
            self.set(e, if col == c { d } else { c });
        }
    }

    fn color_edge(&mut self, e: EdgeId) {
        let (u, _) = self.graph.endpoints(e);
        let fan = self.fan(u, e);
        let tip = self.graph.opposite(*fan.last().unwrap(), u);
        let c = self.free_color(u);
        let d = self.free_color(tip);
        if c != d {
            self.invert_path(u, c, d);
        }
        let w = fan
            .iter()
            .position(|&f| self.is_free(self.graph.opposite(f, u), d))
            .expect("some fan vertex has d free after inversion");
        let shifted: Vec<usize> = (0..w).map(|i| self.color[fan[i + 1]]).collect();
        for &f in &fan[..=w] {
            self.uncolor(f);
        }
        for (i, &col) in shifted.iter().enumerate() {
            self.set(fan[i], col);
        }
        self.set(fan[w], d);
    }

    fn run(mut self) -> EdgeColoring {
        for e in 0..self.graph.edge_count() {
            self.color_edge(e);
        }
        EdgeColoring::from_colors(self.color)
    }
}

/// Proper edge coloring with at most `max_degree + 1` colors. Edges are
/// inserted in input order, so the result is deterministic.
pub fn edge_coloring_vizing(graph: &Graph) -> EdgeColoring {
    MisraGries::new(graph).run()
}
