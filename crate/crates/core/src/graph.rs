//! Graphs, straight-line drawings and rotation systems.
//!
//! Vertices carry opaque string ids but are addressed internally by their
//! position in the input vertex list ([`VertexIdx`]). Edges are addressed by
//! their position in the input edge list ([`EdgeId`]); colorings, rotations and
//! layouts all refer to edges through that index.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::math;

pub type VertexIdx = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GraphError {
    #[error("duplicate vertex id `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex id `{0}`")]
    UnknownVertex(String),
    #[error("self-loop at vertex `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge `{0}`-`{1}`")]
    DuplicateEdge(String, String),
    #[error("vertex `{0}` has no position")]
    MissingPosition(String),
    #[error("vertex `{0}` has a non-finite coordinate")]
    NonFinitePosition(String),
    #[error("vertices `{0}` and `{1}` share a position")]
    CoincidentVertices(String, String),
    #[error("edges {1} and {2} leave vertex `{0}` in the same direction")]
    CoincidentDirections(String, EdgeId, EdgeId),
    #[error("no vertex has two incident edges")]
    NoAngles,
    #[error("rotation at vertex `{0}` is not a permutation of its incident edges")]
    InvalidRotation(String),
}

/// Simple undirected graph.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    ids: Vec<String>,
    lookup: BTreeMap<String, VertexIdx>,
    edges: Vec<(VertexIdx, VertexIdx)>,
    incident: Vec<Vec<EdgeId>>,
}

impl Graph {
    /// Builds a graph from vertex ids and edges given as id pairs.
    pub fn build<V, E, A, B>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let mut ids = Vec::new();
        let mut lookup = BTreeMap::new();
        for id in vertices {
            let id: String = id.into();
            if lookup.insert(id.clone(), ids.len()).is_some() {
                return Err(GraphError::DuplicateVertex(id));
            }
            ids.push(id);
        }
        let mut pairs = Vec::new();
        for (a, b) in edges {
            let find = |s: &str| {
                lookup
                    .get(s)
                    .copied()
                    .ok_or_else(|| GraphError::UnknownVertex(s.to_string()))
            };
            pairs.push((find(a.as_ref())?, find(b.as_ref())?));
        }
        Self::assemble(ids, lookup, pairs)
    }

    /// Builds a graph on `n` vertices named `"0"`, `"1"`, ... from index pairs.
    ///
    /// Panics if an index is out of range.
    pub fn from_indices(n: usize, edges: &[(VertexIdx, VertexIdx)]) -> Result<Self, GraphError> {
        let ids: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let lookup = ids.iter().cloned().zip(0..n).collect();
        assert!(edges.iter().all(|&(u, v)| u < n && v < n), "vertex index out of range");
        Self::assemble(ids, lookup, edges.to_vec())
    }

    fn assemble(
        ids: Vec<String>,
        lookup: BTreeMap<String, VertexIdx>,
        pairs: Vec<(VertexIdx, VertexIdx)>,
    ) -> Result<Self, GraphError> {
        let mut seen = BTreeSet::new();
        let mut incident = alloc::vec![Vec::new(); ids.len()];
        for (e, &(u, v)) in pairs.iter().enumerate() {
            if u == v {
                return Err(GraphError::SelfLoop(ids[u].clone()));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge(ids[u].clone(), ids[v].clone()));
            }
            incident[u].push(e);
            incident[v].push(e);
        }
        Ok(Graph { ids, lookup, edges: pairs, incident })
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_id(&self, v: VertexIdx) -> &str {
        &self.ids[v]
    }

    pub fn vertex_ids(&self) -> &[String] {
        &self.ids
    }

    pub fn index_of(&self, id: &str) -> Option<VertexIdx> {
        self.lookup.get(id).copied()
    }

    pub fn edges(&self) -> &[(VertexIdx, VertexIdx)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexIdx, VertexIdx) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `v`.
    pub fn opposite(&self, e: EdgeId, v: VertexIdx) -> VertexIdx {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    /// Incident edges of `v` in input order.
    pub fn incident(&self, v: VertexIdx) -> &[EdgeId] {
        &self.incident[v]
    }

    pub fn degree(&self, v: VertexIdx) -> usize {
        self.incident[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.incident.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: VertexIdx) -> impl Iterator<Item = VertexIdx> + '_ {
        self.incident[v].iter().map(move |&e| self.opposite(e, v))
    }

    /// Do `e` and `f` share an endpoint?
    pub fn adjacent_edges(&self, e: EdgeId, f: EdgeId) -> bool {
        let (a, b) = self.edges[e];
        let (c, d) = self.edges[f];
        a == c || a == d || b == c || b == d
    }

    /// The square graph: same vertices, `u ~ w` iff `u` and `w` are joined by
    /// a path of length one or two. Edges are listed in lexicographic order of
    /// their (smaller, larger) index pair.
    pub fn square(&self) -> Graph {
        let mut pairs = BTreeSet::new();
        for v in 0..self.vertex_count() {
            for u in self.neighbors(v) {
                pairs.insert((v.min(u), v.max(u)));
                for w in self.neighbors(u) {
                    if w != v {
                        pairs.insert((v.min(w), v.max(w)));
                    }
                }
            }
        }
        let n = self.vertex_count();
        let mut incident = alloc::vec![Vec::new(); n];
        let edges: Vec<_> = pairs.into_iter().collect();
        for (e, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(e);
            incident[v].push(e);
        }
        Graph { ids: self.ids.clone(), lookup: self.lookup.clone(), edges, incident }
    }
}

/// Straight-line drawing of a graph in the base plane.
#[derive(Debug, Clone, PartialEq)]
pub struct Drawing2D {
    positions: Vec<[f64; 2]>,
}

impl Drawing2D {
    /// `positions[v]` is the location of vertex `v`. Positions must be finite
    /// and pairwise distinct.
    pub fn new(graph: &Graph, positions: Vec<[f64; 2]>) -> Result<Self, GraphError> {
        if positions.len() < graph.vertex_count() {
            return Err(GraphError::MissingPosition(
                graph.vertex_id(positions.len()).to_string(),
            ));
        }
        if let Some(v) = positions.iter().position(|p| !p[0].is_finite() || !p[1].is_finite()) {
            return Err(GraphError::NonFinitePosition(graph.vertex_id(v).to_string()));
        }
        let mut order: Vec<VertexIdx> = (0..positions.len()).collect();
        order.sort_by(|&a, &b| {
            positions[a][0]
                .total_cmp(&positions[b][0])
                .then(positions[a][1].total_cmp(&positions[b][1]))
        });
        for w in order.windows(2) {
            if positions[w[0]] == positions[w[1]] {
                let (a, b) = (w[0].min(w[1]), w[0].max(w[1]));
                return Err(GraphError::CoincidentVertices(
                    graph.vertex_id(a).to_string(),
                    graph.vertex_id(b).to_string(),
                ));
            }
        }
        Ok(Drawing2D { positions })
    }

    pub fn position(&self, v: VertexIdx) -> [f64; 2] {
        self.positions[v]
    }

    pub fn positions(&self) -> &[[f64; 2]] {
        &self.positions
    }

    /// Direction vector of `e` leaving `v`.
    pub fn direction(&self, graph: &Graph, e: EdgeId, v: VertexIdx) -> [f64; 2] {
        let p = self.positions[v];
        let q = self.positions[graph.opposite(e, v)];
        [q[0] - p[0], q[1] - p[1]]
    }

    /// Mathematical angle in `(-π, π]` of `e` leaving `v`.
    pub fn direction_angle(&self, graph: &Graph, e: EdgeId, v: VertexIdx) -> f64 {
        let d = self.direction(graph, e, v);
        math::atan2(d[1], d[0])
    }

    /// Angle in `[0, π]` between `e` and `f` at their shared vertex `v`.
    pub fn angle_at(&self, graph: &Graph, v: VertexIdx, e: EdgeId, f: EdgeId) -> f64 {
        let a = self.direction(graph, e, v);
        let b = self.direction(graph, f, v);
        let cross = a[0] * b[1] - a[1] * b[0];
        let dot = a[0] * b[0] + a[1] * b[1];
        math::atan2(cross.abs(), dot)
    }

    /// Incident edges of `v` sorted clockwise (decreasing angle), starting
    /// from the largest angle in `(-π, π]`.
    fn clockwise(&self, graph: &Graph, v: VertexIdx) -> Result<Vec<(EdgeId, f64)>, GraphError> {
        let mut dirs: Vec<(EdgeId, f64)> = graph
            .incident(v)
            .iter()
            .map(|&e| (e, self.direction_angle(graph, e, v)))
            .collect();
        dirs.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
        let k = dirs.len();
        if k >= 2 {
            for i in 0..k {
                let (e, f) = (dirs[i].0, dirs[(i + 1) % k].0);
                let a = self.direction(graph, e, v);
                let b = self.direction(graph, f, v);
                let cross = a[0] * b[1] - a[1] * b[0];
                let dot = a[0] * b[0] + a[1] * b[1];
                if cross == 0.0 && dot > 0.0 {
                    return Err(GraphError::CoincidentDirections(
                        graph.vertex_id(v).to_string(),
                        e.min(f),
                        e.max(f),
                    ));
                }
            }
        }
        Ok(dirs)
    }

    /// Rotation system read off the drawing: at each vertex, incident edges
    /// in clockwise order (decreasing mathematical angle, x right and y up).
    pub fn rotation_system(&self, graph: &Graph) -> Result<RotationSystem, GraphError> {
        let mut order = Vec::with_capacity(graph.vertex_count());
        for v in 0..graph.vertex_count() {
            order.push(self.clockwise(graph, v)?.into_iter().map(|(e, _)| e).collect());
        }
        RotationSystem::new(graph, order)
    }

    /// Smallest angle between two edges sharing a vertex.
    pub fn angular_resolution(&self, graph: &Graph) -> Result<f64, GraphError> {
        let mut best: Option<f64> = None;
        for v in 0..graph.vertex_count() {
            if graph.degree(v) < 2 {
                continue;
            }
            let dirs = self.clockwise(graph, v)?;
            let k = dirs.len();
            for i in 0..k {
                let gap = if i + 1 < k {
                    dirs[i].1 - dirs[i + 1].1
                } else {
                    2.0 * PI - (dirs[0].1 - dirs[k - 1].1)
                };
                let gap = gap.min(2.0 * PI - gap);
                best = Some(best.map_or(gap, |b: f64| b.min(gap)));
            }
        }
        best.ok_or(GraphError::NoAngles)
    }
}

/// Cyclic clockwise order of incident edges around each vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct RotationSystem {
    order: Vec<Vec<EdgeId>>,
    // slot[e] = (position of e around its first endpoint, around its second)
    slot: Vec<(usize, usize)>,
}

impl RotationSystem {
    pub fn new(graph: &Graph, order: Vec<Vec<EdgeId>>) -> Result<Self, GraphError> {
        if order.len() != graph.vertex_count() {
            let v = order.len().min(graph.vertex_count().saturating_sub(1));
            return Err(GraphError::InvalidRotation(
                graph.vertex_ids().get(v).cloned().unwrap_or_default(),
            ));
        }
        let mut slot = alloc::vec![(usize::MAX, usize::MAX); graph.edge_count()];
        for (v, cyc) in order.iter().enumerate() {
            let invalid = || GraphError::InvalidRotation(graph.vertex_id(v).to_string());
            if cyc.len() != graph.degree(v) {
                return Err(invalid());
            }
            for (i, &e) in cyc.iter().enumerate() {
                if e >= graph.edge_count() {
                    return Err(invalid());
                }
                let (a, b) = graph.endpoints(e);
                let s = if a == v {
                    &mut slot[e].0
                } else if b == v {
                    &mut slot[e].1
                } else {
                    return Err(invalid());
                };
                if *s != usize::MAX {
                    return Err(invalid());
                }
                *s = i;
            }
        }
        Ok(RotationSystem { order, slot })
    }

    /// Rotation listing incident edges in input order.
    pub fn input_order(graph: &Graph) -> Self {
        let order = (0..graph.vertex_count()).map(|v| graph.incident(v).to_vec()).collect();
        Self::new(graph, order).expect("incidence lists form a rotation")
    }

    pub fn around(&self, v: VertexIdx) -> &[EdgeId] {
        &self.order[v]
    }

    /// Position of `e` in the cyclic order around its endpoint `v`.
    pub fn position(&self, graph: &Graph, e: EdgeId, v: VertexIdx) -> usize {
        let (a, _) = graph.endpoints(e);
        if a == v {
            self.slot[e].0
        } else {
            self.slot[e].1
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.order.len()
    }
}
