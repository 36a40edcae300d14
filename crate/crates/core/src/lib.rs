//! Three-dimensional arc diagrams with provable angular resolution.
//!
//! Vertices live on a base plane (`z = 0`) or on the unit sphere; every edge is
//! a circular arc on one side of that surface. The crate provides the graph
//! plumbing (rotation systems, squared graphs), the colorings the layouts are
//! built from (greedy vertex coloring, Misra–Gries edge coloring, and
//! L-localized edge coloring), exact arc geometry, the four layout
//! constructions, and a certifier that checks every incident pair of arcs
//! against the lower bound its construction promises.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, generators, and
//! the command line live in `arc3d-cli`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod coloring;
pub mod diagram;
pub mod geometry;
pub mod graph;
pub mod layout;
mod math;

pub use coloring::{EdgeColoring, VertexColoring};
pub use diagram::{ArcDiagram3D, DiagramError, LayoutMethod, SlantedInterpretation};
pub use geometry::{CircularArc, Endpoint, Vec3};
pub use graph::{Drawing2D, EdgeId, Graph, GraphError, RotationSystem, VertexIdx};

/// Absolute tolerance used on angles throughout the certifier.
pub const ANGLE_TOLERANCE: f64 = 1e-9;
