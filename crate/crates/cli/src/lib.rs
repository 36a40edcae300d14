//! File formats, instance generators, and the `arc3d` command line.
//!
//! Graph documents ([`graph_file`]) go in, scene documents ([`scene`]) and
//! OBJ polylines ([`obj`]) come out. [`cli::run`] is the whole program and
//! is what the binary calls.

pub mod cli;
pub mod error;
pub mod generate;
pub mod graph_file;
pub mod obj;
pub mod scene;

pub use error::{CliError, FormatError};
pub use graph_file::{emit_graph, parse_graph, GraphFile, ParsedGraph};
pub use obj::export_obj;
pub use scene::{emit_scene, parse_scene, SceneFile};
