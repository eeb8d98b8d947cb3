//! Exact Turán and anti-Ramsey computations for multipartite cycles in
//! complete multipartite graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`] and [`coloring`]: hosts, subgraphs and edge colourings, with
//!   the text formats in [`format`];
//! * [`patterns`]: detectors for triangles, multipartite cycles and the
//!   wedge/cycle family used by the anti-Ramsey argument;
//! * [`constructions`]: closed-form values and explicit extremal objects;
//! * [`search`]: exact branch-and-bound optimisers producing certificates;
//! * [`verify`]: a harness that cross-checks all of the above.

pub mod coloring;
pub mod constructions;
pub mod error;
pub mod format;
pub mod graph;
pub mod patterns;
pub mod search;
pub mod verify;

pub use coloring::EdgeColoring;
pub use error::{Error, Result};
pub use graph::{Edge, PartSizes, PartitionedGraph, VertexRef};
pub use patterns::{PatternCopy, PatternKind};

/// Version string embedded in certificates and reports.
pub const TOOL_VERSION: &str = concat!("multex ", env!("CARGO_PKG_VERSION"));
