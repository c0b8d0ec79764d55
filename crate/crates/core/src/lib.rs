//! Exact computation of chromatic symmetric functions of vertex-weighted graphs.

pub mod corpus;
pub mod dense;
pub mod engine;
pub mod error;
pub mod graph;
mod memo;
pub mod oriented;
pub mod partition;
pub mod symfunc;
pub mod verify;

pub use error::{CsfError, Result};
pub use graph::{EdgeId, Orientation, VertexId, WeightedGraph};
pub use partition::{is_refinement, partitions_of, Partition};
pub use symfunc::{Basis, Rational, SymFunc};
