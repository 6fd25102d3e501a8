//! Strongly regular graphs, their two-distance Euclidean representations and
//! machine-checkable Borsuk counterexample certificates.

pub mod bits;
pub mod borsuk;
pub mod cli;
pub mod clique;
pub mod euclid;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod partition;
pub mod pg;
pub mod srg;

pub use graph::{verify_srg, Graph, GraphError, SrgStructure, VertexSet};
pub use srg::{SrgParams, Spectrum};
