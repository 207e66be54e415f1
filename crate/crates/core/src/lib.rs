//! Robust clique complexes and total cut complexes of graphs, with exact
//! integral simplicial homology and an executable verification harness.

pub mod cli;
pub mod complex;
pub mod error;
pub mod graph;
pub mod harness;
pub mod homology;
pub mod io;
pub mod vertex_set;

pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use graph::Graph;
pub use vertex_set::VertexSet;
