//! Certifying recognition of (s,k)-polar cographs.
//!
//! A graph is (s,k)-polar when its vertices split into a complete multipartite
//! part with at most `s` parts and a disjoint union of at most `k` cliques.
//! For cographs this is decided by a dynamic program over the cotree; failures
//! are certified by embedded minimal obstructions drawn from a catalog of the
//! 50 cograph minimal 2-polar obstructions.

pub mod catalog;
pub mod certify;
pub mod cograph;
pub mod expr;
pub mod graph;
pub mod polarity;
pub mod verify;

pub use graph::{Graph, VertexSet};
