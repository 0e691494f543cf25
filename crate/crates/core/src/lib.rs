//! Edge ideals of vertex-weighted oriented graphs.
//!
//! The crate computes primary decompositions through strong vertex covers,
//! generalized Alexander duals, polarizations and the auxiliary graph `G^D`,
//! chordality of complements, and Cohen-Macaulayness both from
//! classification rules and from a homological oracle.

pub mod alexander;
pub mod chordal;
pub mod cli;
pub mod cm;
pub mod covers;
pub mod decomp;
pub mod error;
pub mod graph;
pub mod ideal;
pub mod polarize;
pub mod samples;
pub mod simplicial;
pub mod sweep;
pub mod vset;

pub use error::{Error, Result};
pub use graph::{SimpleGraph, SourceWeights, VoGraph};
pub use ideal::{Monomial, MonomialIdeal};
pub use vset::VertexSet;
