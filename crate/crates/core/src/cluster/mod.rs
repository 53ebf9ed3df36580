//! Skew-symmetrizable matrix mutation, labelled seeds with isomorphism
//! testing, and tagged triangulations with flips and signed adjacency
//! matrices.

mod matrix;
mod seed;
mod triangulation;

pub use matrix::ExchangeMatrix;
pub use seed::{mutation_path, seed_isomorphic, seed_isomorphisms, Seed};
pub use triangulation::{Side, Tag, TaggedTriangulation, TriangulationFile};
