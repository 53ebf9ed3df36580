//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("surface is excluded from the triangulation setting: {0}")]
    ExcludedSurface(String),

    #[error("operation requires genus {expected}, surface has genus {found}")]
    GenusMismatch { expected: &'static str, found: u32 },

    #[error("surface class {0:?} is not accepted here")]
    WrongSurfaceClass(String),

    #[error("unknown generator id {id} (presentation has {n_gens} generators)")]
    UnknownGenerator { id: usize, n_gens: usize },

    #[error("index out of range: {0}")]
    BadIndex(String),

    #[error("image count or degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),

    #[error("induced Coxeter subgraph is not of a supported type: {0}")]
    UnsupportedSubgraph(String),

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("elements belong to different surfaces")]
    SurfaceMismatch,

    #[error("triangulation is inconsistent: {0}")]
    BadTriangulation(String),

    #[error("flip is not defined here: {0}")]
    BadFlip(String),

    #[error("matrix is not skew-symmetrizable with the given symmetrizer")]
    NotSkewSymmetrizable,

    #[error("realizations have different base triangulations")]
    BaseMismatch,

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
