//! Mapping class groups of marked surfaces stabilizing boundaries, the
//! cluster automorphism groups they present, and a desk-scale verification
//! toolkit: free-group words and finite presentations, homomorphic images,
//! abelianization by Smith normal form, bounded Todd-Coxeter coset
//! enumeration, Coxeter graphs and Artin fundamental elements, quiver
//! mutation with tagged triangulations and flips, and faithful combinatorial
//! actions (a piecewise-linear braid action on the punctured disk and an
//! arc-class action on the marked annulus).

pub mod action;
pub mod artin;
pub mod autgroup;
pub mod cluster;
pub mod error;
pub mod fourpunct;
pub mod perm;
pub mod presentations;
pub mod suites;
pub mod surface;
pub mod words;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
