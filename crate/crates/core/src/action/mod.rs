//! Faithful combinatorial actions used to verify relators: the
//! piecewise-linear braid action on integer disk coordinates, the arc-class
//! action on triangulations of the marked annulus, and flip-path
//! realizations of mapping classes.

mod annulus;
mod dynnikov;
mod realization;

pub use annulus::{AnnulusGenerator, AnnulusMappingClass, AnnulusState, BridgeArc};
pub use dynnikov::{act_word, apply_braid_letter, random_coordinates, DiskCoordinates};
pub use realization::{infinite_order_witness, MappingClass, MappingClassRealization};
