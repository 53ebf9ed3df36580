//! Free-group words, finite presentations, and the verification toolkit:
//! homomorphism checking against permutation and free-abelian targets,
//! abelianization via Smith normal form, bounded Todd-Coxeter coset
//! enumeration, and the short-exact-sequence presentation assembler.

mod extension;
mod grammar;
mod hom;
mod presentation;
mod snf;
mod todd_coxeter;
mod word;

pub use extension::{assemble_extension, ExtensionData};
pub use grammar::{presentation_from_json, presentation_from_text, presentation_to_json, presentation_to_text};
pub use hom::{theta_images, verify_homomorphism, HomTarget, RelatorFailure, TargetElement, VerifyOutcome};
pub use presentation::{Generator, GeneratorRole, Presentation};
pub use snf::{abelianization, elementary_divisors, smith_normal_form};
pub use todd_coxeter::{todd_coxeter, CosetOutcome};
pub use word::{free_reduce, Letter, Word};
