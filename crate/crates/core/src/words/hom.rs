//! Checking that assigned images satisfy the relators of a presentation.

use crate::perm::Perm;
use crate::words::{Presentation, Word};
use crate::{Error, Result};

/// Target group of a homomorphism check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomTarget {
    /// The symmetric group on `{0, …, degree-1}`.
    Permutation { degree: usize },
    /// `Z^rank` written additively.
    FreeAbelian { rank: usize },
}

/// An element of a [`HomTarget`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TargetElement {
    Perm(Perm),
    Vector(Vec<i64>),
}

/// First relator whose image is not the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelatorFailure {
    pub relator_index: usize,
    pub image: TargetElement,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOutcome {
    pub ok: bool,
    pub failure: Option<RelatorFailure>,
}

fn eval_perm(word: &Word, images: &[Perm], degree: usize) -> Perm {
    // Left-to-right letters compose as functions applied right-to-left;
    // for relator checking only identity-ness matters, so any consistent
    // convention works. We use w = l1 l2 … lk ↦ img(l1)∘img(l2)∘…∘img(lk).
    let mut acc = Perm::identity(degree);
    for l in word.letters() {
        let p = if l.inv { images[l.gen].inverse() } else { images[l.gen].clone() };
        acc = acc.compose(&p);
    }
    acc
}

fn eval_vector(word: &Word, images: &[Vec<i64>], rank: usize) -> Vec<i64> {
    let mut acc = vec![0i64; rank];
    for l in word.letters() {
        let sign = if l.inv { -1 } else { 1 };
        for (a, b) in acc.iter_mut().zip(&images[l.gen]) {
            *a += sign * b;
        }
    }
    acc
}

/// Evaluates every relator of `p` under the generator images and reports
/// whether all map to the identity of the target, together with the first
/// failing relator if not.
pub fn verify_homomorphism(
    p: &Presentation,
    images: &[TargetElement],
    target: &HomTarget,
) -> Result<VerifyOutcome> {
    if images.len() != p.n_gens() {
        return Err(Error::DegreeMismatch(format!(
            "{} images for {} generators",
            images.len(),
            p.n_gens()
        )));
    }
    match target {
        HomTarget::Permutation { degree } => {
            let mut perms = Vec::with_capacity(images.len());
            for im in images {
                match im {
                    TargetElement::Perm(q) if q.degree() == *degree => perms.push(q.clone()),
                    TargetElement::Perm(q) => {
                        return Err(Error::DegreeMismatch(format!(
                            "permutation of degree {} against target degree {}",
                            q.degree(),
                            degree
                        )))
                    }
                    TargetElement::Vector(_) => {
                        return Err(Error::DegreeMismatch("vector image for permutation target".into()))
                    }
                }
            }
            for (i, r) in p.relators().iter().enumerate() {
                let img = eval_perm(r, &perms, *degree);
                if !img.is_identity() {
                    return Ok(VerifyOutcome {
                        ok: false,
                        failure: Some(RelatorFailure { relator_index: i, image: TargetElement::Perm(img) }),
                    });
                }
            }
        }
        HomTarget::FreeAbelian { rank } => {
            let mut vecs = Vec::with_capacity(images.len());
            for im in images {
                match im {
                    TargetElement::Vector(v) if v.len() == *rank => vecs.push(v.clone()),
                    TargetElement::Vector(v) => {
                        return Err(Error::DegreeMismatch(format!(
                            "vector of rank {} against target rank {}",
                            v.len(),
                            rank
                        )))
                    }
                    TargetElement::Perm(_) => {
                        return Err(Error::DegreeMismatch("permutation image for abelian target".into()))
                    }
                }
            }
            for (i, r) in p.relators().iter().enumerate() {
                let img = eval_vector(r, &vecs, *rank);
                if img.iter().any(|&x| x != 0) {
                    return Ok(VerifyOutcome {
                        ok: false,
                        failure: Some(RelatorFailure { relator_index: i, image: TargetElement::Vector(img) }),
                    });
                }
            }
        }
    }
    Ok(VerifyOutcome { ok: true, failure: None })
}

/// Standard permutation images for a surface presentation: half twists map
/// to adjacent transpositions of the strand positions, every kind of Dehn
/// twist maps to the identity.
pub fn theta_images(p: &Presentation, degree: usize) -> Result<Vec<TargetElement>> {
    p.generators()
        .iter()
        .map(|g| match g.role {
            crate::words::GeneratorRole::HalfTwist { strand } => {
                if strand == 0 || strand >= degree {
                    return Err(Error::BadIndex(format!(
                        "half twist strand {strand} for degree {degree}"
                    )));
                }
                Ok(TargetElement::Perm(Perm::transposition(degree, strand - 1, strand)?))
            }
            _ => Ok(TargetElement::Perm(Perm::identity(degree))),
        })
        .collect()
}
