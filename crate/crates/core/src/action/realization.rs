//! Mapping classes realized as flip sequences with relabelling and tag
//! changes on a base triangulation. Two realizations over the same base are
//! equal exactly when they produce the same image triangulation with the
//! same relabelling and the same tag-change set.

use crate::action::AnnulusMappingClass;
use crate::cluster::TaggedTriangulation;
use crate::perm::Perm;
use crate::{Error, Result};
use std::collections::BTreeSet;

/// Anything that composes like a mapping class and can recognize itself as
/// the identity.
pub trait MappingClass: Clone {
    fn compose(&self, other: &Self) -> Result<Self>;
    fn is_identity_class(&self) -> bool;
}

/// A mapping class presented on a base triangulation: a flip path, an arc
/// relabelling and a set of punctures whose tags are switched.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MappingClassRealization {
    base: TaggedTriangulation,
    path: Vec<usize>,
    relabel: Perm,
    tagflips: BTreeSet<usize>,
}

impl MappingClassRealization {
    pub fn identity(base: TaggedTriangulation) -> Self {
        let n = base.n_arcs();
        MappingClassRealization { base, path: Vec::new(), relabel: Perm::identity(n), tagflips: BTreeSet::new() }
    }

    pub fn new(
        base: TaggedTriangulation,
        path: Vec<usize>,
        relabel: Perm,
        tagflips: BTreeSet<usize>,
    ) -> Result<Self> {
        if relabel.degree() != base.n_arcs() {
            return Err(Error::DegreeMismatch(format!(
                "relabelling degree {} for {} arcs",
                relabel.degree(),
                base.n_arcs()
            )));
        }
        if let Some(&p) = tagflips.iter().find(|&&p| p >= base.n_punctures()) {
            return Err(Error::BadIndex(format!("tag change at non-puncture {p}")));
        }
        let r = MappingClassRealization { base, path, relabel, tagflips };
        r.image()?; // path must be valid stepwise
        Ok(r)
    }

    pub fn base(&self) -> &TaggedTriangulation {
        &self.base
    }

    pub fn path(&self) -> &[usize] {
        &self.path
    }

    pub fn relabel(&self) -> &Perm {
        &self.relabel
    }

    pub fn tagflips(&self) -> &BTreeSet<usize> {
        &self.tagflips
    }

    /// The image triangulation: the base pushed through the flip path.
    pub fn image(&self) -> Result<TaggedTriangulation> {
        let mut t = self.base.clone();
        for &arc in &self.path {
            t = t.flip(arc)?;
        }
        Ok(t)
    }

    pub fn inverse(&self) -> Result<MappingClassRealization> {
        // Reverse the flips, transported through the inverse relabelling.
        let inv = self.relabel.inverse();
        let path =
            self.path.iter().rev().map(|&arc| inv.apply(arc)).collect();
        let tagflips = self.tagflips.clone();
        MappingClassRealization::new(self.base.clone(), path, inv, tagflips)
    }
}

impl MappingClass for MappingClassRealization {
    /// `self ∘ other`: other's flips first, then self's flips transported
    /// through other's relabelling; relabellings compose, tag-change sets
    /// add symmetrically.
    fn compose(&self, other: &Self) -> Result<Self> {
        if self.base != other.base {
            return Err(Error::BaseMismatch);
        }
        let mut path = other.path.clone();
        path.extend(self.path.iter().map(|&arc| other.relabel.apply(arc)));
        // Cancel adjacent equal flips: flipping the same label twice is the
        // identity on triangulations.
        let mut reduced: Vec<usize> = Vec::with_capacity(path.len());
        for arc in path {
            if reduced.last() == Some(&arc) {
                reduced.pop();
            } else {
                reduced.push(arc);
            }
        }
        let relabel = other.relabel.compose(&self.relabel);
        let tagflips: BTreeSet<usize> =
            self.tagflips.symmetric_difference(&other.tagflips).copied().collect();
        MappingClassRealization::new(self.base.clone(), reduced, relabel, tagflips)
    }

    fn is_identity_class(&self) -> bool {
        self.relabel.is_identity()
            && self.tagflips.is_empty()
            && self.image().map(|t| t == self.base).unwrap_or(false)
    }
}

impl MappingClass for AnnulusMappingClass {
    fn compose(&self, other: &Self) -> Result<Self> {
        Ok(AnnulusMappingClass::compose(self, other))
    }

    fn is_identity_class(&self) -> bool {
        AnnulusMappingClass::is_identity_class(self)
    }
}

/// True iff `t, t², …, t^K` are all different from the identity — evidence
/// of infinite order at the tested depth.
pub fn infinite_order_witness<T: MappingClass>(t: &T, k: usize) -> Result<bool> {
    let mut acc = t.clone();
    for _ in 0..k {
        if acc.is_identity_class() {
            return Ok(false);
        }
        acc = acc.compose(t)?;
    }
    Ok(true)
}
