//! Arc-class action on triangulations of the unpunctured annulus with p
//! outer and q inner marked points. A state is the set of bridging arcs of
//! a triangulation; the 1/p and 1/q boundary twists and (for p = q) the
//! boundary swap act by exact bookkeeping on arc classes.

use crate::{Error, Result};
use std::collections::BTreeSet;

/// A bridging arc from outer mark `outer` to inner mark `inner`, with
/// `shift` counting full turns: its angular displacement is
/// `inner/q + shift − outer/p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct BridgeArc {
    pub outer: u32,
    pub inner: u32,
    pub shift: i64,
}

/// A triangulation of the annulus recorded by its bridging arcs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct AnnulusState {
    p: u32,
    q: u32,
    arcs: BTreeSet<BridgeArc>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnnulusGenerator {
    /// 1/p twist about the outer boundary.
    R1,
    /// 1/q twist about the inner boundary.
    R2,
    /// Exchange of the two boundary components (p = q only).
    Swap,
}

impl AnnulusState {
    /// The stock triangulation: a fan from outer mark 0 to every inner mark,
    /// a fan from every outer mark to inner mark 0, and one full-turn arc.
    pub fn base(p: u32, q: u32) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::BadIndex("annulus needs p, q >= 1".into()));
        }
        let mut arcs = BTreeSet::new();
        for k in 0..p {
            arcs.insert(BridgeArc { outer: k, inner: 0, shift: i64::from(k > 0) });
        }
        for l in 0..q {
            arcs.insert(BridgeArc { outer: 0, inner: l, shift: 0 });
        }
        arcs.insert(BridgeArc { outer: 0, inner: 0, shift: 1 });
        let state = AnnulusState { p, q, arcs };
        debug_assert_eq!(state.arcs.len() as u32, p + q);
        debug_assert!(state.is_compatible());
        Ok(state)
    }

    pub fn boundary_marks(&self) -> (u32, u32) {
        (self.p, self.q)
    }

    pub fn arcs(&self) -> &BTreeSet<BridgeArc> {
        &self.arcs
    }

    /// Pairwise non-crossing check for the arc set, in the annular cover:
    /// two bridges cross iff some integer shift puts their endpoints in
    /// strictly interleaved position.
    pub fn is_compatible(&self) -> bool {
        let arcs: Vec<&BridgeArc> = self.arcs.iter().collect();
        let scale = i64::from(self.p) * i64::from(self.q);
        for (idx, x) in arcs.iter().enumerate() {
            for y in arcs.iter().skip(idx + 1) {
                // Scaled positions: bottom = outer·scale/p, top = (inner/q + shift)·scale.
                let xb = i64::from(x.outer) * i64::from(self.q);
                let yb = i64::from(y.outer) * i64::from(self.q);
                let xt = i64::from(x.inner) * i64::from(self.p) + x.shift * scale;
                let yt = i64::from(y.inner) * i64::from(self.p) + y.shift * scale;
                // Chords (xb + m·scale → xt + m·scale) vs (yb → yt).
                let db0 = xb - yb;
                let dd = (xt - xb) - (yt - yb);
                // Crossing iff for some m: sign(db0 + m·scale) and
                // sign(db0 + dd + m·scale) are strictly opposite, i.e. an
                // integer multiple of scale lies strictly between −db0−dd
                // and −db0 (in either order).
                let (lo, hi) = if dd >= 0 { (-db0 - dd, -db0) } else { (-db0, -db0 - dd) };
                let mut m = lo.div_euclid(scale);
                while m * scale <= hi {
                    let v = m * scale;
                    if v > lo && v < hi {
                        return false;
                    }
                    m += 1;
                }
            }
        }
        true
    }

    /// Applies an annulus mapping class generator to every arc.
    pub fn apply(&self, g: AnnulusGenerator) -> Result<AnnulusState> {
        let (p, q) = (self.p, self.q);
        if g == AnnulusGenerator::Swap && p != q {
            return Err(Error::BadIndex(format!("swap needs p = q, got ({p}, {q})")));
        }
        let arcs = self
            .arcs
            .iter()
            .map(|&BridgeArc { outer, inner, shift }| match g {
                AnnulusGenerator::R1 => {
                    if outer + 1 < p {
                        BridgeArc { outer: outer + 1, inner, shift }
                    } else {
                        BridgeArc { outer: 0, inner, shift: shift - 1 }
                    }
                }
                AnnulusGenerator::R2 => {
                    if inner >= 1 {
                        BridgeArc { outer, inner: inner - 1, shift }
                    } else {
                        BridgeArc { outer, inner: q - 1, shift: shift - 1 }
                    }
                }
                AnnulusGenerator::Swap => {
                    let new_outer = (p - inner) % p;
                    let new_inner = (p - outer) % p;
                    let delta = i64::from(inner != 0) - i64::from(outer != 0);
                    BridgeArc { outer: new_outer, inner: new_inner, shift: shift + delta }
                }
            })
            .collect();
        Ok(AnnulusState { p, q, arcs })
    }

    pub fn apply_inverse(&self, g: AnnulusGenerator) -> Result<AnnulusState> {
        match g {
            AnnulusGenerator::Swap => self.apply(g),
            AnnulusGenerator::R1 => {
                let mut s = self.clone();
                for _ in 0..(self.p - 1) {
                    s = s.apply(AnnulusGenerator::R1)?;
                }
                // r1^{p} shifts every arc down a full turn; undo it.
                Ok(AnnulusState {
                    p: s.p,
                    q: s.q,
                    arcs: s
                        .arcs
                        .iter()
                        .map(|&a| BridgeArc { shift: a.shift + 1, ..a })
                        .collect(),
                })
            }
            AnnulusGenerator::R2 => {
                let mut s = self.clone();
                for _ in 0..(self.q - 1) {
                    s = s.apply(AnnulusGenerator::R2)?;
                }
                Ok(AnnulusState {
                    p: s.p,
                    q: s.q,
                    arcs: s
                        .arcs
                        .iter()
                        .map(|&a| BridgeArc { shift: a.shift + 1, ..a })
                        .collect(),
                })
            }
        }
    }
}

/// An annulus mapping class `r₁^a r₂^b swapᵗ`, composed exactly; identity is
/// decided by the action on the stock triangulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnulusMappingClass {
    p: u32,
    q: u32,
    pub r1_exp: i64,
    pub r2_exp: i64,
    pub swap: bool,
}

impl AnnulusMappingClass {
    pub fn identity(p: u32, q: u32) -> Self {
        AnnulusMappingClass { p, q, r1_exp: 0, r2_exp: 0, swap: false }
    }

    pub fn generator(p: u32, q: u32, g: AnnulusGenerator) -> Result<Self> {
        if g == AnnulusGenerator::Swap && p != q {
            return Err(Error::BadIndex(format!("swap needs p = q, got ({p}, {q})")));
        }
        Ok(match g {
            AnnulusGenerator::R1 => AnnulusMappingClass { p, q, r1_exp: 1, r2_exp: 0, swap: false },
            AnnulusGenerator::R2 => AnnulusMappingClass { p, q, r1_exp: 0, r2_exp: 1, swap: false },
            AnnulusGenerator::Swap => AnnulusMappingClass { p, q, r1_exp: 0, r2_exp: 0, swap: true },
        })
    }

    /// Group law: `swap` conjugation exchanges the twist exponents.
    pub fn compose(&self, other: &AnnulusMappingClass) -> AnnulusMappingClass {
        debug_assert_eq!((self.p, self.q), (other.p, other.q));
        let (a2, b2) =
            if self.swap { (other.r2_exp, other.r1_exp) } else { (other.r1_exp, other.r2_exp) };
        AnnulusMappingClass {
            p: self.p,
            q: self.q,
            r1_exp: self.r1_exp + a2,
            r2_exp: self.r2_exp + b2,
            swap: self.swap ^ other.swap,
        }
    }

    /// Applies the class to a state.
    pub fn act(&self, state: &AnnulusState) -> Result<AnnulusState> {
        let mut s = state.clone();
        if self.swap {
            s = s.apply(AnnulusGenerator::Swap)?;
        }
        for _ in 0..self.r2_exp.unsigned_abs() {
            s = if self.r2_exp > 0 {
                s.apply(AnnulusGenerator::R2)?
            } else {
                s.apply_inverse(AnnulusGenerator::R2)?
            };
        }
        for _ in 0..self.r1_exp.unsigned_abs() {
            s = if self.r1_exp > 0 {
                s.apply(AnnulusGenerator::R1)?
            } else {
                s.apply_inverse(AnnulusGenerator::R1)?
            };
        }
        Ok(s)
    }

    /// A mapping class is the identity iff it fixes the stock triangulation
    /// arcwise.
    pub fn is_identity_class(&self) -> bool {
        let base = AnnulusState::base(self.p, self.q).expect("valid base");
        self.act(&base).map(|s| s == base).unwrap_or(false) && !self.swap
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orbit(p: u32, q: u32, depth: usize) -> Vec<AnnulusState> {
        let mut seen = BTreeSet::new();
        let mut frontier = vec![AnnulusState::base(p, q).unwrap()];
        seen.insert(frontier[0].clone());
        let mut gens = vec![AnnulusGenerator::R1, AnnulusGenerator::R2];
        if p == q {
            gens.push(AnnulusGenerator::Swap);
        }
        for _ in 0..depth {
            let mut next = Vec::new();
            for s in &frontier {
                for &g in &gens {
                    for t in [s.apply(g).unwrap(), s.apply_inverse(g).unwrap()] {
                        if seen.insert(t.clone()) {
                            next.push(t);
                        }
                    }
                }
            }
            frontier = next;
        }
        seen.into_iter().collect()
    }

    #[test]
    fn base_states_are_triangulations() {
        for (p, q) in [(1, 1), (1, 2), (2, 2), (2, 3), (3, 3), (1, 4)] {
            let s = AnnulusState::base(p, q).unwrap();
            assert_eq!(s.arcs().len() as u32, p + q);
            assert!(s.is_compatible());
        }
    }

    #[test]
    fn generators_are_bijective() {
        for (p, q) in [(1, 2), (2, 2), (2, 3)] {
            for s in orbit(p, q, 3) {
                for g in [AnnulusGenerator::R1, AnnulusGenerator::R2] {
                    assert_eq!(s.apply(g).unwrap().apply_inverse(g).unwrap(), s);
                    assert_eq!(s.apply_inverse(g).unwrap().apply(g).unwrap(), s);
                }
            }
        }
    }

    #[test]
    fn twists_commute_and_satisfy_the_core_relation() {
        for (p, q) in [(1, 1), (1, 2), (2, 2), (2, 3)] {
            for s in orbit(p, q, 4) {
                let rs = s.apply(AnnulusGenerator::R1).unwrap().apply(AnnulusGenerator::R2).unwrap();
                let sr = s.apply(AnnulusGenerator::R2).unwrap().apply(AnnulusGenerator::R1).unwrap();
                assert_eq!(rs, sr, "r1 r2 = r2 r1 on ({p},{q})");
                let mut a = s.clone();
                for _ in 0..p {
                    a = a.apply(AnnulusGenerator::R1).unwrap();
                }
                let mut b = s.clone();
                for _ in 0..q {
                    b = b.apply(AnnulusGenerator::R2).unwrap();
                }
                assert_eq!(a, b, "r1^p = r2^q on ({p},{q})");
            }
        }
    }

    #[test]
    fn swap_is_an_involution_conjugating_the_twists() {
        for p in [1u32, 2, 3] {
            for s in orbit(p, p, 3) {
                let double = s.apply(AnnulusGenerator::Swap).unwrap().apply(AnnulusGenerator::Swap).unwrap();
                assert_eq!(double, s);
                let lhs = s
                    .apply(AnnulusGenerator::R1)
                    .unwrap()
                    .apply(AnnulusGenerator::Swap)
                    .unwrap();
                let rhs = s.apply(AnnulusGenerator::Swap).unwrap().apply(AnnulusGenerator::R2).unwrap();
                // swap ∘ r1 = r2 ∘ swap, i.e. swap r1 swap⁻¹ = r2.
                assert_eq!(lhs, rhs, "swap conjugates r1 to r2 on ({p},{p})");
            }
        }
    }

    #[test]
    fn states_stay_compatible_across_the_orbit() {
        for (p, q) in [(2, 2), (2, 3)] {
            for s in orbit(p, q, 4) {
                assert!(s.is_compatible());
                assert_eq!(s.arcs().len() as u32, p + q);
            }
        }
    }

    #[test]
    fn mapping_class_arithmetic() {
        let r1 = AnnulusMappingClass::generator(2, 2, AnnulusGenerator::R1).unwrap();
        let r2 = AnnulusMappingClass::generator(2, 2, AnnulusGenerator::R2).unwrap();
        let sw = AnnulusMappingClass::generator(2, 2, AnnulusGenerator::Swap).unwrap();
        assert!(sw.compose(&sw).is_identity_class());
        assert!(!r1.is_identity_class());
        // swap r1 swap = r2.
        let conj = sw.compose(&r1).compose(&sw);
        let base = AnnulusState::base(2, 2).unwrap();
        assert_eq!(conj.act(&base).unwrap(), r2.act(&base).unwrap());
        // r1² r2⁻² is the full relation r1^p r2^{-q} at p = q = 2.
        let rel = AnnulusMappingClass { p: 2, q: 2, r1_exp: 2, r2_exp: -2, swap: false };
        assert!(rel.is_identity_class());
    }
}
