//! Element arithmetic for the cluster automorphism groups: the tagged
//! mapping class group (MCG ⋊ Z₂) ⋉ Z₂^𝒫, the two extra commuting
//! involutions of the 4-punctured sphere, the exceptional table groups, and
//! the summary-table descriptor.

use crate::perm::Perm;
use crate::presentations;
use crate::surface::{MarkedSurface, SurfaceClass};
use crate::words::{GeneratorRole, Presentation, Word};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Which reading of the puncture-set twist is used when multiplying:
/// `InverseH2` applies h₂⁻¹ to R₁ (the associative law), `LiteralH2`
/// applies h₂ as printed (kept for the recorded counterexample).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RConvention {
    InverseH2,
    LiteralH2,
}

/// The surface context an element lives over: its mapping class group
/// presentation and the puncture permutation image of each generator.
pub struct McgContext {
    surface: MarkedSurface,
    presentation: Presentation,
    puncture_perms: Vec<Perm>,
}

impl McgContext {
    /// Builds the context from the surface's own presentation (genus 0 or
    /// genus ≥ 1 route, or the annulus group).
    pub fn new(surface: MarkedSurface) -> Result<Self> {
        let presentation = match surface.classify() {
            SurfaceClass::UnpuncturedAnnulus(p, q) => presentations::annulus_presentation(p, q)?,
            _ if surface.genus() == 0 => presentations::mcg_presentation_genus0(&surface)?,
            _ => presentations::mcg_presentation_genus_ge1(&surface)?,
        };
        let n = surface.punctures() as usize;
        let puncture_perms = presentation
            .generators()
            .iter()
            .map(|g| match g.role {
                // Only half twists between two punctures permute 𝒫.
                GeneratorRole::HalfTwist { strand } if strand < n.max(1) && n >= 2 && strand <= n - 1 => {
                    Perm::transposition(n, strand - 1, strand)
                }
                _ => Ok(Perm::identity(n)),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(McgContext { surface, presentation, puncture_perms })
    }

    pub fn surface(&self) -> &MarkedSurface {
        &self.surface
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    /// Puncture permutation of a word under θ.
    pub fn theta(&self, w: &Word) -> Perm {
        let mut acc = Perm::identity(self.surface.punctures() as usize);
        for l in w.letters() {
            // Transpositions are involutions, so the letter sign is moot.
            acc = acc.compose(&self.puncture_perms[l.gen]);
        }
        acc
    }
}

/// An element (h, ε, R) of (MCG ⋊ Z₂) ⋉ Z₂^𝒫: a word in the MCG
/// generators, the orientation bit, and a subset of the punctures.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaggedMCGElement {
    pub h: Word,
    pub eps: bool,
    pub punctures: BTreeSet<usize>,
}

impl TaggedMCGElement {
    pub fn identity() -> Self {
        TaggedMCGElement { h: Word::empty(), eps: false, punctures: BTreeSet::new() }
    }

    pub fn new(ctx: &McgContext, h: Word, eps: bool, punctures: BTreeSet<usize>) -> Result<Self> {
        if let Some(m) = h.max_gen() {
            if m >= ctx.presentation.n_gens() {
                return Err(Error::UnknownGenerator { id: m, n_gens: ctx.presentation.n_gens() });
            }
        }
        if let Some(&p) = punctures.iter().find(|&&p| p >= ctx.surface.punctures() as usize) {
            return Err(Error::BadIndex(format!("puncture {p} out of range")));
        }
        Ok(TaggedMCGElement { h, eps, punctures })
    }

    /// The ε-twist: generator-wise inversion of the word when ε is set.
    fn twist(w: &Word, eps: bool) -> Word {
        if eps {
            w.letterwise_inverse()
        } else {
            w.clone()
        }
    }
}

fn apply_perm_to_set(p: &Perm, set: &BTreeSet<usize>) -> BTreeSet<usize> {
    set.iter().map(|&i| p.apply(i)).collect()
}

fn symmetric_difference(a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> BTreeSet<usize> {
    a.symmetric_difference(b).copied().collect()
}

/// Multiplication with a chosen puncture-twist convention:
/// `(h₁, ε₁, R₁)·(h₂, ε₂, R₂) = (h₁·h₂^{(−1)^{ε₁}}, ε₁+ε₂, θ(h₂)^{∓1}(R₁) ⊖ R₂)`.
pub fn multiply_with_convention(
    ctx: &McgContext,
    a: &TaggedMCGElement,
    b: &TaggedMCGElement,
    convention: RConvention,
) -> TaggedMCGElement {
    let h = a.h.concat(&TaggedMCGElement::twist(&b.h, a.eps));
    let theta_b = ctx.theta(&b.h);
    let moved = match convention {
        RConvention::InverseH2 => apply_perm_to_set(&theta_b.inverse(), &a.punctures),
        RConvention::LiteralH2 => apply_perm_to_set(&theta_b, &a.punctures),
    };
    TaggedMCGElement { h, eps: a.eps ^ b.eps, punctures: symmetric_difference(&moved, &b.punctures) }
}

/// Group multiplication (the associative convention).
pub fn multiply(ctx: &McgContext, a: &TaggedMCGElement, b: &TaggedMCGElement) -> TaggedMCGElement {
    multiply_with_convention(ctx, a, b, RConvention::InverseH2)
}

/// Two-sided inverse of an element.
pub fn inverse(ctx: &McgContext, a: &TaggedMCGElement) -> TaggedMCGElement {
    let h = TaggedMCGElement::twist(&a.h.inverse(), a.eps);
    let punctures = apply_perm_to_set(&ctx.theta(&h).inverse(), &a.punctures);
    TaggedMCGElement { h, eps: a.eps, punctures }
}

/// Elements are compared through their components; `h` is a word, not a
/// group element, so this is equality of normal data only.
pub fn is_identity_data(e: &TaggedMCGElement) -> bool {
    e.h.is_empty() && !e.eps && e.punctures.is_empty()
}

/// An element of Aut 𝒜 for the 4-punctured sphere: the tagged element and
/// the two commuting involution bits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FourPunctSphereElement {
    pub base: TaggedMCGElement,
    pub sigma_bit: bool,
    pub mu_bit: bool,
}

impl FourPunctSphereElement {
    pub fn identity() -> Self {
        FourPunctSphereElement { base: TaggedMCGElement::identity(), sigma_bit: false, mu_bit: false }
    }
}

/// Multiplication in (MCG ⋊ Z₂) ⋉ Z₂^𝒫₄ × Z₂²: bits add, bases multiply.
pub fn multiply_fourpunct(
    ctx: &McgContext4,
    a: &FourPunctSphereElement,
    b: &FourPunctSphereElement,
) -> FourPunctSphereElement {
    FourPunctSphereElement {
        base: multiply(&ctx.0, &a.base, &b.base),
        sigma_bit: a.sigma_bit ^ b.sigma_bit,
        mu_bit: a.mu_bit ^ b.mu_bit,
    }
}

/// Context wrapper pinned to the 4-punctured sphere.
pub struct McgContext4(pub McgContext);

impl McgContext4 {
    pub fn new() -> Result<Self> {
        let s = MarkedSurface::new(0, vec![], 4)?;
        Ok(McgContext4(McgContext::new(s)?))
    }
}

// ---------------------------------------------------------------------------
// Exceptional groups.
// ---------------------------------------------------------------------------

/// Element of Di₄ × Σ₃: a dihedral part (rotation mod 4, reflection bit)
/// and a permutation of three letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Di4Sigma3 {
    pub rot: u8,
    pub refl: bool,
    pub perm: Perm,
}

impl Di4Sigma3 {
    pub fn identity() -> Self {
        Di4Sigma3 { rot: 0, refl: false, perm: Perm::identity(3) }
    }

    pub fn new(rot: u8, refl: bool, perm: Perm) -> Result<Self> {
        if rot >= 4 || perm.degree() != 3 {
            return Err(Error::BadIndex(format!("dihedral element ({rot}, {refl})")));
        }
        Ok(Di4Sigma3 { rot, refl, perm })
    }

    /// Dihedral relation `s r s⁻¹ = r⁻¹` on the first factor, direct product
    /// with Σ₃.
    pub fn multiply(&self, other: &Di4Sigma3) -> Di4Sigma3 {
        let rot = if self.refl {
            (self.rot + 4 - other.rot % 4) % 4
        } else {
            (self.rot + other.rot) % 4
        };
        Di4Sigma3 { rot, refl: self.refl ^ other.refl, perm: self.perm.compose(&other.perm) }
    }

    pub fn inverse(&self) -> Di4Sigma3 {
        let rot = if self.refl { self.rot } else { (4 - self.rot % 4) % 4 };
        Di4Sigma3 { rot, refl: self.refl, perm: self.perm.inverse() }
    }

    /// All 48 elements.
    pub fn all() -> Vec<Di4Sigma3> {
        let mut out = Vec::new();
        for rot in 0..4 {
            for refl in [false, true] {
                for perm in Perm::all(3) {
                    out.push(Di4Sigma3 { rot, refl, perm });
                }
            }
        }
        out
    }

    /// Order of the group by closure from a generating set.
    pub fn order_by_enumeration() -> usize {
        let gens = vec![
            Di4Sigma3 { rot: 1, refl: false, perm: Perm::identity(3) },
            Di4Sigma3 { rot: 0, refl: true, perm: Perm::identity(3) },
            Di4Sigma3 { rot: 0, refl: false, perm: Perm::transposition(3, 0, 1).unwrap() },
            Di4Sigma3 { rot: 0, refl: false, perm: Perm::transposition(3, 1, 2).unwrap() },
        ];
        let mut seen: BTreeSet<Di4Sigma3> = BTreeSet::new();
        let mut frontier = vec![Di4Sigma3::identity()];
        seen.insert(Di4Sigma3::identity());
        while let Some(e) = frontier.pop() {
            for g in &gens {
                let next = e.multiply(g);
                if seen.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        seen.len()
    }
}

/// Element (k, s, t) of (Z × S₄) ⋊ Z₂, the involution inverting the
/// infinite factor and fixing the permutation part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZS4Z2 {
    pub shift: i64,
    pub perm: Perm,
    pub flip: bool,
}

impl ZS4Z2 {
    pub fn identity() -> Self {
        ZS4Z2 { shift: 0, perm: Perm::identity(4), flip: false }
    }

    pub fn new(shift: i64, perm: Perm, flip: bool) -> Result<Self> {
        if perm.degree() != 4 {
            return Err(Error::DegreeMismatch("S4 part must have degree 4".into()));
        }
        Ok(ZS4Z2 { shift, perm, flip })
    }

    pub fn multiply(&self, other: &ZS4Z2) -> ZS4Z2 {
        let sign = if self.flip { -1 } else { 1 };
        ZS4Z2 {
            shift: self.shift + sign * other.shift,
            perm: self.perm.compose(&other.perm),
            flip: self.flip ^ other.flip,
        }
    }

    pub fn inverse(&self) -> ZS4Z2 {
        let sign = if self.flip { 1 } else { -1 };
        ZS4Z2 { shift: sign * self.shift, perm: self.perm.inverse(), flip: self.flip }
    }

    pub fn is_identity(&self) -> bool {
        self.shift == 0 && self.perm.is_identity() && !self.flip
    }
}

// ---------------------------------------------------------------------------
// Summary-table descriptor.
// ---------------------------------------------------------------------------

/// A row of the summary table: the shape of Aut 𝒜(S, M) and, where the
/// general theory applies, the attached MCG presentation.
pub struct AutGroupDescriptor {
    pub class: SurfaceClass,
    pub shape: String,
    pub mcg: Option<Presentation>,
}

/// Names the automorphism group of the cluster algebra of the surface and
/// attaches the generated presentation.
pub fn aut_group_descriptor(s: &MarkedSurface) -> Result<AutGroupDescriptor> {
    let class = s.classify();
    let n = s.punctures();
    match class {
        SurfaceClass::Excluded => Err(Error::ExcludedSurface(format!("{s:?}"))),
        SurfaceClass::OncePuncturedClosed => Ok(AutGroupDescriptor {
            class,
            shape: "MCG(S,M) ⋊ Z2".into(),
            mcg: Some(presentations::mcg_presentation_genus_ge1(s)?),
        }),
        SurfaceClass::FourPuncturedSphere => Ok(AutGroupDescriptor {
            class,
            shape: "(MCG(S,M) ⋊ Z2) ⋉ Z2^P4 × Z2 × Z2".into(),
            mcg: Some(presentations::mcg_presentation_genus0(s)?),
        }),
        SurfaceClass::OncePunctured4gon => {
            Ok(AutGroupDescriptor { class, shape: "Di4 × S3".into(), mcg: None })
        }
        SurfaceClass::TwicePuncturedDigon => {
            Ok(AutGroupDescriptor { class, shape: "Z × S4 ⋊ Z2".into(), mcg: None })
        }
        SurfaceClass::UnpuncturedAnnulus(p, q) => Ok(AutGroupDescriptor {
            class,
            shape: if p == q {
                format!("H_{{{p},{q}}} ⋊ Z2")
            } else {
                format!("H_{{{p},{q}}}")
            },
            mcg: Some(presentations::annulus_presentation(p, q)?),
        }),
        SurfaceClass::FeasibleGenus0 => Ok(AutGroupDescriptor {
            class,
            shape: format!("(MCG(S,M) ⋊ Z2) ⋉ Z2^P{n}"),
            mcg: Some(presentations::mcg_presentation_genus0(s)?),
        }),
        SurfaceClass::FeasibleGenusGe1 => Ok(AutGroupDescriptor {
            class,
            shape: format!("(MCG(S,M) ⋊ Z2) ⋉ Z2^P{n}"),
            mcg: Some(presentations::mcg_presentation_genus_ge1(s)?),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn sphere4_ctx() -> McgContext {
        McgContext::new(MarkedSurface::new(0, vec![], 4).unwrap()).unwrap()
    }

    fn random_element<R: Rng>(ctx: &McgContext, rng: &mut R, len: usize) -> TaggedMCGElement {
        let n_gens = ctx.presentation().n_gens();
        let letters: Vec<crate::words::Letter> = (0..len)
            .map(|_| crate::words::Letter::new(rng.gen_range(0..n_gens), rng.gen_bool(0.5)))
            .collect();
        let n = ctx.surface().punctures() as usize;
        let punctures = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
        TaggedMCGElement { h: Word::from_letters(letters), eps: rng.gen_bool(0.5), punctures }
    }

    #[test]
    fn identity_is_two_sided() {
        let ctx = sphere4_ctx();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let id = TaggedMCGElement::identity();
        for _ in 0..50 {
            let a = random_element(&ctx, &mut rng, 6);
            assert_eq!(multiply(&ctx, &a, &id), a);
            assert_eq!(multiply(&ctx, &id, &a), a);
        }
    }

    #[test]
    fn puncture_sets_cancel() {
        let ctx = sphere4_ctx();
        let r1: BTreeSet<usize> = [0, 2].into_iter().collect();
        let r2: BTreeSet<usize> = [2, 3].into_iter().collect();
        let a = TaggedMCGElement { h: Word::empty(), eps: false, punctures: r1.clone() };
        let b = TaggedMCGElement { h: Word::empty(), eps: false, punctures: r2.clone() };
        let ab = multiply(&ctx, &a, &b);
        assert_eq!(ab.punctures, [0, 3].into_iter().collect::<BTreeSet<_>>());
        let aa = multiply(&ctx, &a, &a);
        assert!(aa.punctures.is_empty());
    }

    #[test]
    fn associativity_holds_with_inverse_convention() {
        let ctx = sphere4_ctx();
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..1000 {
            let a = random_element(&ctx, &mut rng, 4);
            let b = random_element(&ctx, &mut rng, 4);
            let c = random_element(&ctx, &mut rng, 4);
            let lhs = multiply(&ctx, &multiply(&ctx, &a, &b), &c);
            let rhs = multiply(&ctx, &a, &multiply(&ctx, &b, &c));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn literal_convention_fails_on_recorded_counterexample() {
        // Half twists at strands 1 and 2 of the 4-punctured sphere do not
        // commute on punctures, so the printed reading breaks associativity.
        let ctx = sphere4_ctx();
        let s1 = ctx.presentation().generator_index("s1").unwrap();
        let s2 = ctx.presentation().generator_index("s2").unwrap();
        let a = TaggedMCGElement {
            h: Word::empty(),
            eps: false,
            punctures: [0].into_iter().collect(),
        };
        let b = TaggedMCGElement { h: Word::gen(s1), eps: false, punctures: BTreeSet::new() };
        let c = TaggedMCGElement { h: Word::gen(s2), eps: false, punctures: BTreeSet::new() };
        let lhs = multiply_with_convention(
            &ctx,
            &multiply_with_convention(&ctx, &a, &b, RConvention::LiteralH2),
            &c,
            RConvention::LiteralH2,
        );
        let rhs = multiply_with_convention(
            &ctx,
            &a,
            &multiply_with_convention(&ctx, &b, &c, RConvention::LiteralH2),
            RConvention::LiteralH2,
        );
        assert_ne!(lhs, rhs, "the literal reading should fail exactly here");
        // And the associative convention passes on the same triple.
        let lhs = multiply(&ctx, &multiply(&ctx, &a, &b), &c);
        let rhs = multiply(&ctx, &a, &multiply(&ctx, &b, &c));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverses_and_epsilon_twist() {
        let ctx = sphere4_ctx();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let a = random_element(&ctx, &mut rng, 5);
            let inv = inverse(&ctx, &a);
            assert!(is_identity_data(&multiply(&ctx, &a, &inv)));
            assert!(is_identity_data(&multiply(&ctx, &inv, &a)));
            // ε-twist is an involution on words.
            assert_eq!(a.h.letterwise_inverse().letterwise_inverse(), a.h);
        }
    }

    #[test]
    fn theta_is_a_homomorphism_on_samples() {
        let ctx = sphere4_ctx();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..200 {
            let a = random_element(&ctx, &mut rng, 5);
            let b = random_element(&ctx, &mut rng, 5);
            let ab = a.h.concat(&b.h);
            assert_eq!(ctx.theta(&ab), ctx.theta(&a.h).compose(&ctx.theta(&b.h)));
        }
    }

    #[test]
    fn four_punct_bits() {
        let ctx = McgContext4::new().unwrap();
        let sigma = FourPunctSphereElement {
            base: TaggedMCGElement::identity(),
            sigma_bit: true,
            mu_bit: false,
        };
        let mu = FourPunctSphereElement {
            base: TaggedMCGElement::identity(),
            sigma_bit: false,
            mu_bit: true,
        };
        assert_eq!(multiply_fourpunct(&ctx, &sigma, &sigma), FourPunctSphereElement::identity());
        assert_eq!(multiply_fourpunct(&ctx, &mu, &mu), FourPunctSphereElement::identity());
        // Bits commute with base elements.
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..100 {
            let g = FourPunctSphereElement {
                base: random_element(&ctx.0, &mut rng, 4),
                sigma_bit: false,
                mu_bit: false,
            };
            assert_eq!(multiply_fourpunct(&ctx, &sigma, &g), multiply_fourpunct(&ctx, &g, &sigma));
            assert_eq!(multiply_fourpunct(&ctx, &mu, &g), multiply_fourpunct(&ctx, &g, &mu));
        }
        // The bit subgroup is the Klein four group.
        let both = multiply_fourpunct(&ctx, &sigma, &mu);
        let set: std::collections::BTreeSet<(bool, bool)> = [
            (false, false),
            (sigma.sigma_bit, sigma.mu_bit),
            (mu.sigma_bit, mu.mu_bit),
            (both.sigma_bit, both.mu_bit),
        ]
        .into_iter()
        .collect();
        assert_eq!(set.len(), 4);
    }

    #[test]
    fn dihedral_times_s3_has_order_48() {
        assert_eq!(Di4Sigma3::all().len(), 48);
        assert_eq!(Di4Sigma3::order_by_enumeration(), 48);
        // Group axioms on all pairs/triples of a sample.
        let all = Di4Sigma3::all();
        for a in all.iter().take(12) {
            assert_eq!(a.multiply(&a.inverse()), Di4Sigma3::identity());
            for b in all.iter().take(12) {
                for c in all.iter().take(12) {
                    assert_eq!(
                        a.multiply(b).multiply(c),
                        a.multiply(&b.multiply(c))
                    );
                }
            }
        }
    }

    #[test]
    fn z_s4_z2_group_axioms() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        let rand_el = |rng: &mut ChaCha8Rng| {
            let perms = Perm::all(4);
            ZS4Z2 {
                shift: rng.gen_range(-10..=10),
                perm: perms[rng.gen_range(0..24)].clone(),
                flip: rng.gen_bool(0.5),
            }
        };
        for _ in 0..1000 {
            let a = rand_el(&mut rng);
            let b = rand_el(&mut rng);
            let c = rand_el(&mut rng);
            assert_eq!(a.multiply(&b).multiply(&c), a.multiply(&b.multiply(&c)));
            assert!(a.multiply(&a.inverse()).is_identity());
            assert!(a.inverse().multiply(&a).is_identity());
        }
        // The flip inverts the infinite factor.
        let t = ZS4Z2 { shift: 0, perm: Perm::identity(4), flip: true };
        let z = ZS4Z2 { shift: 1, perm: Perm::identity(4), flip: false };
        let conj = t.multiply(&z).multiply(&t.inverse());
        assert_eq!(conj.shift, -1);
    }

    #[test]
    fn descriptor_table() {
        let case = |g, b: &[u32], n| {
            aut_group_descriptor(&MarkedSurface::new(g, b.to_vec(), n).unwrap()).unwrap()
        };
        assert_eq!(case(1, &[], 1).shape, "MCG(S,M) ⋊ Z2");
        assert_eq!(case(0, &[], 4).shape, "(MCG(S,M) ⋊ Z2) ⋉ Z2^P4 × Z2 × Z2");
        assert_eq!(case(0, &[4], 1).shape, "Di4 × S3");
        assert_eq!(case(0, &[2], 2).shape, "Z × S4 ⋊ Z2");
        assert_eq!(case(0, &[2, 2], 0).shape, "H_{2,2} ⋊ Z2");
        assert_eq!(case(0, &[2, 3], 0).shape, "H_{2,3}");
        assert_eq!(case(0, &[1], 3).shape, "(MCG(S,M) ⋊ Z2) ⋉ Z2^P3");
        assert!(aut_group_descriptor(&MarkedSurface::new(0, vec![], 2).unwrap()).is_err());
    }
}
