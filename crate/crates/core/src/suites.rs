//! Named verification suites shared by the command-line front-end and the
//! acceptance tests. Every suite is deterministic for a fixed parameter set
//! and reports one pass/fail line per checked fact.

use crate::action::{
    act_word, infinite_order_witness, random_coordinates, AnnulusGenerator, AnnulusMappingClass,
    AnnulusState, DiskCoordinates,
};
use crate::autgroup::{
    self, multiply, multiply_with_convention, Di4Sigma3, FourPunctSphereElement, McgContext,
    McgContext4, RConvention, TaggedMCGElement, ZS4Z2,
};
use crate::cluster::seed_isomorphic;
use crate::fourpunct;
use crate::perm::Perm;
use crate::presentations::{
    aij_in_braid, braid_presentation, mcg_presentation_genus0, mcg_presentation_genus_ge1,
    pure_braid_presentation, sphere_mcg_presentation, Genus0Catalog,
};
use crate::surface::{MarkedSurface, SurfaceClass};
use crate::words::{
    abelianization, theta_images, verify_homomorphism, GeneratorRole, HomTarget, Presentation,
    Word,
};
use crate::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

#[derive(Debug, Clone, Copy)]
pub struct SuiteParams {
    pub max_n: usize,
    pub samples: usize,
    pub rng_seed: u64,
    pub limit: usize,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams { max_n: 0, samples: 100, rng_seed: 42, limit: 20_000 }
    }
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct SuiteLine {
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub lines: Vec<SuiteLine>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport { name: name.into(), lines: Vec::new() }
    }

    fn check(&mut self, pass: bool, detail: impl Into<String>) {
        self.lines.push(SuiteLine { pass, detail: detail.into() });
    }

    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.pass)
    }

    pub fn first_failure(&self) -> Option<&SuiteLine> {
        self.lines.iter().find(|l| !l.pass)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            out.push_str(if l.pass { "PASS " } else { "FAIL " });
            out.push_str(&self.name);
            out.push(' ');
            out.push_str(&l.detail);
            out.push('\n');
        }
        out
    }
}

pub const SUITE_NAMES: [&str; 8] =
    ["braid", "purebraid", "sphere", "genus0", "genus1-emit", "annulus", "fourpunct", "autgroup"];

pub fn run_suite(name: &str, params: &SuiteParams) -> Result<SuiteReport> {
    match name {
        "braid" => braid_suite(params),
        "purebraid" => pure_braid_suite(params),
        "sphere" => sphere_suite(params),
        "genus0" => genus0_suite(params),
        "genus1-emit" => genus1_emit_suite(params),
        "annulus" => annulus_suite(params),
        "fourpunct" => fourpunct_suite(params),
        "autgroup" => autgroup_suite(params),
        other => Err(Error::Parse(format!(
            "unknown suite {other:?}; available: {}",
            SUITE_NAMES.join("|")
        ))),
    }
}

fn sample_vectors(n: usize, count: usize, seed: u64) -> Vec<DiskCoordinates> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_coordinates(&mut rng, n, 20).expect("n >= 3")).collect()
}

fn word_fixes_samples(w: &Word, samples: &[DiskCoordinates]) -> bool {
    samples.iter().all(|c| act_word(w, c).map(|r| r == *c).unwrap_or(false))
}

/// Every braid relator acts as the identity on pseudorandom disk
/// coordinates.
pub fn braid_suite(params: &SuiteParams) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("braid");
    let max_n = if params.max_n == 0 { 7 } else { params.max_n };
    for n in 3..=max_n {
        let p = braid_presentation(n)?;
        let samples = sample_vectors(n, params.samples, params.rng_seed);
        let bad = p.relators().iter().position(|r| !word_fixes_samples(r, &samples));
        report.check(
            bad.is_none(),
            match bad {
                None => format!("n={n}: {} relators act trivially on {} vectors", p.relators().len(), samples.len()),
                Some(i) => format!("n={n}: relator {i} moved a sample vector"),
            },
        );
    }
    Ok(report)
}

/// Pure-braid relators, expanded through the braid words for a_{ij}, act as
/// the identity; in B₃ the chain (σ₁σ₂)³ acts like (a₁₂a₁₃)(a₂₃).
pub fn pure_braid_suite(params: &SuiteParams) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("purebraid");
    let max_n = if params.max_n == 0 { 6 } else { params.max_n };
    for n in 3..=max_n {
        let pb = pure_braid_presentation(n)?;
        let samples = sample_vectors(n, params.samples, params.rng_seed);
        // Substitute each generator by its braid word.
        let words: Vec<Word> = {
            let mut v = Vec::new();
            for i in 1..=n {
                for j in (i + 1)..=n {
                    v.push(aij_in_braid(i, j, n)?);
                }
            }
            v
        };
        let expand = |w: &Word| -> Word {
            let mut letters = Vec::new();
            for l in w.letters() {
                let part = if l.inv { words[l.gen].inverse() } else { words[l.gen].clone() };
                letters.extend(part.letters().iter().copied());
            }
            Word::from_letters(letters)
        };
        let bad = pb.relators().iter().position(|r| !word_fixes_samples(&expand(r), &samples));
        report.check(
            bad.is_none(),
            match bad {
                None => format!("n={n}: {} expanded relators act trivially", pb.relators().len()),
                Some(i) => format!("n={n}: expanded relator {i} moved a sample vector"),
            },
        );
    }
    // Lantern instance in B₃.
    let samples = sample_vectors(3, params.samples, params.rng_seed);
    let chain = Word::product([&Word::gen(0), &Word::gen(1)]).pow(3);
    let a = |i: usize, j: usize| aij_in_braid(i, j, 3).expect("valid");
    let rhs = Word::product([&a(1, 2), &a(1, 3), &a(2, 3)]);
    let same = samples
        .iter()
        .all(|c| act_word(&chain, c).unwrap() == act_word(&rhs, c).unwrap());
    report.check(same, "n=3: (s1 s2)^3 and (a12 a13)(a23) act identically".to_string());
    Ok(report)
}

/// Punctured-sphere relators map to the identity permutation, and the
/// abelianization is the predicted finite cyclic group.
pub fn sphere_suite(params: &SuiteParams) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("sphere");
    let max_n = if params.max_n == 0 { 8 } else { params.max_n };
    for n in 4..=max_n {
        let p = sphere_mcg_presentation(n)?;
        let images = theta_images(&p, n)?;
        let theta_ok = verify_homomorphism(&p, &images, &HomTarget::Permutation { degree: n })?.ok;
        let nn = n as u64;
        let expected = gcd(nn * (nn - 1), 2 * (nn - 1));
        let ab = abelianization(&p);
        let ab_ok = ab == vec![expected];
        report.check(
            theta_ok && ab_ok,
            format!("n={n}: theta kills relators ({theta_ok}); abelianization {ab:?} == [{expected}] ({ab_ok})"),
        );
    }
    Ok(report)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The genus-0 grid of the acceptance criteria: punctures ≤ 4 against the
/// boundary multisets, skipping the excluded surfaces and the annulus.
pub fn genus0_grid() -> Vec<MarkedSurface> {
    let multisets: [&[u32]; 6] = [&[1], &[2], &[1, 1], &[2, 2], &[1, 2], &[3]];
    let mut out = Vec::new();
    for n in 0..=4u32 {
        for b in multisets {
            let s = MarkedSurface::new(0, b.to_vec(), n).expect("positive marks");
            match s.classify() {
                SurfaceClass::Excluded | SurfaceClass::UnpuncturedAnnulus(..) => {}
                _ => out.push(s),
            }
        }
    }
    out
}

/// θ kills every relator of the genus-0 presentations, and boundary-twist
/// degrees are balanced within each orbit of boundary components.
pub fn genus0_suite(_params: &SuiteParams) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("genus0");
    for s in genus0_grid() {
        let p = mcg_presentation_genus0(&s)?;
        let degree = s.strands().max(1);
        let images = theta_images(&p, degree)?;
        let theta = verify_homomorphism(&p, &images, &HomTarget::Permutation { degree })?;
        report.check(
            theta.ok,
            format!(
                "surface g=0 b={:?} n={}: theta kills {} relators",
                s.boundary(),
                s.punctures(),
                p.relators().len()
            ),
        );
        let balanced = t_degrees_orbit_balanced(&s, &p);
        report.check(
            balanced,
            format!(
                "surface g=0 b={:?} n={}: boundary-twist degrees balanced per orbit",
                s.boundary(),
                s.punctures()
            ),
        );
    }
    Ok(report)
}

/// Orbit balance of boundary-twist exponents: within each group of boundary
/// components carrying the same number of marks, every relator's total
/// twist degree is zero.
fn t_degrees_orbit_balanced(s: &MarkedSurface, p: &Presentation) -> bool {
    let cat = Genus0Catalog::new(s);
    let r = s.n_boundary();
    if r == 0 {
        return true;
    }
    // Orbits: boundary components with equal mark count.
    let marks = s.boundary();
    p.relators().iter().all(|rel| {
        let sums = rel.exponent_sums(p.n_gens());
        (0..r).all(|l| {
            let orbit_total: i64 = (0..r)
                .filter(|&m| marks[m] == marks[l])
                .map(|m| sums[cat.t_index(m + 1)])
                .sum();
            orbit_total == 0
        })
    })
}

/// The genus ≥ 1 grid: emission succeeds, every relator is well-formed, and
/// θ kills everything (half twists to transpositions, twists to identity).
pub fn genus1_grid() -> Vec<MarkedSurface> {
    let multisets: [&[u32]; 10] =
        [&[], &[1], &[2], &[3], &[1, 1], &[1, 2], &[1, 3], &[2, 2], &[2, 3], &[3, 3]];
    let mut out = Vec::new();
    for g in 1..=3u32 {
        for n in 0..=3u32 {
            for b in multisets {
                out.push(MarkedSurface::new(g, b.to_vec(), n).expect("positive marks"));
            }
        }
    }
    out
}

pub fn genus1_emit_suite(_params: &SuiteParams) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("genus1-emit");
    for s in genus1_grid() {
        let label =
            format!("surface g={} b={:?} n={}", s.genus(), s.boundary(), s.punctures());
        match mcg_presentation_genus_ge1(&s) {
            Ok(p) => {
                // Emission already validates well-formedness and Δ-subset
                // classification; θ is the remaining quotient check.
                let degree = s.strands().max(1);
                let images = theta_images(&p, degree)?;
                let theta =
                    verify_homomorphism(&p, &images, &HomTarget::Permutation { degree })?;
                report.check(
                    theta.ok,
                    format!("{label}: emitted {} relators, theta trivial", p.relators().len()),
                );
            }
            Err(e) => report.check(false, format!("{label}: emission failed: {e}")),
        }
    }
    Ok(report)
}

/// Annulus state-map relations at the listed sizes, plus the distinct-power
/// witness for the fractional twist.
pub fn annulus_suite(_params: &SuiteParams) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("annulus");
    for (p, q) in [(1u32, 1u32), (1, 2), (2, 2), (2, 3)] {
        let states = annulus_orbit(p, q, 8)?;
        let mut commute = true;
        let mut core_relation = true;
        let mut swap_conj = true;
        for s in &states {
            let rs = s.apply(AnnulusGenerator::R1)?.apply(AnnulusGenerator::R2)?;
            let sr = s.apply(AnnulusGenerator::R2)?.apply(AnnulusGenerator::R1)?;
            commute &= rs == sr;
            let mut a = s.clone();
            for _ in 0..p {
                a = a.apply(AnnulusGenerator::R1)?;
            }
            let mut b = s.clone();
            for _ in 0..q {
                b = b.apply(AnnulusGenerator::R2)?;
            }
            core_relation &= a == b;
            if p == q {
                let lhs = s.apply(AnnulusGenerator::Swap)?.apply(AnnulusGenerator::R2)?;
                let rhs = s.apply(AnnulusGenerator::R1)?.apply(AnnulusGenerator::Swap)?;
                swap_conj &= lhs == rhs;
            }
        }
        report.check(commute, format!("annulus({p},{q}): r1 r2 = r2 r1 on {} states", states.len()));
        report.check(core_relation, format!("annulus({p},{q}): r1^{p} = r2^{q} on {} states", states.len()));
        if p == q {
            report.check(swap_conj, format!("annulus({p},{q}): swap conjugates r1 to r2"));
        }
    }
    for m in 1..=4u32 {
        let twist = AnnulusMappingClass::generator(1, m, AnnulusGenerator::R2)?;
        let distinct = infinite_order_witness(&twist, 20)?;
        report.check(distinct, format!("annulus(1,{m}): 1/{m} twist has 20 distinct powers"));
    }
    Ok(report)
}

fn annulus_orbit(p: u32, q: u32, depth: usize) -> Result<Vec<AnnulusState>> {
    let base = AnnulusState::base(p, q)?;
    let mut seen = BTreeSet::new();
    seen.insert(base.clone());
    let mut frontier = vec![base];
    let mut gens = vec![AnnulusGenerator::R1, AnnulusGenerator::R2];
    if p == q {
        gens.push(AnnulusGenerator::Swap);
    }
    for _ in 0..depth {
        let mut next = Vec::new();
        for s in &frontier {
            for &g in &gens {
                for t in [s.apply(g)?, s.apply_inverse(g)?] {
                    if seen.insert(t.clone()) {
                        next.push(t);
                    }
                }
            }
        }
        frontier = next;
    }
    Ok(seen.into_iter().collect())
}

/// The 4-punctured-sphere facts: stock arrow counts, the μ-path, the swap,
/// and the two extra involutions.
pub fn fourpunct_suite(params: &SuiteParams) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("fourpunct");
    let max_seed = fourpunct::stock_maximal().to_seed();
    report.check(max_seed.matrix.arrow_count() == 12, "maximal stock quiver has 12 arrows");
    let tsf = fourpunct::stock_three_self_folded().to_seed();
    report.check(tsf.matrix.arrow_count() == 12, "three-self-folded stock quiver has 12 arrows");
    let mu = fourpunct::verify_mu6526()?;
    report.check(true, format!("mu(6,5,2,6) image is maximal via relabelling {:?}", mu.forward_iso.images()));
    report.check(mu.roundtrip_is_identity, "mu(6,5,2,6) then mu(6,2,5,6) is the identity path");
    report.check(
        mu.maximal_sent_to_self_folded,
        "the same flips carry the maximal triangulation to a three-self-folded one",
    );
    let swap = fourpunct::sigma_swap_check();
    report.check(swap.beta_relabelling_matches, "beta relabelling matches the maximal quiver");
    report.check(swap.swap_is_automorphism, "arc swap 2<->4 is a quiver automorphism");
    report.check(swap.swap_squares_to_identity, "arc swap squares to the identity");
    report.check(
        swap.automorphism_transpositions == vec![(1, 6), (2, 4), (3, 5)],
        "automorphism transpositions are exactly the opposite-arc pairs",
    );
    // Bit elements square to the identity and commute with the base.
    let ctx = McgContext4::new()?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.rng_seed);
    let sigma = FourPunctSphereElement {
        base: TaggedMCGElement::identity(),
        sigma_bit: true,
        mu_bit: false,
    };
    let mu_el = FourPunctSphereElement {
        base: TaggedMCGElement::identity(),
        sigma_bit: false,
        mu_bit: true,
    };
    let squares = autgroup::multiply_fourpunct(&ctx, &sigma, &sigma) == FourPunctSphereElement::identity()
        && autgroup::multiply_fourpunct(&ctx, &mu_el, &mu_el) == FourPunctSphereElement::identity();
    report.check(squares, "sigma and mu bits square to the identity");
    let mut commutes = true;
    for _ in 0..params.samples.min(200) {
        let g = FourPunctSphereElement {
            base: random_tagged_element(&ctx.0, &mut rng, 5),
            sigma_bit: false,
            mu_bit: false,
        };
        commutes &= autgroup::multiply_fourpunct(&ctx, &sigma, &g)
            == autgroup::multiply_fourpunct(&ctx, &g, &sigma);
        commutes &= autgroup::multiply_fourpunct(&ctx, &mu_el, &g)
            == autgroup::multiply_fourpunct(&ctx, &g, &mu_el);
    }
    report.check(commutes, "bits commute with the base subgroup");
    Ok(report)
}

pub fn random_tagged_element<R: Rng>(ctx: &McgContext, rng: &mut R, len: usize) -> TaggedMCGElement {
    let n_gens = ctx.presentation().n_gens();
    let letters: Vec<crate::words::Letter> = (0..len)
        .map(|_| crate::words::Letter::new(rng.gen_range(0..n_gens), rng.gen_bool(0.5)))
        .collect();
    let n = ctx.surface().punctures() as usize;
    let punctures = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
    TaggedMCGElement { h: Word::from_letters(letters), eps: rng.gen_bool(0.5), punctures }
}

/// Group-law checks for the tagged elements over the surface grid, plus the
/// exceptional groups.
pub fn autgroup_suite(params: &SuiteParams) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("autgroup");
    let mut surfaces = genus0_grid();
    surfaces.push(MarkedSurface::new(0, vec![], 4)?);
    surfaces.push(MarkedSurface::new(1, vec![], 1)?);
    surfaces.push(MarkedSurface::new(1, vec![2], 1)?);
    let triples = if params.samples >= 100 { 1000 } else { 10 * params.samples.max(1) };
    for s in surfaces {
        let label = format!("g={} b={:?} n={}", s.genus(), s.boundary(), s.punctures());
        let ctx = McgContext::new(s)?;
        if ctx.presentation().n_gens() == 0 {
            continue;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(params.rng_seed);
        let mut ok = true;
        for _ in 0..triples {
            let a = random_tagged_element(&ctx, &mut rng, 4);
            let b = random_tagged_element(&ctx, &mut rng, 4);
            let c = random_tagged_element(&ctx, &mut rng, 4);
            ok &= multiply(&ctx, &multiply(&ctx, &a, &b), &c)
                == multiply(&ctx, &a, &multiply(&ctx, &b, &c));
            let id = TaggedMCGElement::identity();
            ok &= multiply(&ctx, &a, &id) == a && multiply(&ctx, &id, &a) == a;
            let inv = autgroup::inverse(&ctx, &a);
            ok &= autgroup::is_identity_data(&multiply(&ctx, &a, &inv));
        }
        report.check(ok, format!("{label}: {triples} random triples satisfy the group laws"));
    }
    // The literal reading fails on the recorded counterexample.
    let ctx = McgContext::new(MarkedSurface::new(0, vec![], 4)?)?;
    let s1 = ctx.presentation().generator_index("s1").expect("s1");
    let s2 = ctx.presentation().generator_index("s2").expect("s2");
    let a = TaggedMCGElement { h: Word::empty(), eps: false, punctures: [0].into_iter().collect() };
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
    report.check(lhs != rhs, "literal puncture-twist reading fails associativity on the stored counterexample");
    // Exceptional groups.
    report.check(Di4Sigma3::order_by_enumeration() == 48, "|Di4 x S3| = 48 by enumeration");
    let mut rng = ChaCha8Rng::seed_from_u64(params.rng_seed);
    let perms = Perm::all(4);
    let mut ok = true;
    for _ in 0..triples {
        let rand_el = |rng: &mut ChaCha8Rng| ZS4Z2 {
            shift: rng.gen_range(-12..=12),
            perm: perms[rng.gen_range(0..24)].clone(),
            flip: rng.gen_bool(0.5),
        };
        let a = rand_el(&mut rng);
        let b = rand_el(&mut rng);
        let c = rand_el(&mut rng);
        ok &= a.multiply(&b).multiply(&c) == a.multiply(&b.multiply(&c));
        ok &= a.multiply(&a.inverse()).is_identity();
    }
    report.check(ok, format!("Z x S4 x| Z2 satisfies the group laws on {triples} random triples"));
    Ok(report)
}
