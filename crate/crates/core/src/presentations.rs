//! Every finite presentation the library emits: braid, pure braid and sphere
//! groups, the permutation group Σ_S of a marked surface, the image of the
//! boundary-collapse map for genus 0, the full genus-0 and genus-≥1 mapping
//! class group presentations, and the annulus group H_{p,q}.

use crate::artin::{
    artin_presentation, classify_induced, fundamental_word, gamma_closed, gamma_one_boundary,
    prod_word, ClassifiedSubgraph, CoxeterGraph, GammaLayout, SubgraphShape,
};
use crate::surface::{MarkedSurface, SurfaceClass};
use crate::words::{Generator, GeneratorRole, Letter, Presentation, Word};
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// Braid-flavoured presentations on a row of strands.
// ---------------------------------------------------------------------------

/// The braid group B_n on n strands: generators σ₁…σ_{n−1}, braid relations
/// for adjacent pairs and commutations for distant ones.
pub fn braid_presentation(n: usize) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::BadIndex(format!("braid group needs n >= 2, got {n}")));
    }
    let gens = (1..n)
        .map(|k| Generator::new(format!("s{k}"), GeneratorRole::HalfTwist { strand: k }))
        .collect();
    let mut p = Presentation::new(gens);
    add_braid_block(&mut p, &(0..n - 1).map(Word::gen).collect::<Vec<_>>())?;
    Ok(p)
}

/// Adds braid/commutation relators over the given generator words, indexed
/// by adjacency of their positions in the slice.
fn add_braid_block(p: &mut Presentation, sigma: &[Word]) -> Result<()> {
    for i in 0..sigma.len() {
        for j in (i + 1)..sigma.len() {
            if j == i + 1 {
                let lhs = Word::product([&sigma[i], &sigma[j], &sigma[i]]);
                let rhs = Word::product([&sigma[j], &sigma[i], &sigma[j]]);
                p.add_relation(&lhs, &rhs)?;
            } else {
                p.add_relator(sigma[i].commutator(&sigma[j]))?;
            }
        }
    }
    Ok(())
}

/// Position of `a_{ij}` (1 ≤ i < j ≤ n) in lexicographic generator order.
fn aij_index(i: usize, j: usize, n: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= n);
    (i - 1) * (2 * n - i) / 2 + (j - i - 1)
}

fn aij_generators(n: usize) -> Vec<Generator> {
    let mut gens = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            gens.push(Generator::new(format!("a{i}_{j}"), GeneratorRole::DehnTwist));
        }
    }
    gens
}

/// The four relator families of the pure braid group over an `a`-alphabet
/// addressed by `a(i, j)`.
fn add_pure_braid_block(
    p: &mut Presentation,
    n: usize,
    a: &dyn Fn(usize, usize) -> Word,
) -> Result<()> {
    for pp in 1..=n {
        for q in (pp + 1)..=n {
            for r in (q + 1)..=n {
                // a_pr a_qr a_pq = a_qr a_pq a_pr = a_pq a_pr a_qr
                let w1 = Word::product([&a(pp, r), &a(q, r), &a(pp, q)]);
                let w2 = Word::product([&a(q, r), &a(pp, q), &a(pp, r)]);
                let w3 = Word::product([&a(pp, q), &a(pp, r), &a(q, r)]);
                p.add_relation(&w1, &w2)?;
                p.add_relation(&w2, &w3)?;
                for s in (r + 1)..=n {
                    p.add_relator(a(pp, q).commutator(&a(r, s)))?;
                    p.add_relator(a(pp, s).commutator(&a(q, r)))?;
                    let conj = a(r, s).conjugate(&a(pp, r));
                    p.add_relator(conj.commutator(&a(q, s)))?;
                }
            }
        }
    }
    Ok(())
}

/// The pure braid group PB_n on generators `a_{ij}`.
pub fn pure_braid_presentation(n: usize) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::BadIndex(format!("pure braid group needs n >= 2, got {n}")));
    }
    let mut p = Presentation::new(aij_generators(n));
    add_pure_braid_block(&mut p, n, &|i, j| Word::gen(aij_index(i, j, n)))?;
    Ok(p)
}

/// `a_{ij}` as a braid word: `σ_{j−1}⋯σ_{i+1} σᵢ² (σ_{j−1}⋯σ_{i+1})⁻¹`,
/// freely reduced, over the generators of `braid_presentation(n)`.
pub fn aij_in_braid(i: usize, j: usize, n: usize) -> Result<Word> {
    if !(1 <= i && i < j && j <= n) {
        return Err(Error::BadIndex(format!("a_({i},{j}) on {n} strands")));
    }
    let conj = Word::from_letters(((i + 1)..j).rev().map(|k| Letter::new(k - 1, false)).collect());
    Ok(conj.conjugate(&Word::gen(i - 1).pow(2)))
}

/// Mapping class group of the sphere with n punctures, boundary fixing:
/// braid relations plus `(σ₁⋯σ_{n−1})ⁿ = 1` and `σ₁⋯σ_{n−1}σ_{n−1}⋯σ₁ = 1`.
pub fn sphere_mcg_presentation(n: usize) -> Result<Presentation> {
    let mut p = braid_presentation(n)?;
    let ascending = Word::from_letters((0..n - 1).map(|k| Letter::new(k, false)).collect());
    p.add_relator(ascending.pow(n as i64))?;
    let descending = Word::from_letters((0..n - 1).rev().map(|k| Letter::new(k, false)).collect());
    p.add_relator(ascending.concat(&descending))?;
    Ok(p)
}

/// Pure mapping class group of the punctured sphere: the pure braid families
/// plus the two product relators killed by filling the boundary back in.
pub fn pmod_sphere_presentation(n: usize) -> Result<Presentation> {
    if n < 3 {
        return Err(Error::BadIndex(format!("punctured-sphere PMod needs n >= 3, got {n}")));
    }
    let mut p = Presentation::new(aij_generators(n));
    let a = |i: usize, j: usize| Word::gen(aij_index(i, j, n));
    add_pure_braid_block(&mut p, n, &a)?;
    p.add_relator(descending_a_product(n, &a))?;
    p.add_relator(first_row_a_product(n, &a))?;
    Ok(p)
}

/// `(a_{12}⋯a_{1n})(a_{23}⋯a_{2n})⋯(a_{n−1,n})`.
fn descending_a_product(n: usize, a: &dyn Fn(usize, usize) -> Word) -> Word {
    let mut parts = Vec::new();
    for i in 1..n {
        for j in (i + 1)..=n {
            parts.push(a(i, j));
        }
    }
    Word::product(parts.iter())
}

/// `a_{12} a_{13} ⋯ a_{1n}`.
fn first_row_a_product(n: usize, a: &dyn Fn(usize, usize) -> Word) -> Word {
    Word::product((2..=n).map(|j| a(1, j)).collect::<Vec<_>>().iter())
}

// ---------------------------------------------------------------------------
// Σ_S and the annulus group.
// ---------------------------------------------------------------------------

/// The permutation group Σ_S of a marked surface: involutions Perᵢ, i in the
/// admissible index set, with braid/commutation relations by adjacency.
pub fn sigma_s_presentation(s: &MarkedSurface) -> Presentation {
    let idx = s.index_set();
    let gens = idx
        .iter()
        .map(|&k| Generator::new(format!("P{k}"), GeneratorRole::HalfTwist { strand: k }))
        .collect();
    let mut p = Presentation::new(gens);
    for (u, &i) in idx.iter().enumerate() {
        p.add_relator(Word::gen(u).pow(2)).expect("declared");
        for (v, &j) in idx.iter().enumerate().skip(u + 1) {
            if j == i + 1 {
                let lhs = Word::product([&Word::gen(u), &Word::gen(v), &Word::gen(u)]);
                let rhs = Word::product([&Word::gen(v), &Word::gen(u), &Word::gen(v)]);
                p.add_relation(&lhs, &rhs).expect("declared");
            } else {
                p.add_relator(Word::gen(u).commutator(&Word::gen(v))).expect("declared");
            }
        }
    }
    p
}

/// The bare group `H_{p,q} = ⟨r₁, r₂ | r₁r₂ = r₂r₁, r₁ᵖ = r₂^q⟩`.
pub fn h_pq_presentation(p: u32, q: u32) -> Result<Presentation> {
    if p == 0 || q == 0 {
        return Err(Error::BadIndex("annulus needs p, q >= 1".into()));
    }
    let gens = vec![
        Generator::new("r1", GeneratorRole::BoundaryTwist),
        Generator::new("r2", GeneratorRole::BoundaryTwist),
    ];
    let mut pres = Presentation::new(gens);
    let r1 = Word::gen(0);
    let r2 = Word::gen(1);
    pres.add_relator(r1.commutator(&r2))?;
    pres.add_relation(&r1.pow(p as i64), &r2.pow(q as i64))?;
    Ok(pres)
}

/// Mapping class group of the unpunctured annulus with p and q boundary
/// marks: `H_{p,q}`; for p = q the boundary swap `t` is adjoined with
/// `t² = 1` and `t rᵢ t⁻¹ = r_{3−i}`.
pub fn annulus_presentation(p: u32, q: u32) -> Result<Presentation> {
    if p != q {
        return h_pq_presentation(p, q);
    }
    if p == 0 {
        return Err(Error::BadIndex("annulus needs p, q >= 1".into()));
    }
    let gens = vec![
        Generator::new("r1", GeneratorRole::BoundaryTwist),
        Generator::new("r2", GeneratorRole::BoundaryTwist),
        Generator::new("t", GeneratorRole::HalfTwist { strand: 1 }),
    ];
    let mut pres = Presentation::new(gens);
    let r1 = Word::gen(0);
    let r2 = Word::gen(1);
    let t = Word::gen(2);
    pres.add_relator(r1.commutator(&r2))?;
    pres.add_relation(&r1.pow(p as i64), &r2.pow(p as i64))?;
    pres.add_relator(t.pow(2))?;
    pres.add_relation(&t.conjugate(&r1), &r2)?;
    pres.add_relation(&t.conjugate(&r2), &r1)?;
    Ok(pres)
}

// ---------------------------------------------------------------------------
// Genus 0: Im π and the full mapping class group.
// ---------------------------------------------------------------------------

/// Generator catalog of a genus-0 surface presentation: half twists σ̃ₖ for
/// k in the index set, Dehn twists ã_ij over the quotient strands, and the
/// 1/m boundary twists.
pub struct Genus0Catalog {
    pub strands: usize,
    pub index_set: Vec<usize>,
    pub n_punctures: usize,
    pub n_boundary: usize,
}

impl Genus0Catalog {
    pub fn new(s: &MarkedSurface) -> Self {
        Genus0Catalog {
            strands: s.strands(),
            index_set: s.index_set(),
            n_punctures: s.punctures() as usize,
            n_boundary: s.n_boundary(),
        }
    }

    pub fn sigma_gens(&self) -> Vec<Generator> {
        self.index_set
            .iter()
            .map(|&k| Generator::new(format!("s{k}"), GeneratorRole::HalfTwist { strand: k }))
            .collect()
    }

    pub fn sigma(&self, k: usize) -> Option<Word> {
        self.index_set.iter().position(|&i| i == k).map(Word::gen)
    }

    pub fn a(&self, i: usize, j: usize) -> Word {
        Word::gen(self.index_set.len() + aij_index(i, j, self.strands))
    }

    /// Presentation index of T_{b_l}, 1-based l.
    pub fn t_index(&self, l: usize) -> usize {
        let n = self.strands;
        self.index_set.len() + n * (n - 1) / 2 + (l - 1)
    }

    /// Is σ̃ₖ a half twist about two boundary components?
    pub fn is_boundary_half_twist(&self, k: usize) -> bool {
        k > self.n_punctures
    }
}

fn require_genus0(s: &MarkedSurface) -> Result<()> {
    match s.classify() {
        SurfaceClass::FeasibleGenus0
        | SurfaceClass::FourPuncturedSphere
        | SurfaceClass::OncePunctured4gon
        | SurfaceClass::TwicePuncturedDigon => Ok(()),
        other => Err(Error::WrongSurfaceClass(format!("{other:?}"))),
    }
}

/// Presentation of Im π for a genus-0 surface: generators σₖ (k in the index
/// set) and a_ij over the n+r quotient strands; relations are the Σ_S lifts,
/// the punctured-sphere PMod families, the two kernel products, and the
/// conjugation rules between σ and a.
pub fn impi_presentation_genus0(s: &MarkedSurface) -> Result<Presentation> {
    require_genus0(s)?;
    let cat = Genus0Catalog::new(s);
    let mut gens = cat.sigma_gens();
    gens.extend(aij_generators(cat.strands));
    let mut p = Presentation::new(gens);
    add_impi_relators(&mut p, &cat)?;
    Ok(p)
}

fn add_impi_relators(p: &mut Presentation, cat: &Genus0Catalog) -> Result<()> {
    let n = cat.strands;
    let a = |i: usize, j: usize| cat.a(i, j);

    // Relations from Σ_S, with σₖ² = a_{k,k+1}: the lifted involution squares
    // to the Dehn twist about the two strands it swaps.
    for (u, &i) in cat.index_set.iter().enumerate() {
        for (v, &j) in cat.index_set.iter().enumerate().skip(u + 1) {
            let (si, sj) = (Word::gen(u), Word::gen(v));
            if j == i + 1 {
                let lhs = Word::product([&si, &sj, &si]);
                let rhs = Word::product([&sj, &si, &sj]);
                p.add_relation(&lhs, &rhs)?;
            } else {
                p.add_relator(si.commutator(&sj))?;
            }
        }
    }
    for (u, &k) in cat.index_set.iter().enumerate() {
        p.add_relation(&Word::gen(u).pow(2), &a(k, k + 1))?;
    }

    // Relations from PMod of the punctured sphere.
    add_pure_braid_block(p, n, &a)?;
    if n >= 2 {
        p.add_relator(descending_a_product(n, &a))?;
        p.add_relator(first_row_a_product(n, &a))?;
    }

    // Relations of commutations between σₖ and a_ij.
    for (u, &k) in cat.index_set.iter().enumerate() {
        let sk = Word::gen(u);
        for i in 1..=n {
            for j in (i + 1)..=n {
                let aij = a(i, j);
                let conj = sk.inverse().concat(&aij).concat(&sk);
                if k == i - 1 {
                    p.add_relation(&conj, &a(i - 1, j))?;
                } else if k == i && j > i + 1 {
                    // The faithful disk action pins the conjugator sign:
                    // σᵢ⁻¹ a_{ij} σᵢ = a_{i,i+1}⁻¹ a_{i+1,j} a_{i,i+1}.
                    p.add_relation(&conj, &a(i, i + 1).inverse().conjugate(&a(i + 1, j)))?;
                } else if k == i && j == i + 1 {
                    p.add_relator(aij.commutator(&sk))?;
                } else if k == j - 1 {
                    p.add_relation(&conj, &a(i, j - 1))?;
                } else if k == j {
                    p.add_relation(&conj, &a(j, j + 1).inverse().conjugate(&a(i, j + 1)))?;
                } else {
                    p.add_relator(aij.commutator(&sk))?;
                }
            }
        }
    }
    Ok(())
}

/// Full genus-0 presentation of the mapping class group stabilizing
/// boundaries: the Im π relators lifted verbatim, then the boundary-twist
/// block: the T's commute among themselves and with every ã_ij; a boundary
/// half twist conjugates the two T's it exchanges and commutes with the
/// rest.
pub fn mcg_presentation_genus0(s: &MarkedSurface) -> Result<Presentation> {
    require_genus0(s)?;
    let cat = Genus0Catalog::new(s);
    let r = cat.n_boundary;
    let mut gens = cat.sigma_gens();
    gens.extend(aij_generators(cat.strands));
    gens.extend((1..=r).map(|l| Generator::new(format!("T{l}"), GeneratorRole::BoundaryTwist)));
    let mut p = Presentation::new(gens);
    add_impi_relators(&mut p, &cat)?;

    let t = |l: usize| Word::gen(cat.t_index(l));
    for l1 in 1..=r {
        for l2 in (l1 + 1)..=r {
            p.add_relator(t(l1).commutator(&t(l2)))?;
        }
    }
    for i in 1..=cat.strands {
        for j in (i + 1)..=cat.strands {
            for l in 1..=r {
                p.add_relator(cat.a(i, j).commutator(&t(l)))?;
            }
        }
    }
    for &k in &cat.index_set {
        let sk = cat.sigma(k).expect("k in index set");
        if cat.is_boundary_half_twist(k) {
            let b1 = k - cat.n_punctures;
            let b2 = b1 + 1;
            p.add_relation(&sk.conjugate(&t(b1)), &t(b2))?;
            p.add_relation(&sk.conjugate(&t(b2)), &t(b1))?;
            for l in 1..=r {
                if l != b1 && l != b2 {
                    p.add_relator(sk.commutator(&t(l)))?;
                }
            }
        } else {
            for l in 1..=r {
                p.add_relator(sk.commutator(&t(l)))?;
            }
        }
    }
    Ok(p)
}

// ---------------------------------------------------------------------------
// Genus ≥ 1: Artin-quotient presentations.
// ---------------------------------------------------------------------------

/// Δ(X)^power over a Γ graph, rejecting unsupported induced shapes with a
/// diagnostic instead of guessing a word.
fn delta(graph: &CoxeterGraph, set: &[usize], power: u32) -> Result<Word> {
    let sub = classify_induced(graph, set);
    if sub.shape == SubgraphShape::Unsupported {
        let names: Vec<&str> = set.iter().map(|&v| graph.names()[v].as_str()).collect();
        return Err(Error::UnsupportedSubgraph(format!("Δ request on {{{}}}", names.join(", "))));
    }
    fundamental_word(&sub, power)
}

/// Classifies every Δ-subset appearing in a relator family; exposed so
/// emission checks can confirm each one is supported.
pub fn classify_delta_subset(graph: &CoxeterGraph, set: &[usize]) -> ClassifiedSubgraph {
    classify_induced(graph, set)
}

/// Presentation of the pure mapping class group of the one-boundary
/// genus-g surface with n punctures: the Artin presentation of Γ plus the
/// three relation blocks (low-genus fundamental relations, commutation
/// relations, and relations between fundamental elements).
pub fn pmod_g1_presentation(g: u32, n: u32) -> Result<Presentation> {
    if g < 1 {
        return Err(Error::GenusMismatch { expected: ">= 1", found: g });
    }
    let layout = gamma_one_boundary(g, n);
    let mut p = artin_presentation(&layout.graph);
    let gr = &layout.graph;
    let x = |i: u32| layout.x(i);
    let y = |j: u32| layout.y(j);

    if g >= 2 {
        let z = layout.z().expect("g >= 2");
        let lhs = delta(gr, &[y(1), y(2), y(3), z], 4)?;
        let rhs = delta(gr, &[x(0), y(1), y(2), y(3), z], 2)?;
        p.add_relation(&lhs, &rhs)?;
    }
    if g >= 3 {
        let z = layout.z().expect("g >= 3");
        let e6: Vec<usize> = (1..=5).map(y).chain([z]).collect();
        let e7: Vec<usize> = [x(0)].into_iter().chain((1..=5).map(y)).chain([z]).collect();
        p.add_relation(&delta(gr, &e6, 2)?, &delta(gr, &e7, 1)?)?;
    }
    add_commutation_blocks(&mut p, gr, &layout, n, g)?;
    if g >= 2 && n >= 1 {
        let z = layout.z().expect("g >= 2");
        let lhs = delta(gr, &[x(0), x(1), y(1), y(2), y(3), z], 1)?;
        let rhs = delta(gr, &[x(1), y(1), y(2), y(3), z], 2)?;
        p.add_relation(&lhs, &rhs)?;
        for i in 1..n {
            let (lhs, rhs) = fundamental_pair(gr, &layout, i)?;
            p.add_relation(&lhs, &rhs)?;
        }
    }
    Ok(p)
}

/// The two commutation blocks shared by the one-boundary presentation and
/// the closed-quotient one: conjugates of xᵢ by Δ(x_{i+1}, x_j, y₁) commute
/// with every earlier xₖ, and with y₂ when the genus allows it.
fn add_commutation_blocks(
    p: &mut Presentation,
    gr: &CoxeterGraph,
    layout: &GammaLayout,
    n: u32,
    g: u32,
) -> Result<()> {
    for i in 0..n {
        for j in 0..i {
            let d = delta(gr, &[layout.x(i + 1), layout.x(j), layout.y(1)], 1)?;
            let core = d.inverse().concat(&Word::gen(layout.x(i))).concat(&d);
            for k in 0..j {
                p.add_relator(Word::gen(layout.x(k)).commutator(&core))?;
            }
            if g >= 2 {
                p.add_relator(Word::gen(layout.y(2)).commutator(&core))?;
            }
        }
    }
    Ok(())
}

/// `Δ(xᵢ, x_{i+1}, y₁, y₂, y₃, z) Δ⁻²(x_{i+1}, y₁, y₂, y₃, z)` and
/// `Δ(x₀, xᵢ, x_{i+1}, y₁) Δ⁻²(x₀, x_{i+1}, y₁)` for the fundamental block.
fn fundamental_pair(gr: &CoxeterGraph, layout: &GammaLayout, i: u32) -> Result<(Word, Word)> {
    let x = |i: u32| layout.x(i);
    let y = |j: u32| layout.y(j);
    let z = layout.z().expect("g >= 2");
    let lhs = delta(gr, &[x(i), x(i + 1), y(1), y(2), y(3), z], 1)?
        .concat(&delta(gr, &[x(i + 1), y(1), y(2), y(3), z], 2)?.inverse());
    let rhs = delta(gr, &[x(0), x(i), x(i + 1), y(1)], 1)?
        .concat(&delta(gr, &[x(0), x(i + 1), y(1)], 2)?.inverse());
    Ok((lhs, rhs))
}

/// The words `s_{ij}` over a closed-quotient Γ layout:
/// `s_{ii} = xᵢ` and `s_{ij} = (y₁x_{i−1}x_jy₁) x_{j−1} (y₁x_{i−1}x_jy₁)⁻¹`.
pub fn sij_word(layout: &GammaLayout, i: u32, j: u32) -> Result<Word> {
    if !(1 <= i && i <= j) {
        return Err(Error::BadIndex(format!("s_({i},{j})")));
    }
    if i == j {
        return Ok(Word::gen(layout.x(i)));
    }
    let u = Word::product([
        &Word::gen(layout.y(1)),
        &Word::gen(layout.x(i - 1)),
        &Word::gen(layout.x(j)),
        &Word::gen(layout.y(1)),
    ]);
    Ok(u.conjugate(&Word::gen(layout.x(j - 1))))
}

/// The words `a_{ij} = x_{i−1} s_{i+1,j} xᵢ⁻¹ s_{ij}⁻¹` over a
/// closed-quotient Γ layout.
pub fn aij_word_genus(layout: &GammaLayout, i: u32, j: u32) -> Result<Word> {
    if !(1 <= i && i < j) {
        return Err(Error::BadIndex(format!("a_({i},{j})")));
    }
    Ok(Word::product([
        &Word::gen(layout.x(i - 1)),
        &sij_word(layout, i + 1, j)?,
        &Word::gen(layout.x(i)).inverse(),
        &sij_word(layout, i, j)?.inverse(),
    ]))
}

/// The kernel words of the boundary-filling map on the one-boundary surface,
/// expressed over the closed-quotient Γ layout. `e`/`e_alt` only exist for
/// g = 1.
pub struct KernelWords {
    pub x_n: Word,
    pub x_n_alt: Word,
    pub e: Option<Word>,
    pub e_alt: Option<Word>,
}

/// Kernel words for genus g with n punctures: `x_n = x₀^{1−n}Δ(x₁, v₁, …,
/// v_{n−1})`, its counterpart through z and the y-chain (or x₀ at g = 1),
/// and for g = 1 the pair `e = Δ²(v₁, …, v_{n−1})`, `e' = Δ⁴(x₀, y₁)`.
pub fn kernel_words_g1(g: u32, n: u32) -> Result<(GammaLayout, KernelWords)> {
    if g < 1 {
        return Err(Error::GenusMismatch { expected: ">= 1", found: g });
    }
    let layout = gamma_closed(g, n);
    let gr = &layout.graph;

    let x_n = if n == 0 {
        Word::gen(layout.x(0))
    } else {
        let bset: Vec<usize> = [layout.x(1)].into_iter().chain((1..n).map(|k| layout.v(k))).collect();
        Word::gen(layout.x(0)).pow(1 - n as i64).concat(&delta(gr, &bset, 1)?)
    };
    let x_n_alt = if g == 1 {
        Word::gen(layout.x(0))
    } else {
        let zset: Vec<usize> =
            [layout.z().expect("g >= 2")].into_iter().chain((2..=(2 * g - 1)).map(|j| layout.y(j))).collect();
        Word::gen(layout.x(0)).pow(3 - 2 * g as i64).concat(&delta(gr, &zset, 1)?)
    };
    let (e, e_alt) = if g == 1 {
        let e = if n >= 2 {
            let vset: Vec<usize> = (1..n).map(|k| layout.v(k)).collect();
            Some(delta(gr, &vset, 2)?)
        } else {
            Some(Word::empty())
        };
        let e_alt = Some(delta(gr, &[layout.x(0), layout.y(1)], 4)?);
        (e, e_alt)
    } else {
        (None, None)
    };
    Ok((layout, KernelWords { x_n, x_n_alt, e, e_alt }))
}

/// Catalog of the genus-≥1 presentation: how layout vertices and boundary
/// twists map to presentation generator indices.
pub struct Genus1Catalog {
    pub layout: GammaLayout,
    pub index_set: Vec<usize>,
    pub n_punctures: usize,
    pub boundary: Vec<u32>,
    vertex_to_gen: Vec<Option<usize>>,
    n_kept: usize,
}

impl Genus1Catalog {
    pub fn gen_of_vertex(&self, v: usize) -> Option<usize> {
        self.vertex_to_gen[v]
    }

    pub fn t_index(&self, l: usize) -> usize {
        self.n_kept + (l - 1)
    }

    /// Rewrites a layout-vertex word into presentation indices.
    fn embed(&self, w: &Word) -> Result<Word> {
        let letters = w
            .letters()
            .iter()
            .map(|l| {
                self.vertex_to_gen[l.gen]
                    .map(|g| Letter::new(g, l.inv))
                    .ok_or_else(|| Error::UnknownGenerator { id: l.gen, n_gens: self.n_kept })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Word::from_letters(letters))
    }

    /// T_i substitution: the Dehn twist about the i-th quotient puncture is
    /// trivial for an original puncture and `T_{b_k}^m` for a boundary
    /// component with m marked points.
    fn t_sub(&self, i: usize) -> Word {
        if i <= self.n_punctures {
            Word::empty()
        } else {
            let l = i - self.n_punctures;
            Word::gen(self.t_index(l)).pow(self.boundary[l - 1] as i64)
        }
    }
}

/// The genus-≥1 mapping class group presentation: the retained Artin
/// generators of the closed-quotient Γ (x's, y's, z, and vₖ for k in the
/// index set) together with the boundary twists, under the lifted Im π
/// relations and the boundary commutation block.
pub fn mcg_presentation_genus_ge1(s: &MarkedSurface) -> Result<Presentation> {
    let g = s.genus();
    if g < 1 {
        return Err(Error::GenusMismatch { expected: ">= 1", found: g });
    }
    let m = s.punctures() as usize;
    let r = s.n_boundary();
    let n = (m + r) as u32;
    let layout = gamma_closed(g, n);
    let index_set = s.index_set();

    // Generator list: x0..xn, y's, z keep their layout order; v's are kept
    // only for the index set; boundary twists close the list.
    let mut vertex_to_gen: Vec<Option<usize>> = vec![None; layout.n_vertices()];
    let mut gens: Vec<Generator> = Vec::new();
    for i in 0..=n {
        vertex_to_gen[layout.x(i)] = Some(gens.len());
        gens.push(Generator::new(format!("x{i}"), GeneratorRole::DehnTwist));
    }
    for j in 1..=(2 * g - 1) {
        vertex_to_gen[layout.y(j)] = Some(gens.len());
        gens.push(Generator::new(format!("y{j}"), GeneratorRole::DehnTwist));
    }
    if let Some(z) = layout.z() {
        vertex_to_gen[z] = Some(gens.len());
        gens.push(Generator::new("z", GeneratorRole::DehnTwist));
    }
    for &k in &index_set {
        vertex_to_gen[layout.v(k as u32)] = Some(gens.len());
        gens.push(Generator::new(format!("v{k}"), GeneratorRole::HalfTwist { strand: k }));
    }
    let cat = Genus1Catalog {
        index_set,
        n_punctures: m,
        boundary: s.boundary().to_vec(),
        vertex_to_gen,
        n_kept: gens.len(),
        layout,
    };
    for l in 1..=r {
        gens.push(Generator::new(format!("T{l}"), GeneratorRole::BoundaryTwist));
    }
    let mut p = Presentation::new(gens);
    let layout = &cat.layout;
    let gr = &layout.graph;

    // Artin relations among the retained vertices.
    let kept: Vec<usize> =
        (0..layout.n_vertices()).filter(|&v| cat.vertex_to_gen[v].is_some()).collect();
    for (ai, &u) in kept.iter().enumerate() {
        for &v in kept.iter().skip(ai + 1) {
            let mlabel = gr.label(u, v);
            let lhs = cat.embed(&prod_word(u, v, mlabel)?)?;
            let rhs = cat.embed(&prod_word(v, u, mlabel)?)?;
            p.add_relation(&lhs, &rhs)?;
        }
    }

    let x = |i: u32| layout.x(i);
    let y = |j: u32| layout.y(j);

    // Lifted Im π relations.
    if g >= 2 {
        let z = layout.z().expect("g >= 2");
        let lhs = cat.embed(&delta(gr, &[y(1), y(2), y(3), z], 4)?)?;
        let rhs = cat.embed(&delta(gr, &[x(0), y(1), y(2), y(3), z], 2)?)?;
        p.add_relation(&lhs, &rhs)?;
    }
    if g >= 3 {
        let z = layout.z().expect("g >= 3");
        let e6: Vec<usize> = (1..=5).map(y).chain([z]).collect();
        let e7: Vec<usize> = [x(0)].into_iter().chain((1..=5).map(y)).chain([z]).collect();
        p.add_relation(&cat.embed(&delta(gr, &e6, 2)?)?, &cat.embed(&delta(gr, &e7, 1)?)?)?;
    }
    {
        // Commutation blocks, embedded.
        let mut tmp = artin_presentation(gr);
        let before = tmp.relators().len();
        add_commutation_blocks(&mut tmp, gr, layout, n, g)?;
        for rel in &tmp.relators()[before..] {
            p.add_relator(cat.embed(rel)?)?;
        }
    }
    if g >= 2 && n >= 1 {
        let z = layout.z().expect("g >= 2");
        // Δ(x₀,x₁,y₁,y₂,y₃,z) = T₁ Δ²(x₁,y₁,y₂,y₃,z)
        let lhs = cat.embed(&delta(gr, &[x(0), x(1), y(1), y(2), y(3), z], 1)?)?;
        let rhs = cat.t_sub(1).concat(&cat.embed(&delta(gr, &[x(1), y(1), y(2), y(3), z], 2)?)?);
        p.add_relation(&lhs, &rhs)?;
        for i in 1..n {
            let (lhs, rhs) = fundamental_pair(gr, layout, i)?;
            let rhs = cat.t_sub(i as usize + 1).concat(&cat.embed(&rhs)?);
            p.add_relation(&cat.embed(&lhs)?, &rhs)?;
        }
    }
    // Kernel relations, with the product words spelled out through s and a.
    let big_a = {
        let mut parts = Vec::new();
        for i in 1..n {
            for j in (i + 1)..=n {
                parts.push(aij_word_genus(layout, i, j)?);
            }
        }
        Word::product(parts.iter())
    };
    let s_row = {
        let mut parts = Vec::new();
        for j in 1..=n {
            parts.push(sij_word(layout, 1, j)?);
        }
        Word::product(parts.iter())
    };
    let x0 = Word::gen(x(0));
    if g == 1 {
        let lhs = x0.pow(n as i64);
        let rhs = x0.pow(1 - n as i64).concat(&s_row).concat(&big_a);
        p.add_relation(&cat.embed(&lhs)?, &cat.embed(&rhs)?)?;
        let lhs = delta(gr, &[x(0), y(1)], 4)?;
        p.add_relation(&cat.embed(&lhs)?, &cat.embed(&big_a)?)?;
    } else {
        let zset: Vec<usize> =
            [layout.z().expect("g >= 2")].into_iter().chain((2..=(2 * g - 1)).map(y)).collect();
        let lhs = x0.pow(2 - 2 * g as i64 + n as i64).concat(&delta(gr, &zset, 1)?);
        let rhs = x0.pow(1 - n as i64).concat(&s_row).concat(&big_a);
        p.add_relation(&cat.embed(&lhs)?, &cat.embed(&rhs)?)?;
    }
    for &k in &cat.index_set {
        let vk = Word::gen(cat.gen_of_vertex(layout.v(k as u32)).expect("kept"));
        let aw = cat.embed(&aij_word_genus(layout, k as u32, k as u32 + 1)?)?;
        p.add_relation(&vk.pow(2), &aw)?;
    }

    // Boundary commutation block.
    let t = |l: usize| Word::gen(cat.t_index(l));
    for l1 in 1..=r {
        for l2 in (l1 + 1)..=r {
            p.add_relator(t(l1).commutator(&t(l2)))?;
        }
    }
    for &v in &kept {
        let gen_word = Word::gen(cat.gen_of_vertex(v).expect("kept"));
        let half_twist_k = cat.index_set.iter().find(|&&k| {
            cat.gen_of_vertex(layout.v(k as u32)) == cat.gen_of_vertex(v) && k > m
        });
        match half_twist_k {
            Some(&k) => {
                let b1 = k - m;
                let b2 = b1 + 1;
                p.add_relation(&gen_word.conjugate(&t(b1)), &t(b2))?;
                p.add_relation(&gen_word.conjugate(&t(b2)), &t(b1))?;
                for l in 1..=r {
                    if l != b1 && l != b2 {
                        p.add_relator(gen_word.commutator(&t(l)))?;
                    }
                }
            }
            None => {
                for l in 1..=r {
                    p.add_relator(gen_word.commutator(&t(l)))?;
                }
            }
        }
    }
    Ok(p)
}

/// Catalog accessor used by callers that need the generator layout of the
/// genus-≥1 presentation without rebuilding it.
pub fn genus1_catalog(s: &MarkedSurface) -> Result<Genus1Catalog> {
    let g = s.genus();
    if g < 1 {
        return Err(Error::GenusMismatch { expected: ">= 1", found: g });
    }
    let m = s.punctures() as usize;
    let r = s.n_boundary();
    let n = (m + r) as u32;
    let layout = gamma_closed(g, n);
    let index_set = s.index_set();
    let mut vertex_to_gen: Vec<Option<usize>> = vec![None; layout.n_vertices()];
    let mut count = 0;
    for i in 0..=n {
        vertex_to_gen[layout.x(i)] = Some(count);
        count += 1;
    }
    for j in 1..=(2 * g - 1) {
        vertex_to_gen[layout.y(j)] = Some(count);
        count += 1;
    }
    if let Some(z) = layout.z() {
        vertex_to_gen[z] = Some(count);
        count += 1;
    }
    for &k in &index_set {
        vertex_to_gen[layout.v(k as u32)] = Some(count);
        count += 1;
    }
    Ok(Genus1Catalog {
        index_set,
        n_punctures: m,
        boundary: s.boundary().to_vec(),
        vertex_to_gen,
        n_kept: count,
        layout,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;
    use crate::words::{
        abelianization, theta_images, todd_coxeter, verify_homomorphism, CosetOutcome, HomTarget,
        TargetElement,
    };

    fn surf(g: u32, b: &[u32], n: u32) -> MarkedSurface {
        MarkedSurface::new(g, b.to_vec(), n).unwrap()
    }

    #[test]
    fn braid_counts() {
        assert_eq!(braid_presentation(2).unwrap().relators().len(), 0);
        assert_eq!(braid_presentation(3).unwrap().relators().len(), 1);
        // n = 4: two braid relators and one commutation.
        let p = braid_presentation(4).unwrap();
        assert_eq!(p.relators().len(), 3);
        assert_eq!(p.relators().iter().filter(|r| r.len() == 6).count(), 2);
        assert_eq!(p.relators().iter().filter(|r| r.len() == 4).count(), 1);
        assert!(braid_presentation(1).is_err());
    }

    #[test]
    fn braid_theta_check() {
        let p = braid_presentation(3).unwrap();
        let images = theta_images(&p, 3).unwrap();
        assert!(verify_homomorphism(&p, &images, &HomTarget::Permutation { degree: 3 }).unwrap().ok);
    }

    #[test]
    fn braid_abelianization_is_z() {
        for n in 2..=6 {
            assert_eq!(abelianization(&braid_presentation(n).unwrap()), vec![0]);
        }
    }

    #[test]
    fn pure_braid_counts() {
        assert_eq!(pure_braid_presentation(2).unwrap().relators().len(), 0);
        assert_eq!(pure_braid_presentation(3).unwrap().relators().len(), 2);
        // n = 4: 4 triples × 2 + 1 quadruple × 3.
        assert_eq!(pure_braid_presentation(4).unwrap().relators().len(), 11);
    }

    #[test]
    fn aij_words() {
        // a₁₂ = σ₁².
        assert_eq!(aij_in_braid(1, 2, 4).unwrap(), Word::gen(0).pow(2));
        // a₁₃ = σ₂ σ₁² σ₂⁻¹.
        assert_eq!(aij_in_braid(1, 3, 4).unwrap(), Word::gen(1).conjugate(&Word::gen(0).pow(2)));
        // a₂₄ = σ₃ σ₂² σ₃⁻¹.
        assert_eq!(aij_in_braid(2, 4, 4).unwrap(), Word::gen(2).conjugate(&Word::gen(1).pow(2)));
        assert!(aij_in_braid(2, 2, 4).is_err());
    }

    #[test]
    fn sphere_presentation_content() {
        let p = sphere_mcg_presentation(4).unwrap();
        let cycle = Word::from_letters((0..3).map(|k| Letter::new(k, false)).collect());
        assert!(p.relators().contains(&cycle.pow(4)));
        let images = theta_images(&p, 4).unwrap();
        assert!(verify_homomorphism(&p, &images, &HomTarget::Permutation { degree: 4 }).unwrap().ok);
        // Abelianization: cyclic of order gcd(n(n−1), 2(n−1)).
        assert_eq!(abelianization(&sphere_mcg_presentation(5).unwrap()), vec![4]);
        assert_eq!(abelianization(&sphere_mcg_presentation(4).unwrap()), vec![6]);
    }

    #[test]
    fn pmod_sphere_n3() {
        let p = pmod_sphere_presentation(3).unwrap();
        let a = |i, j| Word::gen(aij_index(i, j, 3));
        let triple = Word::product([&a(1, 2), &a(1, 3), &a(2, 3)]);
        assert!(p.relators().contains(&triple));
        let row = Word::product([&a(1, 2), &a(1, 3)]);
        assert!(p.relators().contains(&row));
        // SNF oracle: the two product relators have exponent rows
        // (1,1,1) and (1,1,0); everything else abelianizes to zero, so the
        // cokernel is infinite cyclic.
        assert_eq!(abelianization(&p), vec![0]);
        for r in p.relators() {
            assert_eq!(r, &crate::words::free_reduce(r.letters().iter().copied()));
        }
    }

    #[test]
    fn sigma_s_orders() {
        let p = sigma_s_presentation(&surf(0, &[], 3));
        assert_eq!(todd_coxeter(&p, &[], 100), CosetOutcome::Complete(6));
        let p = sigma_s_presentation(&surf(0, &[1, 1], 2));
        assert_eq!(todd_coxeter(&p, &[], 100), CosetOutcome::Complete(4));
        let p = sigma_s_presentation(&surf(0, &[2, 3], 0));
        assert_eq!(p.n_gens(), 0);
        assert_eq!(todd_coxeter(&p, &[], 100), CosetOutcome::Complete(1));
    }

    #[test]
    fn annulus_groups() {
        let h11 = h_pq_presentation(1, 1).unwrap();
        assert_eq!(abelianization(&h11), vec![0]);
        // With the swap adjoined the abelianization picks up the involution.
        assert_eq!(abelianization(&annulus_presentation(1, 1).unwrap()), vec![2, 0]);
        let h23 = annulus_presentation(2, 3).unwrap();
        assert_eq!(h23.n_gens(), 2);
        assert_eq!(h23.relators().len(), 2);
        assert_eq!(h23.relators()[0], Word::gen(0).commutator(&Word::gen(1)));
        assert_eq!(h23.relators()[1], Word::gen(0).pow(2).concat(&Word::gen(1).pow(-3)));
        let h22 = annulus_presentation(2, 2).unwrap();
        assert_eq!(h22.n_gens(), 3);
        let t = Word::gen(2);
        assert!(h22.relators().contains(&t.conjugate(&Word::gen(0)).concat(&Word::gen(1).inverse())));
    }

    #[test]
    fn impi_disk_structure() {
        // Disk with 3 punctures, 1 boundary mark: 4 strands, σ at 1, 2.
        let s = surf(0, &[1], 3);
        let p = impi_presentation_genus0(&s).unwrap();
        assert_eq!(s.index_set(), vec![1, 2]);
        assert_eq!(p.n_gens(), 2 + 6);
        // σ₁² = a₁₂ present.
        let cat = Genus0Catalog::new(&s);
        let rel = Word::gen(0).pow(2).concat(&cat.a(1, 2).inverse());
        assert!(p.relators().contains(&rel));
        // θ kills every relator.
        let images = theta_images(&p, 4).unwrap();
        assert!(verify_homomorphism(&p, &images, &HomTarget::Permutation { degree: 4 }).unwrap().ok);
        // Annulus input is rejected.
        assert!(impi_presentation_genus0(&surf(0, &[2, 3], 0)).is_err());
    }

    #[test]
    fn impi_relator_count() {
        // Block sizes match direct enumeration for the 4-punctured sphere.
        let s = surf(0, &[], 4);
        let p = impi_presentation_genus0(&s).unwrap();
        let i_len = 3usize; // index set {1,2,3}
        let n = 4usize;
        let n_pairs = n * (n - 1) / 2;
        let sigma_block = i_len * (i_len - 1) / 2 + i_len;
        let quads = 1usize; // C(4,4)
        let triples = 4usize; // C(4,3)
        let ps0_block = triples * 2 + quads * 3 + 2;
        let comm_block = i_len * n_pairs;
        assert_eq!(p.relators().len(), sigma_block + ps0_block + comm_block);
    }

    #[test]
    fn mcg0_boundary_blocks() {
        // Disk with 2 punctures: T₁ commutes with everything.
        let s = surf(0, &[1], 2);
        let p = mcg_presentation_genus0(&s).unwrap();
        let cat = Genus0Catalog::new(&s);
        let t1 = Word::gen(cat.t_index(1));
        let sigma1 = cat.sigma(1).unwrap();
        assert!(p.relators().contains(&sigma1.commutator(&t1)));
        for i in 1..=3 {
            for j in (i + 1)..=3 {
                assert!(p.relators().contains(&cat.a(i, j).commutator(&t1)));
            }
        }
        // Two boundary components with equal counts: σ̃ conjugates T₁ to T₂.
        let s = surf(0, &[2, 2], 1);
        assert_eq!(s.index_set(), vec![2]);
        let p = mcg_presentation_genus0(&s).unwrap();
        let cat = Genus0Catalog::new(&s);
        let sk = cat.sigma(2).unwrap();
        let (t1, t2) = (Word::gen(cat.t_index(1)), Word::gen(cat.t_index(2)));
        assert!(p.relators().contains(&sk.conjugate(&t1).concat(&t2.inverse())));
        assert!(p.relators().contains(&sk.conjugate(&t2).concat(&t1.inverse())));
        // θ into Σ_S degree 3.
        let images = theta_images(&p, 3).unwrap();
        assert!(verify_homomorphism(&p, &images, &HomTarget::Permutation { degree: 3 }).unwrap().ok);
        // No-boundary surface reduces to Im π.
        let s = surf(0, &[], 5);
        assert_eq!(
            mcg_presentation_genus0(&s).unwrap().relators(),
            impi_presentation_genus0(&s).unwrap().relators()
        );
        assert!(mcg_presentation_genus0(&surf(1, &[], 2)).is_err());
    }

    #[test]
    fn unpunctured_disk_mcg_is_free_on_t() {
        let s = surf(0, &[4], 0);
        let p = mcg_presentation_genus0(&s).unwrap();
        assert_eq!(p.n_gens(), 1);
        assert!(p.relators().is_empty());
        assert_eq!(abelianization(&p), vec![0]);
    }

    #[test]
    fn pmod_g1_small_cases() {
        // g = 1, n = 0: pure Artin A₂ on x₀, y₁.
        let p = pmod_g1_presentation(1, 0).unwrap();
        assert_eq!(p.n_gens(), 2);
        assert_eq!(p.relators().len(), 1);
        assert!(pmod_g1_presentation(0, 2).is_err());
        // g = 2, n = 0: includes Δ⁴(y₁y₂y₃z) = Δ²(x₀y₁y₂y₃z).
        let p = pmod_g1_presentation(2, 0).unwrap();
        let layout = gamma_one_boundary(2, 0);
        let z = layout.z().unwrap();
        let lhs = delta(&layout.graph, &[layout.y(1), layout.y(2), layout.y(3), z], 4).unwrap();
        let rhs =
            delta(&layout.graph, &[layout.x(0), layout.y(1), layout.y(2), layout.y(3), z], 2).unwrap();
        // Δ⁴(A₄) has 40 letters, Δ²(A₅) has 30.
        assert_eq!(lhs.len(), 40);
        assert_eq!(rhs.len(), 30);
        assert!(p.relators().contains(&lhs.concat(&rhs.inverse())));
    }

    #[test]
    fn kernel_word_examples() {
        // g = 1: x_n' = x₀ and e' = ((x₀y₁)³)².
        let (layout, kw) = kernel_words_g1(1, 2).unwrap();
        assert_eq!(kw.x_n_alt, Word::gen(layout.x(0)));
        let e_alt = kw.e_alt.unwrap();
        assert_eq!(e_alt.len(), 12);
        let expected: Vec<usize> = (0..6)
            .flat_map(|k| [layout.x(0), layout.y(1)].into_iter().skip(k % 2).take(1))
            .collect();
        // Alternating x₀ y₁ … of length 12.
        let got: Vec<usize> = e_alt.letters().iter().map(|l| l.gen).collect();
        assert_eq!(got.len(), 12);
        assert!(got.chunks(2).all(|c| c == [layout.x(0), layout.y(1)]));
        let _ = expected;
        // g = 2, n = 1: x_n = Δ(x₁) = x₁.
        let (layout, kw) = kernel_words_g1(2, 1).unwrap();
        assert_eq!(kw.x_n, Word::gen(layout.x(1)));
        assert!(kw.e.is_none());
    }

    #[test]
    fn sij_aij_words() {
        let layout = gamma_closed(1, 3);
        assert_eq!(sij_word(&layout, 2, 2).unwrap(), Word::gen(layout.x(2)));
        // s₁₂ reduces to 9 letters.
        assert_eq!(sij_word(&layout, 1, 2).unwrap().len(), 9);
        // a_{i,i+1} = x_{i−1} x_{i+1} xᵢ⁻¹ s_{i,i+1}⁻¹.
        let a12 = aij_word_genus(&layout, 1, 2).unwrap();
        let direct = Word::product([
            &Word::gen(layout.x(0)),
            &Word::gen(layout.x(2)),
            &Word::gen(layout.x(1)).inverse(),
            &sij_word(&layout, 1, 2).unwrap().inverse(),
        ]);
        assert_eq!(a12, direct);
    }

    #[test]
    fn genus1_presentation_emission() {
        // Once-punctured torus: relator x₀ x₁⁻¹ from the kernel block.
        let s = surf(1, &[], 1);
        let p = mcg_presentation_genus_ge1(&s).unwrap();
        let x0x1 = Word::gen(0).concat(&Word::gen(1).inverse());
        assert!(p.relators().contains(&x0x1));
        // And Δ⁴(x₀, y₁) with empty right side: 12 alternating letters.
        assert!(p.relators().iter().any(|r| r.len() == 12));

        // Genus 2, one boundary with 2 marks: T₁ = T_{b₁}² appears.
        let s = surf(2, &[2], 0);
        let p = mcg_presentation_genus_ge1(&s).unwrap();
        let cat = genus1_catalog(&s).unwrap();
        let t1sq = Word::gen(cat.t_index(1)).pow(2);
        let found = p.relators().iter().any(|r| {
            r.letters().windows(2).any(|w| {
                w.iter().all(|l| l.gen == cat.t_index(1) && l.inv)
            })
        });
        assert!(found, "expected a relator containing T1^-2, i.e. inverted {t1sq:?}");
        // θ kills all relators: degree = m + r = 1.
        let images = theta_images(&p, 1).unwrap();
        assert!(verify_homomorphism(&p, &images, &HomTarget::Permutation { degree: 1 }).unwrap().ok);
        assert!(mcg_presentation_genus_ge1(&surf(0, &[], 4)).is_err());
    }

    #[test]
    fn genus1_theta_across_grid() {
        for (g, n, b) in [(1u32, 2u32, vec![]), (1, 1, vec![1u32]), (2, 0, vec![1, 1]), (1, 0, vec![3])] {
            let s = surf(g, &b, n);
            let p = mcg_presentation_genus_ge1(&s).unwrap();
            let deg = s.strands().max(1);
            let images = theta_images(&p, deg).unwrap();
            let out = verify_homomorphism(&p, &images, &HomTarget::Permutation { degree: deg }).unwrap();
            assert!(out.ok, "θ failed for {s:?} at relator {:?}", out.failure);
        }
    }

    #[test]
    fn sphere_theta_passes_σn() {
        for n in 4..=8 {
            let p = sphere_mcg_presentation(n).unwrap();
            let images = theta_images(&p, n).unwrap();
            assert!(verify_homomorphism(&p, &images, &HomTarget::Permutation { degree: n }).unwrap().ok);
        }
        // Direct transposition images, not via roles.
        let p = braid_presentation(3).unwrap();
        let images = vec![
            TargetElement::Perm(Perm::transposition(3, 0, 1).unwrap()),
            TargetElement::Perm(Perm::transposition(3, 1, 2).unwrap()),
        ];
        assert!(verify_homomorphism(&p, &images, &HomTarget::Permutation { degree: 3 }).unwrap().ok);
    }
}
