//! The 4-punctured sphere: stock triangulations, maximal-quiver detection,
//! and the mutation-sequence facts feeding its automorphism-group table row.

use crate::cluster::{mutation_path, seed_isomorphic, ExchangeMatrix, Seed, Side, Tag, TaggedTriangulation};
use crate::perm::Perm;
use crate::{Error, Result};

/// The maximal triangulation: four punctures W, N, E, S; four outer arcs,
/// the front diagonal a1 = W–E and the back diagonal a6 = N–S. Its quiver
/// has the maximal arrow count (12) in the mutation class.
pub fn stock_maximal() -> TaggedTriangulation {
    let names = (1..=6).map(|i| format!("a{i}")).collect();
    // Punctures: W = 0, N = 1, E = 2, S = 3.
    let tris = vec![
        [Side::Arc(1), Side::Arc(2), Side::Arc(0)],
        [Side::Arc(0), Side::Arc(3), Side::Arc(4)],
        [Side::Arc(4), Side::Arc(5), Side::Arc(1)],
        [Side::Arc(2), Side::Arc(5), Side::Arc(3)],
    ];
    let verts = vec![[0, 1, 2], [0, 2, 3], [0, 3, 1], [2, 1, 3]];
    let ends = vec![[0, 2], [0, 1], [1, 2], [2, 3], [0, 3], [1, 3]];
    let tags = vec![[Tag::Plain, Tag::Plain]; 6];
    TaggedTriangulation::new(names, tris, verts, 4, ends, tags).expect("stock maximal is valid")
}

/// The triangulation with three self-folded triangles: radii 1, 3, 4 from
/// the central puncture to the outer ones, loops 6, 2, 5 around them, and
/// the central triangle spanned by the loops.
pub fn stock_three_self_folded() -> TaggedTriangulation {
    let names = (1..=6).map(|i| format!("a{i}")).collect();
    // Punctures: centre = 0, up = 1, right = 2, left = 3.
    let tris = vec![
        // Central triangle through the three loops 2, 5, 6.
        [Side::Arc(1), Side::Arc(4), Side::Arc(5)],
        // Self-folded: loop 2 around "up" with radius 3.
        [Side::Arc(1), Side::Arc(2), Side::Arc(2)],
        // Self-folded: loop 5 around "right" with radius 4.
        [Side::Arc(4), Side::Arc(3), Side::Arc(3)],
        // Self-folded: loop 6 around "left" with radius 1.
        [Side::Arc(5), Side::Arc(0), Side::Arc(0)],
    ];
    let verts = vec![[0, 0, 0], [0, 0, 1], [0, 0, 2], [0, 0, 3]];
    let ends = vec![[0, 3], [0, 1], [0, 1], [0, 2], [0, 2], [0, 3]];
    let tags = vec![
        [Tag::Plain, Tag::Plain],
        [Tag::Plain, Tag::Notched],
        [Tag::Plain, Tag::Plain],
        [Tag::Plain, Tag::Plain],
        [Tag::Plain, Tag::Notched],
        [Tag::Plain, Tag::Notched],
    ];
    TaggedTriangulation::new(names, tris, verts, 4, ends, tags)
        .expect("stock three-self-folded is valid")
}

/// The quiver of the second maximal triangulation in the proof's figure,
/// related to the first by exchanging the labels 2 and 4.
pub fn stock_maximal_swapped_seed() -> Seed {
    let arrows: [(usize, usize); 12] = [
        (4, 3),
        (6, 4),
        (3, 6),
        (4, 5),
        (2, 3),
        (5, 6),
        (6, 2),
        (2, 5),
        (5, 1),
        (1, 2),
        (3, 1),
        (1, 4),
    ];
    let mut b = vec![vec![0i64; 6]; 6];
    for (u, v) in arrows {
        b[u - 1][v - 1] += 1;
        b[v - 1][u - 1] -= 1;
    }
    Seed::new(
        (1..=6).map(|i| format!("b{i}")).collect(),
        ExchangeMatrix::new(b).expect("skew"),
    )
    .expect("rank 6")
}

/// True iff the seed has rank 6, exactly 12 arrows, and is isomorphic to
/// the maximal stock quiver. Note that the three-self-folded triangulation
/// has an isomorphic quiver (the doubled-triangle pattern), so this cannot
/// separate the two stock triangulations; only the triangulation-level test
/// below can.
pub fn is_maximal_quiver(seed: &Seed) -> Result<bool> {
    if seed.rank() != 6 {
        return Err(Error::DegreeMismatch(format!("rank {} instead of 6", seed.rank())));
    }
    Ok(seed.matrix.arrow_count() == 12
        && seed_isomorphic(seed, &stock_maximal().to_seed()).is_some())
}

/// The genuine dichotomy for 12-arrow triangulations of the 4-punctured
/// sphere: maximal means no self-folded triangle.
pub fn is_maximal_triangulation(t: &TaggedTriangulation) -> Result<bool> {
    Ok(is_maximal_quiver(&t.to_seed())? && t.to_file().selffolded.is_empty())
}

/// Report of the mutation-path facts: (6,5,2,6) carries the
/// three-self-folded seed to a maximal one, the reverse path (6,2,5,6)
/// returns, and the same flips move the maximal triangulation to a
/// three-self-folded one (so the path genuinely exchanges the two stock
/// classes rather than fixing either).
pub struct Mu6526Report {
    pub forward_iso: Perm,
    pub roundtrip_is_identity: bool,
    pub maximal_sent_to_self_folded: bool,
}

pub fn verify_mu6526() -> Result<Mu6526Report> {
    let tsf = stock_three_self_folded().to_seed();
    let max = stock_maximal().to_seed();
    let forward = mutation_path(&tsf, &[5, 4, 1, 5])?;
    let forward_iso = seed_isomorphic(&forward, &max)
        .ok_or_else(|| Error::BadIndex("μ(6,5,2,6) image is not maximal".into()))?;
    let roundtrip = mutation_path(&forward, &[5, 1, 4, 5])?;
    let roundtrip_is_identity = roundtrip == tsf;
    // At the seed level the two stocks are quiver-isomorphic, so the
    // distinction only exists for triangulations: flipping the maximal one
    // along the same arcs produces self-folded triangles.
    let mut wandered = stock_maximal();
    for arc in [5usize, 4, 1, 5] {
        wandered = wandered.flip(arc)?;
    }
    let maximal_sent_to_self_folded = !is_maximal_triangulation(&wandered)?
        && !wandered.to_file().selffolded.is_empty()
        && !wandered.equivalent_to(&stock_maximal());
    Ok(Mu6526Report { forward_iso, roundtrip_is_identity, maximal_sent_to_self_folded })
}

/// Report of the label-swap facts: the α ↦ β correspondence of the two
/// drawn maximal triangulations is a quiver isomorphism (in these labels,
/// the two quivers are equal matrices), exchanging arcs 2 and 4 is a quiver
/// automorphism squaring to the identity, and the automorphism
/// transpositions are exactly the three opposite-arc pairs — in particular
/// arbitrary transpositions such as 1 ↔ 3 fail.
pub struct SwapReport {
    pub beta_relabelling_matches: bool,
    pub swap_is_automorphism: bool,
    pub automorphism_transpositions: Vec<(usize, usize)>,
    pub swap_squares_to_identity: bool,
}

pub fn sigma_swap_check() -> SwapReport {
    let a = stock_maximal().to_seed();
    let b = stock_maximal_swapped_seed();
    let beta_relabelling_matches = a.matrix.rows() == b.matrix.rows();
    let is_auto = |pi: &Perm| -> bool {
        (0..6).all(|i| {
            (0..6).all(|j| a.matrix.entry(pi.apply(i), pi.apply(j)) == a.matrix.entry(i, j))
        })
    };
    let swap = Perm::from_images(vec![0, 3, 2, 1, 4, 5]).expect("transposition 2↔4");
    let mut automorphism_transpositions = Vec::new();
    for i in 0..6 {
        for j in (i + 1)..6 {
            let mut img: Vec<usize> = (0..6).collect();
            img.swap(i, j);
            if is_auto(&Perm::from_images(img).expect("transposition")) {
                automorphism_transpositions.push((i + 1, j + 1));
            }
        }
    }
    SwapReport {
        beta_relabelling_matches,
        swap_is_automorphism: is_auto(&swap),
        automorphism_transpositions,
        swap_squares_to_identity: swap.compose(&swap).is_identity(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn maximal_stock_has_twelve_arrows() {
        let seed = stock_maximal().to_seed();
        assert_eq!(seed.matrix.arrow_count(), 12);
        assert!(is_maximal_quiver(&seed).unwrap());
        // Figure arrows, spot-checked: a2 → a3 and a1 → a2.
        assert_eq!(seed.matrix.entry(1, 2), 1);
        assert_eq!(seed.matrix.entry(0, 1), 1);
    }

    #[test]
    fn three_self_folded_has_twelve_arrows_and_an_isomorphic_quiver() {
        // The two stock quivers are isomorphic (both are the doubled
        // triangle), so the seed-level test cannot separate them; the
        // triangulation-level one can.
        let seed = stock_three_self_folded().to_seed();
        assert_eq!(seed.matrix.arrow_count(), 12);
        assert!(is_maximal_quiver(&seed).unwrap());
        assert!(!is_maximal_triangulation(&stock_three_self_folded()).unwrap());
        assert!(is_maximal_triangulation(&stock_maximal()).unwrap());
    }

    #[test]
    fn mu_6526_report() {
        let report = verify_mu6526().unwrap();
        assert!(report.roundtrip_is_identity);
        assert!(report.maximal_sent_to_self_folded);
    }

    #[test]
    fn mu_6526_as_flip_path() {
        // The same fact at the triangulation level, through tagged flips.
        let tsf = stock_three_self_folded();
        let mut t = tsf.clone();
        for arc in [5usize, 4, 1, 5] {
            t = t.flip(arc).unwrap();
        }
        let max = stock_maximal().to_seed();
        assert!(seed_isomorphic(&t.to_seed(), &max).is_some());
        // And the reverse flips return to the stock.
        for arc in [5usize, 1, 4, 5] {
            t = t.flip(arc).unwrap();
        }
        assert_eq!(t, tsf);
    }

    #[test]
    fn swap_report() {
        let report = sigma_swap_check();
        assert!(report.beta_relabelling_matches);
        assert!(report.swap_is_automorphism);
        assert!(report.swap_squares_to_identity);
        // Exactly the three opposite-arc transpositions, including 2 ↔ 4;
        // mismatched ones like 1 ↔ 3 are not automorphisms.
        assert_eq!(report.automorphism_transpositions, vec![(1, 6), (2, 4), (3, 5)]);
    }

    #[test]
    fn twelve_arrow_dichotomy_to_depth_four() {
        // Within mutation depth 4 of the maximal seed, every 12-arrow seed
        // is isomorphic to one of the two stocks.
        let max = stock_maximal().to_seed();
        let tsf = stock_three_self_folded().to_seed();
        let mut seen: BTreeSet<Vec<Vec<i64>>> = BTreeSet::new();
        let mut frontier = vec![max.clone()];
        seen.insert(max.matrix.rows().to_vec());
        for _ in 0..4 {
            let mut next = Vec::new();
            for s in &frontier {
                for k in 0..6 {
                    let m = s.mutate(k).unwrap();
                    if seen.insert(m.matrix.rows().to_vec()) {
                        next.push(m);
                    }
                }
            }
            frontier = next;
        }
        let mut twelve = 0;
        for rows in &seen {
            let seed = Seed::new(
                max.labels.clone(),
                ExchangeMatrix::new(rows.clone()).unwrap(),
            )
            .unwrap();
            if seed.matrix.arrow_count() == 12 {
                twelve += 1;
                assert!(
                    seed_isomorphic(&seed, &max).is_some()
                        || seed_isomorphic(&seed, &tsf).is_some(),
                    "12-arrow seed outside the two stock classes: {rows:?}"
                );
            }
        }
        assert!(twelve > 1);
    }
}
