//! Piecewise-linear braid action on integer coordinates of curve systems on
//! the n-punctured disk (length 2n−4). The zero vector is the standard base
//! curve system; every integer vector is a valid state and each generator
//! acts bijectively.

use crate::words::Word;
use crate::{Error, Result};
use rand::Rng;

/// Integer coordinates of a curve system on the n-punctured disk: pairs
/// `(a_i, b_i)` for the n−2 interior punctures.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiskCoordinates {
    n: usize,
    coords: Vec<i128>,
}

impl DiskCoordinates {
    /// The standard base curve system on the n-punctured disk (n ≥ 3).
    pub fn zero(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::BadIndex(format!("disk coordinates need n >= 3, got {n}")));
        }
        Ok(DiskCoordinates { n, coords: vec![0; 2 * n - 4] })
    }

    pub fn from_vec(n: usize, coords: Vec<i128>) -> Result<Self> {
        if n < 3 || coords.len() != 2 * n - 4 {
            return Err(Error::DegreeMismatch(format!(
                "got {} coordinates for n = {n} (want {})",
                coords.len(),
                2 * n - 4
            )));
        }
        Ok(DiskCoordinates { n, coords })
    }

    pub fn punctures(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &[i128] {
        &self.coords
    }

    fn a(&self, i: usize) -> i128 {
        self.coords[2 * (i - 1)]
    }

    fn b(&self, i: usize) -> i128 {
        self.coords[2 * (i - 1) + 1]
    }

    fn set_a(&mut self, i: usize, v: i128) {
        self.coords[2 * (i - 1)] = v;
    }

    fn set_b(&mut self, i: usize, v: i128) {
        self.coords[2 * (i - 1) + 1] = v;
    }
}

fn pos(x: i128) -> i128 {
    x.max(0)
}

fn neg(x: i128) -> i128 {
    x.min(0)
}

/// Interior update for σ_i, 2 ≤ i ≤ n−2, on `(A, B) = (a_{i−1}, b_{i−1})`
/// and `(C, D) = (a_i, b_i)`:
/// with `t = A − C + D⁺ − B⁻`,
/// `A' = A + B⁺ + (D⁺ − t)⁺`, `B' = D − t⁺`,
/// `C' = C + D⁻ + (B⁻ + t)⁻`, `D' = B + t⁺`.
fn interior(a: i128, b: i128, c: i128, d: i128) -> (i128, i128, i128, i128) {
    let t = a - c + pos(d) - neg(b);
    (
        a + pos(b) + pos(pos(d) - t),
        d - pos(t),
        c + neg(d) + neg(neg(b) + t),
        b + pos(t),
    )
}

/// Left endpoint update for σ₁ on `(C, D) = (a₁, b₁)`: the interior rule
/// with the virtual pair eliminated through the left cap, which closes to
/// `(C, D) ↦ (C + D⁻ + (D⁺ − C)⁻, D⁺ − C)`.
fn endpoint_left(c: i128, d: i128) -> (i128, i128) {
    (c + neg(d) + neg(pos(d) - c), pos(d) - c)
}

/// Mirror of the disk across the puncture axis: negates every `a`.
fn mirror(state: &mut DiskCoordinates) {
    for i in 1..=(state.n - 2) {
        state.set_a(i, -state.a(i));
    }
}

/// End-to-end reversal of the disk: reverses the pair order and negates
/// every `b`.
fn reverse(state: &DiskCoordinates) -> DiskCoordinates {
    let m = state.n - 2;
    let mut out = state.clone();
    for i in 1..=m {
        out.set_a(i, state.a(m + 1 - i));
        out.set_b(i, -state.b(m + 1 - i));
    }
    out
}

fn apply_positive(state: &mut DiskCoordinates, i: usize) {
    let n = state.n;
    if i >= 2 && i <= n - 2 {
        let (a, b, c, d) = (state.a(i - 1), state.b(i - 1), state.a(i), state.b(i));
        let (a2, b2, c2, d2) = interior(a, b, c, d);
        state.set_a(i - 1, a2);
        state.set_b(i - 1, b2);
        state.set_a(i, c2);
        state.set_b(i, d2);
    } else if i == 1 {
        let (c2, d2) = endpoint_left(state.a(1), state.b(1));
        state.set_a(1, c2);
        state.set_b(1, d2);
    } else {
        // σ_{n−1} is the reversal conjugate of σ₁⁻¹.
        debug_assert_eq!(i, n - 1);
        let mut r = reverse(state);
        apply_letter_raw(&mut r, 1, true);
        *state = reverse(&r);
    }
}

fn apply_letter_raw(state: &mut DiskCoordinates, i: usize, inv: bool) {
    if inv {
        // σᵢ⁻¹ is the mirror conjugate of σᵢ.
        mirror(state);
        apply_positive(state, i);
        mirror(state);
    } else {
        apply_positive(state, i);
    }
}

/// Applies the braid letter σᵢ^{±1} (1 ≤ i ≤ n−1). Bijective; applying a
/// letter and its inverse returns the argument.
pub fn apply_braid_letter(state: &DiskCoordinates, i: usize, inv: bool) -> Result<DiskCoordinates> {
    if i == 0 || i > state.n - 1 {
        return Err(Error::BadIndex(format!(
            "braid letter {i} on {} strands",
            state.n
        )));
    }
    let mut out = state.clone();
    apply_letter_raw(&mut out, i, inv);
    Ok(out)
}

/// Acts by a braid word: letter `gen` g stands for σ_{g+1}. The action is a
/// homomorphism: `act_word(uv, c) = act_word(u, act_word(v, c))`.
pub fn act_word(w: &Word, state: &DiskCoordinates) -> Result<DiskCoordinates> {
    let mut out = state.clone();
    for l in w.letters().iter().rev() {
        out = apply_braid_letter(&out, l.gen + 1, l.inv)?;
    }
    Ok(out)
}

/// Deterministic pseudorandom coordinate vector with entries in
/// `[-bound, bound]`.
pub fn random_coordinates<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Result<DiskCoordinates> {
    let coords = (0..2 * n - 4).map(|_| rng.gen_range(-bound..=bound) as i128).collect();
    DiskCoordinates::from_vec(n, coords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn samples(n: usize, count: usize, seed: u64) -> Vec<DiskCoordinates> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count).map(|_| random_coordinates(&mut rng, n, 20).unwrap()).collect()
    }

    fn act(letters: &[(usize, bool)], c: &DiskCoordinates) -> DiskCoordinates {
        let mut out = c.clone();
        for &(i, inv) in letters.iter().rev() {
            out = apply_braid_letter(&out, i, inv).unwrap();
        }
        out
    }

    #[test]
    fn inverse_law() {
        for n in 3..=7 {
            for c in samples(n, 100, 1) {
                for i in 1..n {
                    assert_eq!(act(&[(i, false), (i, true)], &c), c, "σ{i} σ{i}⁻¹ on n={n}");
                    assert_eq!(act(&[(i, true), (i, false)], &c), c, "σ{i}⁻¹ σ{i} on n={n}");
                }
            }
        }
    }

    #[test]
    fn braid_relations() {
        for n in 3..=7 {
            for c in samples(n, 100, 2) {
                for i in 1..(n - 1) {
                    let lhs = act(&[(i, false), (i + 1, false), (i, false)], &c);
                    let rhs = act(&[(i + 1, false), (i, false), (i + 1, false)], &c);
                    assert_eq!(lhs, rhs, "braid relation σ{i} σ{} on n={n}", i + 1);
                }
            }
        }
    }

    #[test]
    fn far_commutation() {
        for n in 5..=7 {
            for c in samples(n, 60, 3) {
                for i in 1..(n - 1) {
                    for j in (i + 2)..n {
                        let lhs = act(&[(i, false), (j, false)], &c);
                        let rhs = act(&[(j, false), (i, false)], &c);
                        assert_eq!(lhs, rhs, "commutation σ{i} σ{j} on n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn full_twist_acts_trivially() {
        // The boundary twist fixes every curve system in the disk, so the
        // word (σ₁⋯σ_{n−1})ⁿ acts as the identity.
        for n in 3..=6 {
            let letters: Vec<(usize, bool)> = (1..n).map(|i| (i, false)).collect();
            let full: Vec<(usize, bool)> = (0..n).flat_map(|_| letters.iter().copied()).collect();
            for c in samples(n, 50, 4) {
                assert_eq!(act(&full, &c), c, "full twist on n={n}");
            }
        }
    }

    #[test]
    fn generators_have_infinite_order_on_states() {
        let c = DiskCoordinates::from_vec(3, vec![1, 2]).unwrap();
        let mut seen = std::collections::BTreeSet::new();
        let mut cur = c;
        for _ in 0..30 {
            assert!(seen.insert(cur.clone()), "σ₁ orbit closed early");
            cur = apply_braid_letter(&cur, 1, false).unwrap();
        }
        // And σ₁ ≠ σ₂ somewhere.
        let c = DiskCoordinates::from_vec(3, vec![3, -2]).unwrap();
        assert_ne!(
            apply_braid_letter(&c, 1, false).unwrap(),
            apply_braid_letter(&c, 2, false).unwrap()
        );
    }

    #[test]
    fn action_respects_free_reduction_and_concatenation() {
        use crate::words::{free_reduce, Letter};
        let raw = vec![
            Letter::new(0, false),
            Letter::new(1, false),
            Letter::new(1, true),
            Letter::new(2, false),
        ];
        let w = free_reduce(raw.clone());
        for c in samples(5, 40, 5) {
            let direct = {
                let mut out = c.clone();
                for l in raw.iter().rev() {
                    out = apply_braid_letter(&out, l.gen + 1, l.inv).unwrap();
                }
                out
            };
            assert_eq!(act_word(&w, &c).unwrap(), direct);
        }
        // Homomorphism law on random pairs of words.
        let u = Word::from_letters(vec![Letter::new(0, false), Letter::new(3, true)]);
        let v = Word::from_letters(vec![Letter::new(2, false), Letter::new(0, false)]);
        for c in samples(5, 40, 6) {
            let uv = u.concat(&v);
            assert_eq!(
                act_word(&uv, &c).unwrap(),
                act_word(&u, &act_word(&v, &c).unwrap()).unwrap()
            );
        }
    }
}
