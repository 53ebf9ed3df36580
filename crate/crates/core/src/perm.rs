//! Permutations of `{0, …, d-1}` in one-line notation.

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree).collect())
    }

    /// Builds a permutation from its image vector, rejecting non-bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &i in &images {
            if i >= d || seen[i] {
                return Err(Error::NotAPermutation(images));
            }
            seen[i] = true;
        }
        Ok(Perm(images))
    }

    /// The transposition `(i j)` on `{0, …, d-1}`.
    pub fn transposition(degree: usize, i: usize, j: usize) -> Result<Self> {
        if i >= degree || j >= degree || i == j {
            return Err(Error::BadIndex(format!(
                "transposition ({i} {j}) on degree {degree}"
            )));
        }
        let mut v: Vec<usize> = (0..degree).collect();
        v.swap(i, j);
        Ok(Perm(v))
    }

    /// A single k-cycle `(0 1 … k-1)` on `{0, …, d-1}` fixing the rest.
    pub fn cycle(degree: usize, k: usize) -> Self {
        let mut v: Vec<usize> = (0..degree).collect();
        for i in 0..k {
            v[i] = (i + 1) % k;
        }
        Perm(v)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// Composition `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            v[j] = i;
        }
        Perm(v)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Enumerates all permutations of the given degree (degree ≤ 8).
    pub fn all(degree: usize) -> Vec<Perm> {
        assert!(degree <= 8, "full enumeration is only for small degrees");
        let mut out = Vec::new();
        let mut v: Vec<usize> = (0..degree).collect();
        permute(&mut v, 0, &mut out);
        out
    }
}

fn permute(v: &mut Vec<usize>, k: usize, out: &mut Vec<Perm>) {
    if k == v.len() {
        out.push(Perm(v.clone()));
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, out);
        v.swap(k, i);
    }
}
