//! Freely reduced words over an indexed generator alphabet.

use serde::{Deserialize, Serialize};
use std::fmt;

/// One letter: a generator index together with an inversion flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub gen: usize,
    pub inv: bool,
}

impl Letter {
    pub fn new(gen: usize, inv: bool) -> Self {
        Letter { gen, inv }
    }

    pub fn inverse(self) -> Self {
        Letter { gen: self.gen, inv: !self.inv }
    }

    fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.inv != other.inv
    }
}

/// A word in a free group, stored freely reduced: no adjacent `g·g⁻¹`.
/// The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Word(Vec<Letter>);

/// Freely reduces a letter sequence; the result has no adjacent cancelling
/// pair. Idempotent and length-nonincreasing.
pub fn free_reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
    let mut stack: Vec<Letter> = Vec::new();
    for l in letters {
        match stack.last() {
            Some(&top) if top.cancels(l) => {
                stack.pop();
            }
            _ => stack.push(l),
        }
    }
    Word(stack)
}

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// The one-letter word `g`.
    pub fn gen(gen: usize) -> Self {
        Word(vec![Letter::new(gen, false)])
    }

    pub fn letter(gen: usize, inv: bool) -> Self {
        Word(vec![Letter::new(gen, inv)])
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        free_reduce(letters)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        free_reduce(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// `self^k` for any integer exponent.
    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..k.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// `w · other · w⁻¹`.
    pub fn conjugate(&self, other: &Word) -> Word {
        self.concat(other).concat(&self.inverse())
    }

    /// `[self, other] = self · other · self⁻¹ · other⁻¹`.
    pub fn commutator(&self, other: &Word) -> Word {
        self.concat(other).concat(&self.inverse()).concat(&other.inverse())
    }

    /// Inverts every letter in place, keeping the order. This is the
    /// automorphism induced by an orientation-reversing involution sending
    /// each twist generator to its inverse, not the group inverse.
    pub fn letterwise_inverse(&self) -> Word {
        // No free reduction can be triggered: flipping all signs preserves
        // reducedness.
        Word(self.0.iter().map(|l| l.inverse()).collect())
    }

    /// Largest generator index used, if any.
    pub fn max_gen(&self) -> Option<usize> {
        self.0.iter().map(|l| l.gen).max()
    }

    /// Concatenates words without constructing intermediates one by one.
    pub fn product<'a, I: IntoIterator<Item = &'a Word>>(parts: I) -> Word {
        free_reduce(parts.into_iter().flat_map(|w| w.0.iter().copied()))
    }

    /// Exponent sum of each generator, for an alphabet of `n_gens` symbols.
    pub fn exponent_sums(&self, n_gens: usize) -> Vec<i64> {
        let mut v = vec![0i64; n_gens];
        for l in &self.0 {
            v[l.gen] += if l.inv { -1 } else { 1 };
        }
        v
    }

    /// Renders the word over the given generator names, `'` marking inverses.
    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        WordDisplay { word: self, names }
    }
}

struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.word.letters().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}{}", self.names[l.gen], if l.inv { "'" } else { "" })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(spec: &[(usize, bool)]) -> Word {
        Word::from_letters(spec.iter().map(|&(g, i)| Letter::new(g, i)).collect())
    }

    #[test]
    fn reduce_cancels_inverse_pair() {
        // x·x⁻¹·y → y
        let r = w(&[(0, false), (0, true), (1, false)]);
        assert_eq!(r, Word::gen(1));
    }

    #[test]
    fn reduce_empty_is_identity() {
        assert_eq!(free_reduce([]), Word::empty());
    }

    #[test]
    fn reduce_nested() {
        // x·y·y⁻¹·x⁻¹ → empty
        let r = w(&[(0, false), (1, false), (1, true), (0, true)]);
        assert!(r.is_empty());
    }

    #[test]
    fn reduce_idempotent_and_nonincreasing() {
        let r = w(&[(0, false), (1, false), (1, true), (2, false), (2, true), (0, true)]);
        let again = free_reduce(r.letters().iter().copied());
        assert_eq!(r, again);
        assert!(r.len() <= 6);
    }

    #[test]
    fn inverse_and_pow() {
        let x = Word::gen(0).concat(&Word::gen(1));
        assert!(x.concat(&x.inverse()).is_empty());
        assert_eq!(x.pow(3).len(), 6);
        assert_eq!(x.pow(-2), x.inverse().pow(2));
        assert!(x.pow(0).is_empty());
    }

    #[test]
    fn letterwise_inverse_is_involution() {
        let x = w(&[(0, false), (1, true), (0, false)]);
        assert_eq!(x.letterwise_inverse().letterwise_inverse(), x);
        assert_eq!(x.letterwise_inverse().len(), x.len());
    }
}
