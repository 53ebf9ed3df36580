//! Finite presentations with role-tagged generators.

use crate::words::Word;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// What a generator stands for on the surface. Half twists permute the
/// punctures/degenerated boundary positions; all kinds of Dehn twist act
/// trivially on them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GeneratorRole {
    /// Half twist exchanging strand positions `strand` and `strand + 1`
    /// (1-based, in the quotient-surface puncture order).
    HalfTwist { strand: usize },
    /// Dehn twist about a loop.
    DehnTwist,
    /// 1/m twist about a boundary component.
    BoundaryTwist,
    /// Artin generator of a Coxeter-graph presentation.
    Artin,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub role: GeneratorRole,
}

impl Generator {
    pub fn new(name: impl Into<String>, role: GeneratorRole) -> Self {
        Generator { name: name.into(), role }
    }
}

/// A finite presentation `⟨ generators | relators ⟩`. Every letter of every
/// relator references a declared generator; relators are stored freely
/// reduced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    generators: Vec<Generator>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: Vec<Generator>) -> Self {
        Presentation { generators, relators: Vec::new() }
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn n_gens(&self) -> usize {
        self.generators.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn names(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.name.clone()).collect()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    /// Adds a relator, rejecting letters outside the declared alphabet.
    /// Relators that reduce to the empty word are kept out.
    pub fn add_relator(&mut self, w: Word) -> Result<()> {
        if let Some(m) = w.max_gen() {
            if m >= self.generators.len() {
                return Err(Error::UnknownGenerator { id: m, n_gens: self.generators.len() });
            }
        }
        if !w.is_empty() {
            self.relators.push(w);
        }
        Ok(())
    }

    /// Adds the relator `lhs · rhs⁻¹`, i.e. the relation `lhs = rhs`.
    pub fn add_relation(&mut self, lhs: &Word, rhs: &Word) -> Result<()> {
        self.add_relator(lhs.concat(&rhs.inverse()))
    }

    /// Exponent-sum matrix: one row per relator, one column per generator.
    pub fn exponent_matrix(&self) -> Vec<Vec<i64>> {
        self.relators.iter().map(|r| r.exponent_sums(self.n_gens())).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Letter;

    #[test]
    fn rejects_undeclared_generator() {
        let mut p = Presentation::new(vec![Generator::new("x", GeneratorRole::Artin)]);
        let bad = Word::from_letters(vec![Letter::new(1, false)]);
        assert!(p.add_relator(bad).is_err());
    }

    #[test]
    fn drops_trivial_relators() {
        let mut p = Presentation::new(vec![Generator::new("x", GeneratorRole::Artin)]);
        let w = Word::gen(0).concat(&Word::gen(0).inverse());
        p.add_relator(w).unwrap();
        assert!(p.relators().is_empty());
    }
}
