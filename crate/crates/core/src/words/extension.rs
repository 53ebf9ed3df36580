//! Presentation of a group extension `1 → K → G → H → 1` from presentations
//! of the kernel and the quotient plus lifting data.

use crate::words::{Generator, Presentation, Word};
use crate::{Error, Result};

/// Lifting data for an extension. Words are over the kernel generators,
/// indexed as in `kernel`.
pub struct ExtensionData {
    /// Names for the lifted quotient generators, aligned with
    /// `quotient.generators()`.
    pub lift_names: Vec<String>,
    /// For each quotient relator `r`, the kernel word its lift `r̃` equals.
    pub relator_tails: Vec<Word>,
    /// `conjugations[x][y]` is the kernel word equal to `x̃ · y · x̃⁻¹` for
    /// quotient generator `x` and kernel generator `y`.
    pub conjugations: Vec<Vec<Word>>,
}

/// Assembles the presentation of the extension: generators are the lifted
/// quotient generators followed by the kernel generators; relators are the
/// lifted quotient relators corrected by their tails, the conjugation
/// relations, and the kernel relators.
pub fn assemble_extension(
    kernel: &Presentation,
    quotient: &Presentation,
    data: &ExtensionData,
) -> Result<Presentation> {
    let nh = quotient.n_gens();
    let nk = kernel.n_gens();
    if data.lift_names.len() != nh {
        return Err(Error::DegreeMismatch(format!(
            "{} lift names for {} quotient generators",
            data.lift_names.len(),
            nh
        )));
    }
    if data.relator_tails.len() != quotient.relators().len() {
        return Err(Error::DegreeMismatch(format!(
            "{} relator tails for {} quotient relators",
            data.relator_tails.len(),
            quotient.relators().len()
        )));
    }
    if data.conjugations.len() != nh || data.conjugations.iter().any(|row| row.len() != nk) {
        return Err(Error::DegreeMismatch("conjugation table shape".into()));
    }

    let mut gens: Vec<Generator> = Vec::with_capacity(nh + nk);
    for (g, name) in quotient.generators().iter().zip(&data.lift_names) {
        gens.push(Generator::new(name.clone(), g.role));
    }
    gens.extend(kernel.generators().iter().cloned());
    let mut out = Presentation::new(gens);

    // Kernel words keep their letters shifted past the lifted block.
    let shift = |w: &Word| -> Result<Word> {
        if let Some(m) = w.max_gen() {
            if m >= nk {
                return Err(Error::UnknownGenerator { id: m, n_gens: nk });
            }
        }
        Ok(Word::from_letters(
            w.letters().iter().map(|l| crate::words::Letter::new(l.gen + nh, l.inv)).collect(),
        ))
    };

    // R1: lifted quotient relators r̃ · w_r⁻¹.
    for (r, tail) in quotient.relators().iter().zip(&data.relator_tails) {
        let lifted = r.clone(); // same indices: lifted block comes first
        out.add_relator(lifted.concat(&shift(tail)?.inverse()))?;
    }
    // R2: x̃ y x̃⁻¹ v(x, y)⁻¹ for every pair.
    for x in 0..nh {
        for y in 0..nk {
            let xw = Word::gen(x);
            let yw = Word::gen(y + nh);
            let v = shift(&data.conjugations[x][y])?;
            out.add_relator(xw.conjugate(&yw).concat(&v.inverse()))?;
        }
    }
    // R_K.
    for r in kernel.relators() {
        out.add_relator(shift(r)?)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{abelianization, todd_coxeter, CosetOutcome, GeneratorRole};

    fn z2(name: &str) -> Presentation {
        let mut p = Presentation::new(vec![Generator::new(name, GeneratorRole::Artin)]);
        p.add_relator(Word::gen(0).pow(2)).unwrap();
        p
    }

    #[test]
    fn trivial_kernel_returns_lifted_quotient() {
        let k = Presentation::new(vec![]);
        let h = z2("b");
        let data = ExtensionData {
            lift_names: vec!["bt".into()],
            relator_tails: vec![Word::empty()],
            conjugations: vec![vec![]],
        };
        let g = assemble_extension(&k, &h, &data).unwrap();
        assert_eq!(g.n_gens(), 1);
        assert_eq!(g.generators()[0].name, "bt");
        assert_eq!(g.relators(), h.relators());
    }

    #[test]
    fn z2_by_z2_with_nontrivial_tail_is_z4() {
        let k = z2("a");
        let h = z2("b");
        let data = ExtensionData {
            lift_names: vec!["bt".into()],
            relator_tails: vec![Word::gen(0)],      // b̃² = a
            conjugations: vec![vec![Word::gen(0)]], // b̃ a b̃⁻¹ = a
        };
        let g = assemble_extension(&k, &h, &data).unwrap();
        assert_eq!(g.relators().len(), 1 + 1 + 1);
        assert_eq!(todd_coxeter(&g, &[], 100), CosetOutcome::Complete(4));
        assert_eq!(abelianization(&g), vec![4]);
    }

    #[test]
    fn z2_by_z2_with_trivial_tail_is_klein_four() {
        let k = z2("a");
        let h = z2("b");
        let data = ExtensionData {
            lift_names: vec!["bt".into()],
            relator_tails: vec![Word::empty()],
            conjugations: vec![vec![Word::gen(0)]],
        };
        let g = assemble_extension(&k, &h, &data).unwrap();
        assert_eq!(todd_coxeter(&g, &[], 100), CosetOutcome::Complete(4));
        assert_eq!(abelianization(&g), vec![2, 2]);
    }

    #[test]
    fn relator_count_formula() {
        // |relators| = |R_H| + |S_H|·|S_K| + |R_K| (nontrivial words only).
        let mut k = Presentation::new(vec![
            Generator::new("a", GeneratorRole::Artin),
            Generator::new("c", GeneratorRole::Artin),
        ]);
        k.add_relator(Word::gen(0).pow(3)).unwrap();
        k.add_relator(Word::gen(1).pow(3)).unwrap();
        let h = z2("b");
        let data = ExtensionData {
            lift_names: vec!["bt".into()],
            relator_tails: vec![Word::gen(0)],
            conjugations: vec![vec![Word::gen(1), Word::gen(0)]],
        };
        let g = assemble_extension(&k, &h, &data).unwrap();
        assert_eq!(g.relators().len(), 1 + 1 * 2 + 2);
    }
}
