//! Interchange formats for presentations.
//!
//! Text grammar (bit-exact, UTF-8):
//! ```text
//! gens: g1 g2 ... gk
//! rel: w
//! ```
//! where `w` is a whitespace-separated letter list and a trailing `'` marks
//! an inverse letter. Structured form:
//! `{"generators": [names], "relators": [[[index, sign], …], …]}` with
//! 0-based indices and sign ±1.

use crate::words::{Generator, GeneratorRole, Letter, Presentation, Word};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Emits the text grammar form. Generators' role tags are not part of the
/// interchange format.
pub fn presentation_to_text(p: &Presentation) -> String {
    let mut out = String::from("gens:");
    for g in p.generators() {
        out.push(' ');
        out.push_str(&g.name);
    }
    out.push('\n');
    for r in p.relators() {
        out.push_str("rel:");
        for l in r.letters() {
            out.push(' ');
            out.push_str(&p.generators()[l.gen].name);
            if l.inv {
                out.push('\'');
            }
        }
        out.push('\n');
    }
    out
}

/// Parses the text grammar form. All generators get the `Artin` role tag.
pub fn presentation_from_text(text: &str) -> Result<Presentation> {
    let mut lines = text.lines();
    let first = lines.next().ok_or_else(|| Error::Parse("empty presentation file".into()))?;
    let rest = first
        .strip_prefix("gens:")
        .ok_or_else(|| Error::Parse("first line must start with 'gens:'".into()))?;
    let names: Vec<String> = rest.split_whitespace().map(|s| s.to_string()).collect();
    for n in &names {
        if n.ends_with('\'') {
            return Err(Error::Parse(format!("generator name {n:?} may not end with '")));
        }
    }
    let mut p = Presentation::new(
        names.iter().map(|n| Generator::new(n.clone(), GeneratorRole::Artin)).collect(),
    );
    for (lineno, line) in lines.enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let body = line
            .strip_prefix("rel:")
            .ok_or_else(|| Error::Parse(format!("line {}: expected 'rel:'", lineno + 2)))?;
        let mut letters = Vec::new();
        for tok in body.split_whitespace() {
            let (name, inv) = match tok.strip_suffix('\'') {
                Some(base) => (base, true),
                None => (tok, false),
            };
            let gen = names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| Error::Parse(format!("unknown generator {name:?}")))?;
            letters.push(Letter::new(gen, inv));
        }
        p.add_relator(Word::from_letters(letters))?;
    }
    Ok(p)
}

#[derive(Serialize, Deserialize)]
struct StructuredPresentation {
    generators: Vec<String>,
    relators: Vec<Vec<(usize, i8)>>,
}

/// Emits the structured JSON form.
pub fn presentation_to_json(p: &Presentation) -> String {
    let s = StructuredPresentation {
        generators: p.names(),
        relators: p
            .relators()
            .iter()
            .map(|r| r.letters().iter().map(|l| (l.gen, if l.inv { -1 } else { 1 })).collect())
            .collect(),
    };
    serde_json::to_string(&s).expect("serializable")
}

/// Parses the structured JSON form.
pub fn presentation_from_json(text: &str) -> Result<Presentation> {
    let s: StructuredPresentation = serde_json::from_str(text)?;
    let mut p = Presentation::new(
        s.generators.iter().map(|n| Generator::new(n.clone(), GeneratorRole::Artin)).collect(),
    );
    for r in s.relators {
        let mut letters = Vec::with_capacity(r.len());
        for (gen, sign) in r {
            if sign != 1 && sign != -1 {
                return Err(Error::Parse(format!("letter sign must be ±1, got {sign}")));
            }
            letters.push(Letter::new(gen, sign == -1));
        }
        p.add_relator(Word::from_letters(letters))?;
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Presentation {
        let mut p = Presentation::new(vec![
            Generator::new("s1", GeneratorRole::HalfTwist { strand: 1 }),
            Generator::new("s2", GeneratorRole::HalfTwist { strand: 2 }),
        ]);
        let s1 = Word::gen(0);
        let s2 = Word::gen(1);
        let braid = s1.concat(&s2).concat(&s1);
        p.add_relation(&braid, &s2.concat(&s1).concat(&s2)).unwrap();
        p
    }

    #[test]
    fn text_form_is_exact() {
        let p = sample();
        assert_eq!(presentation_to_text(&p), "gens: s1 s2\nrel: s1 s2 s1 s2' s1' s2'\n");
    }

    #[test]
    fn text_roundtrip() {
        let p = sample();
        let q = presentation_from_text(&presentation_to_text(&p)).unwrap();
        assert_eq!(q.names(), p.names());
        assert_eq!(q.relators(), p.relators());
    }

    #[test]
    fn json_roundtrip() {
        let p = sample();
        let q = presentation_from_json(&presentation_to_json(&p)).unwrap();
        assert_eq!(q.names(), p.names());
        assert_eq!(q.relators(), p.relators());
    }

    #[test]
    fn empty_generator_list_renders_bare() {
        let p = Presentation::new(vec![]);
        assert_eq!(presentation_to_text(&p), "gens:\n");
        let q = presentation_from_text("gens:\n").unwrap();
        assert_eq!(q.n_gens(), 0);
    }
}
