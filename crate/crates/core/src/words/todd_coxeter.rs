//! Bounded Todd-Coxeter coset enumeration, HLT strategy.
//!
//! Deterministic for a fixed presentation, subgroup and cap: cosets are
//! processed in definition order and relators in presentation order, so a
//! completed enumeration always reports the same index.

use crate::words::{Presentation, Word};

/// Result of a bounded enumeration: either the exact index of the subgroup,
/// or `Inconclusive` when the coset cap was hit first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CosetOutcome {
    Complete(usize),
    Inconclusive,
}

struct Table {
    /// `tab[c][col]`: action of column `col` on coset `c`; columns come in
    /// pairs `2g` (generator `g`) and `2g + 1` (its inverse).
    tab: Vec<Vec<Option<usize>>>,
    rep: Vec<usize>,
    n_cols: usize,
    cap: usize,
    queue: Vec<(usize, usize)>,
}

impl Table {
    fn new(n_gens: usize, cap: usize) -> Self {
        Table {
            tab: vec![vec![None; 2 * n_gens]],
            rep: vec![0],
            n_cols: 2 * n_gens,
            cap,
            queue: Vec::new(),
        }
    }

    fn find(&mut self, mut c: usize) -> usize {
        while self.rep[c] != c {
            self.rep[c] = self.rep[self.rep[c]];
            c = self.rep[c];
        }
        c
    }

    fn define(&mut self, c: usize, col: usize) -> Option<usize> {
        if self.tab.len() >= self.cap {
            return None;
        }
        let new = self.tab.len();
        self.tab.push(vec![None; self.n_cols]);
        self.rep.push(new);
        self.tab[c][col] = Some(new);
        self.tab[new][col ^ 1] = Some(c);
        Some(new)
    }

    /// Records `c · col = d`, queueing a coincidence on clash.
    fn set(&mut self, c: usize, col: usize, d: usize) {
        match self.tab[c][col] {
            None => {
                self.tab[c][col] = Some(d);
                match self.tab[d][col ^ 1] {
                    None => self.tab[d][col ^ 1] = Some(c),
                    Some(e) if e != c => self.queue.push((e, c)),
                    _ => {}
                }
            }
            Some(e) if e != d => self.queue.push((e, d)),
            _ => {}
        }
    }

    fn process_coincidences(&mut self) {
        while let Some((a, b)) = self.queue.pop() {
            let a = self.find(a);
            let b = self.find(b);
            if a == b {
                continue;
            }
            let (keep, drop) = if a < b { (a, b) } else { (b, a) };
            self.rep[drop] = keep;
            for col in 0..self.n_cols {
                if let Some(t) = self.tab[drop][col].take() {
                    // Re-attach the edge drop --col--> t as keep --col--> t.
                    // Stale reverse pointers at t resolve through find().
                    let t = self.find(t);
                    match self.tab[keep][col] {
                        None => {
                            self.tab[keep][col] = Some(t);
                            match self.tab[t][col ^ 1] {
                                None => self.tab[t][col ^ 1] = Some(keep),
                                Some(u) => {
                                    let u = self.find(u);
                                    if u != keep {
                                        self.queue.push((u, keep));
                                    }
                                }
                            }
                        }
                        Some(u) => {
                            let u = self.find(u);
                            if u != t {
                                self.queue.push((u, t));
                            }
                        }
                    }
                }
            }
        }
    }

    /// Scans `word` at coset `start`, filling gaps and defining new cosets.
    /// Returns `false` when the cap prevents a definition.
    fn scan_and_fill(&mut self, start: usize, cols: &[usize]) -> bool {
        if cols.is_empty() {
            return true;
        }
        loop {
            let start = self.find(start);
            // Forward.
            let mut f = start;
            let mut i = 0;
            while i < cols.len() {
                match self.tab[f][cols[i]] {
                    Some(next) => {
                        f = self.find(next);
                        i += 1;
                    }
                    None => break,
                }
            }
            if i == cols.len() {
                if f != start {
                    self.queue.push((f, start));
                    self.process_coincidences();
                }
                return true;
            }
            // Backward.
            let mut b = start;
            let mut j = cols.len();
            while j > i {
                match self.tab[b][cols[j - 1] ^ 1] {
                    Some(prev) => {
                        b = self.find(prev);
                        j -= 1;
                    }
                    None => break,
                }
            }
            if j == i {
                // Word closes up; forward and backward met at the same slot.
                self.queue.push((f, b));
                self.process_coincidences();
                return true;
            }
            if j == i + 1 {
                // Deduction: f · cols[i] = b.
                self.set(f, cols[i], b);
                self.process_coincidences();
                return true;
            }
            // Define one new coset and rescan.
            if self.define(f, cols[i]).is_none() {
                return false;
            }
        }
    }

    fn live_count(&mut self) -> usize {
        (0..self.rep.len()).filter(|&c| self.rep[c] == c).count()
    }

    fn is_live(&mut self, c: usize) -> bool {
        self.find(c) == c
    }

    fn is_complete(&mut self) -> bool {
        for c in 0..self.tab.len() {
            if self.rep[c] != c {
                continue;
            }
            if self.tab[c].iter().any(|e| e.is_none()) {
                return false;
            }
        }
        true
    }
}

fn word_cols(w: &Word) -> Vec<usize> {
    w.letters().iter().map(|l| 2 * l.gen + usize::from(l.inv)).collect()
}

/// Enumerates cosets of the subgroup generated by `subgroup` in the group
/// presented by `p`, defining at most `limit` cosets in total.
pub fn todd_coxeter(p: &Presentation, subgroup: &[Word], limit: usize) -> CosetOutcome {
    if p.n_gens() == 0 {
        return CosetOutcome::Complete(1);
    }
    let mut t = Table::new(p.n_gens(), limit.max(1));
    let rel_cols: Vec<Vec<usize>> = p.relators().iter().map(word_cols).collect();
    let sub_cols: Vec<Vec<usize>> = subgroup.iter().map(word_cols).collect();

    for cols in &sub_cols {
        if !t.scan_and_fill(0, cols) {
            return CosetOutcome::Inconclusive;
        }
    }
    let mut c = 0;
    while c < t.tab.len() {
        if !t.is_live(c) {
            c += 1;
            continue;
        }
        for cols in &rel_cols {
            if !t.scan_and_fill(c, cols) {
                return CosetOutcome::Inconclusive;
            }
            if !t.is_live(c) {
                break;
            }
        }
        if t.is_live(c) {
            // Close the row so the table converges even with few relators.
            for col in 0..t.n_cols {
                if t.tab[c][col].is_none() && t.define(c, col).is_none() {
                    return CosetOutcome::Inconclusive;
                }
            }
        }
        c += 1;
    }
    debug_assert!(t.is_complete());
    CosetOutcome::Complete(t.live_count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{Generator, GeneratorRole, Presentation, Word};

    fn gens(names: &[&str]) -> Vec<Generator> {
        names.iter().map(|n| Generator::new(*n, GeneratorRole::Artin)).collect()
    }

    #[test]
    fn cyclic_five() {
        let mut p = Presentation::new(gens(&["x"]));
        p.add_relator(Word::gen(0).pow(5)).unwrap();
        assert_eq!(todd_coxeter(&p, &[], 100), CosetOutcome::Complete(5));
    }

    #[test]
    fn symmetric_three() {
        // ⟨a, b | a², b², (ab)³⟩ = Σ₃.
        let mut p = Presentation::new(gens(&["a", "b"]));
        p.add_relator(Word::gen(0).pow(2)).unwrap();
        p.add_relator(Word::gen(1).pow(2)).unwrap();
        p.add_relator(Word::gen(0).concat(&Word::gen(1)).pow(3)).unwrap();
        assert_eq!(todd_coxeter(&p, &[], 1000), CosetOutcome::Complete(6));
    }

    #[test]
    fn subgroup_index() {
        // Index of ⟨a⟩ in Σ₃ above is 3.
        let mut p = Presentation::new(gens(&["a", "b"]));
        p.add_relator(Word::gen(0).pow(2)).unwrap();
        p.add_relator(Word::gen(1).pow(2)).unwrap();
        p.add_relator(Word::gen(0).concat(&Word::gen(1)).pow(3)).unwrap();
        assert_eq!(todd_coxeter(&p, &[Word::gen(0)], 1000), CosetOutcome::Complete(3));
    }

    #[test]
    fn free_group_is_inconclusive() {
        let p = Presentation::new(gens(&["a", "b"]));
        assert_eq!(todd_coxeter(&p, &[], 500), CosetOutcome::Inconclusive);
    }

    #[test]
    fn quaternion_group() {
        // ⟨i, j | i⁴, i²j⁻², ijij⁻¹... ⟩ use ⟨a,b | a⁴, a²b⁻², b⁻¹aba⟩ = Q₈.
        let mut p = Presentation::new(gens(&["a", "b"]));
        p.add_relator(Word::gen(0).pow(4)).unwrap();
        p.add_relation(&Word::gen(0).pow(2), &Word::gen(1).pow(2)).unwrap();
        p.add_relator(
            Word::gen(1).inverse().concat(&Word::gen(0)).concat(&Word::gen(1)).concat(&Word::gen(0)),
        )
        .unwrap();
        assert_eq!(todd_coxeter(&p, &[], 2000), CosetOutcome::Complete(8));
    }

    #[test]
    fn trivial_presentation() {
        let p = Presentation::new(vec![]);
        assert_eq!(todd_coxeter(&p, &[], 10), CosetOutcome::Complete(1));
    }
}
