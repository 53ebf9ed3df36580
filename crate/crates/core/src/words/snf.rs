//! Smith normal form over the integers and presentation abelianization.

use crate::words::Presentation;

/// Reduces an integer matrix to Smith normal form and returns the diagonal
/// `d_1 | d_2 | …` (nonnegative, each dividing the next), padded with zeros
/// up to `min(rows, cols)`.
pub fn smith_normal_form(mat: &[Vec<i64>]) -> Vec<u64> {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut a: Vec<Vec<i128>> =
        mat.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let n = rows.min(cols);
    let mut diag = vec![0u64; n];

    let mut t = 0;
    while t < n {
        // Find the nonzero entry of least absolute value in the block.
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j] != 0
                    && pivot.map_or(true, |(pi, pj)| a[i][j].abs() < a[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }

        // Clear row and column t; restart whenever a remainder shrinks the
        // pivot candidates.
        let mut dirty = true;
        while dirty {
            dirty = false;
            for i in (t + 1)..rows {
                if a[i][t] != 0 {
                    let q = a[i][t].div_euclid(a[t][t]);
                    for j in t..cols {
                        a[i][j] -= q * a[t][j];
                    }
                    if a[i][t] != 0 {
                        a.swap(t, i);
                        dirty = true;
                    }
                }
            }
            for j in (t + 1)..cols {
                if a[t][j] != 0 {
                    let q = a[t][j].div_euclid(a[t][t]);
                    for row in a.iter_mut().take(rows).skip(t) {
                        row[j] -= q * row[t];
                    }
                    if a[t][j] != 0 {
                        for row in a.iter_mut() {
                            row.swap(t, j);
                        }
                        dirty = true;
                    }
                }
            }
        }

        // Enforce divisibility of the remaining block by the pivot.
        let p = a[t][t].abs();
        let mut fixed = false;
        'scan: for i in (t + 1)..rows {
            for j in (t + 1)..cols {
                if a[i][j] % p != 0 {
                    for jj in t..cols {
                        let add = a[i][jj];
                        a[t][jj] += add;
                    }
                    fixed = true;
                    break 'scan;
                }
            }
        }
        if fixed {
            continue; // redo this pivot position
        }
        diag[t] = p as u64;
        t += 1;
    }
    diag
}

/// Elementary divisors of the cokernel `Z^cols / rowspace`: the nontrivial
/// finite divisors (> 1) in divisibility order followed by one `0` per free
/// factor.
pub fn elementary_divisors(mat: &[Vec<i64>], cols: usize) -> Vec<u64> {
    let diag = smith_normal_form(mat);
    let rank = diag.iter().filter(|&&d| d != 0).count();
    let mut out: Vec<u64> = diag.iter().copied().filter(|&d| d > 1).collect();
    out.extend(std::iter::repeat(0).take(cols - rank));
    out
}

/// Abelianization of a presentation as a list of elementary divisors;
/// `0` marks an infinite cyclic factor.
pub fn abelianization(p: &Presentation) -> Vec<u64> {
    elementary_divisors(&p.exponent_matrix(), p.n_gens())
}
