//! Skew-symmetrizable integer matrices under mutation.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// A square integer exchange matrix, optionally with a diagonal
/// skew-symmetrizer `D` satisfying `(DB)ᵀ = −DB`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExchangeMatrix {
    b: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    symmetrizer: Option<Vec<i64>>,
}

impl ExchangeMatrix {
    pub fn new(b: Vec<Vec<i64>>) -> Result<Self> {
        Self::with_symmetrizer(b, None)
    }

    pub fn with_symmetrizer(b: Vec<Vec<i64>>, symmetrizer: Option<Vec<i64>>) -> Result<Self> {
        let n = b.len();
        if b.iter().any(|row| row.len() != n) {
            return Err(Error::Parse("exchange matrix must be square".into()));
        }
        let d: Vec<i64> = match &symmetrizer {
            Some(d) if d.len() != n => {
                return Err(Error::Parse("symmetrizer size mismatch".into()))
            }
            Some(d) if d.iter().any(|&x| x <= 0) => {
                return Err(Error::Parse("symmetrizer entries must be positive".into()))
            }
            Some(d) => d.clone(),
            None => vec![1; n],
        };
        for i in 0..n {
            for j in 0..n {
                if d[i] * b[i][j] != -d[j] * b[j][i] {
                    return Err(Error::NotSkewSymmetrizable);
                }
            }
        }
        Ok(ExchangeMatrix { b, symmetrizer })
    }

    pub fn size(&self) -> usize {
        self.b.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.b[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.b
    }

    pub fn symmetrizer(&self) -> Option<&[i64]> {
        self.symmetrizer.as_deref()
    }

    /// Mutation at index `k` (0-based):
    /// `b'_ij = −b_ij` when `k ∈ {i, j}`, else
    /// `b_ij + sgn(b_ik)·max(b_ik b_kj, 0)`. An involution preserving the
    /// symmetrizer.
    pub fn mutate(&self, k: usize) -> Result<ExchangeMatrix> {
        let n = self.size();
        if k >= n {
            return Err(Error::BadIndex(format!("mutation index {k} for size {n}")));
        }
        let mut out = self.b.clone();
        for i in 0..n {
            for j in 0..n {
                out[i][j] = if i == k || j == k {
                    -self.b[i][j]
                } else {
                    self.b[i][j] + self.b[i][k].signum() * (self.b[i][k] * self.b[k][j]).max(0)
                };
            }
        }
        debug_assert!(
            ExchangeMatrix::with_symmetrizer(out.clone(), self.symmetrizer.clone()).is_ok()
        );
        Ok(ExchangeMatrix { b: out, symmetrizer: self.symmetrizer.clone() })
    }

    /// Total number of quiver arrows: the sum of the positive entries.
    pub fn arrow_count(&self) -> i64 {
        self.b.iter().flatten().filter(|&&x| x > 0).sum()
    }
}
