//! Marked surfaces (S, M): genus, boundary components with marked points,
//! punctures; their classification against the triangulation setting, and
//! the quotient surface collapsing each boundary component to a puncture.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// A marked surface: an oriented surface of genus `g` with `r` boundary
/// components carrying `k_1 ≤ … ≤ k_r` marked points and `n` punctures.
/// Boundary counts are sorted ascending on construction; component identity
/// is positional after sorting.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MarkedSurface {
    genus: u32,
    punctures: u32,
    boundary: Vec<u32>,
}

impl<'de> Deserialize<'de> for MarkedSurface {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            genus: u32,
            punctures: u32,
            boundary: Vec<u32>,
        }
        let raw = Raw::deserialize(d)?;
        MarkedSurface::new(raw.genus, raw.boundary, raw.punctures).map_err(serde::de::Error::custom)
    }
}

/// Where a surface falls in the case analysis: the excluded surfaces, the
/// three non-feasible ones, the boundary-only annulus, and the two feasible
/// families split by genus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SurfaceClass {
    Excluded,
    OncePuncturedClosed,
    FourPuncturedSphere,
    OncePunctured4gon,
    TwicePuncturedDigon,
    UnpuncturedAnnulus(u32, u32),
    FeasibleGenus0,
    FeasibleGenusGe1,
}

impl MarkedSurface {
    /// Builds a surface, sorting boundary counts ascending. Rejects boundary
    /// components without marked points.
    pub fn new(genus: u32, mut boundary: Vec<u32>, punctures: u32) -> Result<Self> {
        if boundary.iter().any(|&k| k == 0) {
            return Err(Error::Parse("every boundary component needs a marked point".into()));
        }
        boundary.sort_unstable();
        Ok(MarkedSurface { genus, punctures, boundary })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn punctures(&self) -> u32 {
        self.punctures
    }

    /// Marked-point counts per boundary component, ascending.
    pub fn boundary(&self) -> &[u32] {
        &self.boundary
    }

    pub fn n_boundary(&self) -> usize {
        self.boundary.len()
    }

    /// Total marked points on the boundary.
    pub fn boundary_marks(&self) -> u32 {
        self.boundary.iter().sum()
    }

    /// Classifies the surface. Total and mutually exclusive; `Excluded`
    /// exactly for the surfaces that admit no triangulated cluster
    /// structure.
    pub fn classify(&self) -> SurfaceClass {
        let g = self.genus;
        let r = self.boundary.len();
        let n = self.punctures;
        let c = self.boundary_marks();

        // No marked points at all.
        if n == 0 && r == 0 {
            return SurfaceClass::Excluded;
        }
        if g == 0 {
            // Sphere with 1, 2 or 3 marked points.
            if r == 0 && n <= 3 {
                return SurfaceClass::Excluded;
            }
            // Unpunctured disk with ≤ 3 boundary marked points.
            if r == 1 && n == 0 && c <= 3 {
                return SurfaceClass::Excluded;
            }
            // Once-punctured disk with 1 boundary marked point.
            if r == 1 && n == 1 && c == 1 {
                return SurfaceClass::Excluded;
            }
            if r == 0 && n == 4 {
                return SurfaceClass::FourPuncturedSphere;
            }
            if r == 1 && n == 1 && c == 4 {
                return SurfaceClass::OncePunctured4gon;
            }
            if r == 1 && n == 2 && c == 2 {
                return SurfaceClass::TwicePuncturedDigon;
            }
            if r == 2 && n == 0 {
                return SurfaceClass::UnpuncturedAnnulus(self.boundary[0], self.boundary[1]);
            }
            return SurfaceClass::FeasibleGenus0;
        }
        if r == 0 && n == 1 {
            return SurfaceClass::OncePuncturedClosed;
        }
        SurfaceClass::FeasibleGenusGe1
    }

    /// Number of arcs in any (tagged) triangulation:
    /// `6g + 3r + 3n + c − 6` with `c` the total boundary marked points.
    /// Rejects excluded surfaces.
    pub fn arc_count(&self) -> Result<usize> {
        if self.classify() == SurfaceClass::Excluded {
            return Err(Error::ExcludedSurface(format!("{self:?}")));
        }
        let g = self.genus as i64;
        let r = self.boundary.len() as i64;
        let n = self.punctures as i64;
        let c = self.boundary_marks() as i64;
        let count = 6 * g + 3 * r + 3 * n + c - 6;
        debug_assert!(count >= 1);
        Ok(count as usize)
    }

    /// The quotient surface S̃ = S/𝓑: each boundary component degenerates
    /// to a puncture. Idempotent.
    pub fn quotient(&self) -> MarkedSurface {
        MarkedSurface {
            genus: self.genus,
            punctures: self.punctures + self.boundary.len() as u32,
            boundary: Vec::new(),
        }
    }

    /// The order-preserving map ω on p₁ ≺ … ≺ p_n ≺ b₁ ≺ … ≺ b_r: position
    /// `i` (1-based) of the original puncture/boundary list goes to quotient
    /// puncture `ω(i)`. With the ordering fixed this is the identity
    /// relabelling, returned explicitly as 1-based positions.
    pub fn omega(&self) -> Vec<usize> {
        (1..=(self.punctures as usize + self.boundary.len())).collect()
    }

    /// The index set `I ⊂ [n+r−1]` of admissible half-twist positions:
    /// exactly those `k` for which quotient punctures `k` and `k+1` lie in
    /// the same orbit (both punctures, or boundary components with equal
    /// mark counts). 1-based.
    pub fn index_set(&self) -> Vec<usize> {
        // Type of each quotient-puncture position: punctures share one type,
        // boundary components are typed by their mark count.
        let n = self.punctures as usize;
        let mut types: Vec<i64> = vec![-1; n];
        types.extend(self.boundary.iter().map(|&k| k as i64));
        (1..types.len()).filter(|&k| types[k - 1] == types[k]).collect()
    }

    /// Quotient-strand count n + r.
    pub fn strands(&self) -> usize {
        self.punctures as usize + self.boundary.len()
    }
}
