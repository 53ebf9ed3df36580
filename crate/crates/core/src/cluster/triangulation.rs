//! Tagged triangulations as oriented triangle gluings with per-end taggings.
//!
//! A triangulation is a list of oriented triangles whose side `k` runs from
//! corner `k` to corner `k+1`; each arc occupies exactly two sides, glued
//! antiparallel, and boundary segments are unglued sides. A conjugate pair
//! of tagged arcs is stored as a self-folded triangle: the radius sides
//! carry the pair member that is plain at the enclosed puncture, the loop
//! side carries the notched one. Flips keep arc labels in place, so a flip
//! at the same label twice is the identity.

use crate::cluster::{ExchangeMatrix, Seed};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Arc(usize),
    Boundary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Tag {
    Plain,
    Notched,
}

impl Tag {
    fn flip(self) -> Tag {
        match self {
            Tag::Plain => Tag::Notched,
            Tag::Notched => Tag::Plain,
        }
    }
}

/// Interchange form of a triangulation: triangles as oriented triples of
/// arc names (`null` for boundary segments), self-folded pairs listed as
/// `[inner, outer]`, and notched arc ends as `[arc, end]` with end 0/1 in
/// the stored end order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TriangulationFile {
    pub arcs: Vec<String>,
    pub triangles: Vec<[Option<String>; 3]>,
    #[serde(default)]
    pub selffolded: Vec<[String; 2]>,
    #[serde(default)]
    pub notched: Vec<(String, u8)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TaggedTriangulation {
    arc_names: Vec<String>,
    tris: Vec<[Side; 3]>,
    /// verts[t][k]: vertex at the start of side k of triangle t.
    verts: Vec<[usize; 3]>,
    n_punctures: usize,
    /// Tagged-arc endpoints, sorted; for the notched member of a conjugate
    /// pair these are the radius endpoints, not the geometric loop ends.
    ends: Vec<[usize; 2]>,
    tags: Vec<[Tag; 2]>,
}

impl TaggedTriangulation {
    /// Builds and validates a triangulation from explicit data. Vertices
    /// `0..n_punctures` are punctures, the rest boundary marked points.
    pub fn new(
        arc_names: Vec<String>,
        tris: Vec<[Side; 3]>,
        verts: Vec<[usize; 3]>,
        n_punctures: usize,
        ends: Vec<[usize; 2]>,
        tags: Vec<[Tag; 2]>,
    ) -> Result<Self> {
        let mut t = TaggedTriangulation { arc_names, tris, verts, n_punctures, ends, tags };
        t.validate()?;
        t.canonicalize();
        Ok(t)
    }

    pub fn n_arcs(&self) -> usize {
        self.arc_names.len()
    }

    pub fn arc_names(&self) -> &[String] {
        &self.arc_names
    }

    pub fn n_punctures(&self) -> usize {
        self.n_punctures
    }

    pub fn arc_index(&self, name: &str) -> Option<usize> {
        self.arc_names.iter().position(|n| n == name)
    }

    pub fn tag_at(&self, arc: usize, vertex: usize) -> Option<Tag> {
        let [v0, v1] = self.ends[arc];
        if v0 == vertex {
            Some(self.tags[arc][0])
        } else if v1 == vertex {
            Some(self.tags[arc][1])
        } else {
            None
        }
    }

    /// The two (triangle, side) slots of an arc.
    fn slots(&self, arc: usize) -> [(usize, usize); 2] {
        let mut out = Vec::with_capacity(2);
        for (t, tri) in self.tris.iter().enumerate() {
            for (k, side) in tri.iter().enumerate() {
                if *side == Side::Arc(arc) {
                    out.push((t, k));
                }
            }
        }
        debug_assert_eq!(out.len(), 2, "arc {arc} must occupy exactly two sides");
        [out[0], out[1]]
    }

    /// Self-folded triangles as (triangle, radius arc, loop arc, enclosed
    /// puncture, base vertex).
    fn self_folded(&self) -> Vec<(usize, usize, usize, usize, usize)> {
        let mut out = Vec::new();
        for (t, tri) in self.tris.iter().enumerate() {
            for k in 0..3 {
                let (a, b) = (tri[k], tri[(k + 1) % 3]);
                if let (Side::Arc(x), Side::Arc(y)) = (a, b) {
                    if x == y {
                        let loop_side = tri[(k + 2) % 3];
                        let Side::Arc(l) = loop_side else { continue };
                        // Enclosed puncture: shared corner of the two radius
                        // sides; base: the loop's corner.
                        let enclosed = self.verts[t][(k + 1) % 3];
                        let base = self.verts[t][(k + 2) % 3];
                        out.push((t, x, l, enclosed, base));
                    }
                }
            }
        }
        out
    }

    /// Map loop arc → radius arc over all conjugate pairs.
    fn pair_of_loop(&self) -> std::collections::BTreeMap<usize, usize> {
        self.self_folded().into_iter().map(|(_, radius, l, _, _)| (l, radius)).collect()
    }

    fn is_boundary_vertex(&self, v: usize) -> bool {
        v >= self.n_punctures
    }

    /// Tag state of a puncture read from any incident arc end, skipping the
    /// excluded arc.
    fn state_at(&self, v: usize, exclude: usize) -> Result<Tag> {
        if self.is_boundary_vertex(v) {
            return Ok(Tag::Plain);
        }
        for a in 0..self.n_arcs() {
            if a == exclude {
                continue;
            }
            if let Some(t) = self.tag_at(a, v) {
                return Ok(t);
            }
        }
        Err(Error::BadTriangulation(format!("no arc end at puncture {v}")))
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n_arcs();
        if self.tris.len() != self.verts.len()
            || self.ends.len() != n
            || self.tags.len() != n
            || self.arc_names.len() != n
        {
            return Err(Error::BadTriangulation("field lengths disagree".into()));
        }
        // Each arc exactly twice, glued antiparallel on vertices.
        for a in 0..n {
            let mut slots = Vec::new();
            for (t, tri) in self.tris.iter().enumerate() {
                for (k, side) in tri.iter().enumerate() {
                    if *side == Side::Arc(a) {
                        slots.push((t, k));
                    }
                }
            }
            if slots.len() != 2 {
                return Err(Error::BadTriangulation(format!(
                    "arc {} occupies {} sides",
                    self.arc_names[a],
                    slots.len()
                )));
            }
            let [(t1, k1), (t2, k2)] = [slots[0], slots[1]];
            let (s1, e1) = (self.verts[t1][k1], self.verts[t1][(k1 + 1) % 3]);
            let (s2, e2) = (self.verts[t2][k2], self.verts[t2][(k2 + 1) % 3]);
            if s1 != e2 || s2 != e1 {
                return Err(Error::BadTriangulation(format!(
                    "arc {} is not glued antiparallel",
                    self.arc_names[a]
                )));
            }
        }
        let pairs = self.self_folded();
        // Tagged-arc ends: match the geometric ends, except that both
        // members of a conjugate pair carry the radius endpoints.
        let loop_arcs: std::collections::BTreeMap<usize, usize> = self.pair_of_loop();
        for a in 0..n {
            let [(t1, k1), _] = self.slots(a);
            let geo =
                sorted_pair(self.verts[t1][k1], self.verts[t1][(k1 + 1) % 3]);
            let expected = match loop_arcs.get(&a) {
                Some(&radius) => {
                    let [(rt, rk), _] = self.slots(radius);
                    sorted_pair(self.verts[rt][rk], self.verts[rt][(rk + 1) % 3])
                }
                None => geo,
            };
            if sorted_pair(self.ends[a][0], self.ends[a][1]) != expected {
                return Err(Error::BadTriangulation(format!(
                    "stored ends of arc {} disagree with the gluing",
                    self.arc_names[a]
                )));
            }
            // Boundary ends plain; loops tagged equally at both ends.
            for (i, &v) in self.ends[a].iter().enumerate() {
                if self.is_boundary_vertex(v) && self.tags[a][i] != Tag::Plain {
                    return Err(Error::BadTriangulation(format!(
                        "arc {} notched at a boundary point",
                        self.arc_names[a]
                    )));
                }
            }
            if self.ends[a][0] == self.ends[a][1] && self.tags[a][0] != self.tags[a][1] {
                return Err(Error::BadTriangulation(format!(
                    "loop arc {} tagged differently at its two ends",
                    self.arc_names[a]
                )));
            }
        }
        // Per-puncture consistency: all ends agree, except at the enclosed
        // puncture of a conjugate pair where exactly the two members differ.
        for v in 0..self.n_punctures {
            let incident: Vec<(usize, Tag)> = (0..n)
                .flat_map(|a| {
                    self.ends[a]
                        .iter()
                        .zip(self.tags[a].iter())
                        .filter(move |(&e, _)| e == v)
                        .map(move |(_, &t)| (a, t))
                })
                .collect();
            if incident.is_empty() {
                return Err(Error::BadTriangulation(format!("puncture {v} has no arc ends")));
            }
            let tags: std::collections::BTreeSet<Tag> =
                incident.iter().map(|&(_, t)| t).collect();
            if tags.len() > 1 {
                let pair = pairs.iter().find(|&&(_, _, _, enc, _)| enc == v);
                let ok = pair.is_some_and(|&(_, radius, l, _, _)| {
                    incident.len() == 2
                        && incident.iter().any(|&(a, _)| a == radius)
                        && incident.iter().any(|&(a, _)| a == l)
                });
                if !ok {
                    return Err(Error::BadTriangulation(format!(
                        "mixed tags at puncture {v} without a conjugate pair"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Canonical storage: the pair member plain at the enclosed puncture
    /// sits on the radius sides, triangles are rotated to their least
    /// encoding and sorted.
    fn canonicalize(&mut self) {
        for (t, radius, l, enclosed, _) in self.self_folded() {
            if self.tag_at(radius, enclosed) == Some(Tag::Notched) {
                // Swap which member sits on the radius: relabel the sides.
                let _ = t;
                for tri in self.tris.iter_mut() {
                    for side in tri.iter_mut() {
                        *side = match *side {
                            Side::Arc(x) if x == radius => Side::Arc(l),
                            Side::Arc(x) if x == l => Side::Arc(radius),
                            s => s,
                        };
                    }
                }
            }
        }
        let mut keyed: Vec<([(Side, usize); 3], [Side; 3], [usize; 3])> = self
            .tris
            .iter()
            .zip(self.verts.iter())
            .map(|(tri, vs)| {
                let mut best: Option<([(Side, usize); 3], [Side; 3], [usize; 3])> = None;
                for r in 0..3 {
                    let sides = [tri[r], tri[(r + 1) % 3], tri[(r + 2) % 3]];
                    let vv = [vs[r], vs[(r + 1) % 3], vs[(r + 2) % 3]];
                    let key = [(sides[0], vv[0]), (sides[1], vv[1]), (sides[2], vv[2])];
                    if best.as_ref().is_none_or(|(bk, _, _)| key < *bk) {
                        best = Some((key, sides, vv));
                    }
                }
                best.expect("three rotations")
            })
            .collect();
        keyed.sort();
        self.tris = keyed.iter().map(|(_, s, _)| *s).collect();
        self.verts = keyed.iter().map(|(_, _, v)| *v).collect();
    }

    /// The flip at the arc with the given index: replaces it by the unique
    /// other tagged arc completing the rest to a tagged triangulation. The
    /// new arc keeps the label, so flipping twice is the identity.
    pub fn flip(&self, arc: usize) -> Result<TaggedTriangulation> {
        if arc >= self.n_arcs() {
            return Err(Error::BadIndex(format!("flip at arc {arc} of {}", self.n_arcs())));
        }
        let [(t1, k1), (t2, k2)] = self.slots(arc);
        if t1 == t2 {
            // Radius of a conjugate pair.
            return self.flip_pair_member(arc, true);
        }
        let sf = self.pair_of_loop();
        if sf.contains_key(&arc) {
            return self.flip_pair_member(arc, false);
        }
        // The adjacent triangles must not both be self-folded around other
        // arcs; a self-folded neighbour here means `arc` is its loop, which
        // was handled above.
        self.flip_quadrilateral(arc, (t1, k1), (t2, k2))
    }

    /// Generic quadrilateral flip: Δ₁ = (γ, a, b), Δ₂ = (γ, c, d) become
    /// (γ', b, c) and (γ', d, a), with γ' joining the off-diagonal corners.
    fn flip_quadrilateral(
        &self,
        arc: usize,
        (t1, k1): (usize, usize),
        (t2, k2): (usize, usize),
    ) -> Result<TaggedTriangulation> {
        let mut out = self.clone();
        let side = |t: usize, k: usize| self.tris[t][(k) % 3];
        let vert = |t: usize, k: usize| self.verts[t][(k) % 3];

        // Corners: γ runs y→w in Δ₁ and w→y in Δ₂.
        let y = vert(t1, k1);
        let w = vert(t1, k1 + 1);
        let x = vert(t1, k1 + 2);
        debug_assert_eq!(vert(t2, k2), w);
        debug_assert_eq!(vert(t2, k2 + 1), y);
        let z = vert(t2, k2 + 2);

        let a_side = side(t1, k1 + 1);
        let b_side = side(t1, k1 + 2);
        let c_side = side(t2, k2 + 1);
        let d_side = side(t2, k2 + 2);

        out.tris[t1] = [Side::Arc(arc), b_side, c_side];
        out.verts[t1] = [z, x, y];
        out.tris[t2] = [Side::Arc(arc), d_side, a_side];
        out.verts[t2] = [x, z, w];

        // Detect a freshly created conjugate pair: a new triangle with two
        // sides of one arc.
        let doubled_bc = matches!((b_side, c_side), (Side::Arc(p), Side::Arc(q)) if p == q);
        let doubled_da = matches!((d_side, a_side), (Side::Arc(p), Side::Arc(q)) if p == q);
        if doubled_bc && doubled_da {
            return Err(Error::BadFlip("flip would fold both new triangles".into()));
        }
        if doubled_bc || doubled_da {
            let (inner, enclosed) = if doubled_bc {
                let Side::Arc(e) = b_side else { unreachable!() };
                (e, y)
            } else {
                let Side::Arc(e) = d_side else { unreachable!() };
                (e, w)
            };
            if self.ends[inner][0] == self.ends[inner][1] {
                return Err(Error::BadFlip("degenerate fold on a loop arc".into()));
            }
            // The flipped label becomes the notched companion of `inner`.
            out.ends[arc] = self.ends[inner];
            out.tags[arc] = self.tags[inner];
            let end_idx = if out.ends[arc][0] == enclosed { 0 } else { 1 };
            out.tags[arc][end_idx] = out.tags[arc][end_idx].flip();
        } else {
            out.ends[arc] = sorted_pair(x, z);
            let tag_x = self.state_at(x, arc)?;
            let tag_z = self.state_at(z, arc)?;
            out.tags[arc] =
                if out.ends[arc] == [x, z] { [tag_x, tag_z] } else { [tag_z, tag_x] };
        }
        out.canonicalize();
        debug_assert!(out.validate().is_ok(), "flip broke invariants: {:?}", out.validate());
        Ok(out)
    }

    /// Flip of a conjugate-pair member. Structurally this is the
    /// quadrilateral flip of the loop; the remaining member moves onto the
    /// radius and the flipped label becomes an arc from the enclosed
    /// puncture to the far corner of the outer triangle.
    fn flip_pair_member(&self, arc: usize, flipped_inner: bool) -> Result<TaggedTriangulation> {
        let pairs = self.self_folded();
        let entry = pairs
            .iter()
            .find(|&&(_, radius, l, _, _)| if flipped_inner { radius == arc } else { l == arc })
            .copied();
        let Some((_, radius, l, enclosed, _)) = entry else {
            return Err(Error::BadFlip("arc is not part of a conjugate pair".into()));
        };
        let mut work = self.clone();
        if flipped_inner {
            // Put the flipped member on the loop sides first, so the
            // generic flip consumes it; the remaining member takes over the
            // radius.
            for tri in work.tris.iter_mut() {
                for side in tri.iter_mut() {
                    *side = match *side {
                        Side::Arc(p) if p == radius => Side::Arc(l),
                        Side::Arc(p) if p == l => Side::Arc(radius),
                        s => s,
                    };
                }
            }
        }
        let flipped = arc;
        let remaining = if flipped_inner { l } else { radius };
        let [(t1, k1), (t2, k2)] = work.slots(flipped);
        // The self-folded triangle plays Δ₁; rotate roles if needed.
        let (sf_slot, other_slot) = if work.tris[t1].iter().filter(|s| **s == Side::Arc(remaining)).count() == 2
        {
            ((t1, k1), (t2, k2))
        } else {
            ((t2, k2), (t1, k1))
        };
        if sf_slot.0 == other_slot.0 {
            return Err(Error::BadFlip("conjugate pair without an outer triangle".into()));
        }
        let mut out = work.flip_quadrilateral(flipped, sf_slot, other_slot)?;
        // Tags of the new arc: at the enclosed puncture it must agree with
        // the remaining member; at the far corner with the local state.
        let far = {
            let [e0, e1] = out.ends[flipped];
            if e0 == enclosed {
                e1
            } else {
                e0
            }
        };
        let tag_enclosed = out
            .tag_at(remaining, enclosed)
            .ok_or_else(|| Error::BadFlip("remaining member lost its enclosed end".into()))?;
        let tag_far = if out.ends[flipped][0] == out.ends[flipped][1] {
            tag_enclosed
        } else {
            out.state_at(far, flipped)?
        };
        out.tags[flipped] = if out.ends[flipped][0] == enclosed {
            [tag_enclosed, tag_far]
        } else if out.ends[flipped][1] == enclosed {
            [tag_far, tag_enclosed]
        } else {
            return Err(Error::BadFlip("flipped pair member misses the enclosed puncture".into()));
        };
        out.canonicalize();
        debug_assert!(out.validate().is_ok(), "pair flip broke invariants: {:?}", out.validate());
        Ok(out)
    }

    /// The signed adjacency matrix: each non-self-folded triangle
    /// contributes +1 for every ordered pair of consecutive arc sides,
    /// with conjugate-pair members sharing their contributions.
    pub fn adjacency_matrix(&self) -> ExchangeMatrix {
        let n = self.n_arcs();
        let pair_of_loop = self.pair_of_loop();
        let radius_arcs: std::collections::BTreeSet<usize> =
            pair_of_loop.values().copied().collect();
        let fiber = |arc: usize| -> Vec<usize> {
            match pair_of_loop.get(&arc) {
                Some(&radius) => vec![arc, radius],
                None => vec![arc],
            }
        };
        let mut b = vec![vec![0i64; n]; n];
        for (t, tri) in self.tris.iter().enumerate() {
            // Skip self-folded triangles.
            let arcs: Vec<Option<usize>> = tri
                .iter()
                .map(|s| match s {
                    Side::Arc(a) => Some(*a),
                    Side::Boundary => None,
                })
                .collect();
            let self_folded = arcs.iter().flatten().any(|a| radius_arcs.contains(a))
                && arcs.iter().flatten().collect::<std::collections::BTreeSet<_>>().len() < 3
                && {
                    // Two equal arc sides in this triangle.
                    let flat: Vec<usize> = arcs.iter().flatten().copied().collect();
                    flat.len() == 3 && (flat[0] == flat[1] || flat[1] == flat[2] || flat[0] == flat[2])
                };
            if self_folded {
                continue;
            }
            let _ = t;
            for k in 0..3 {
                if let (Some(u), Some(w)) = (arcs[k], arcs[(k + 1) % 3]) {
                    for &i in &fiber(u) {
                        for &j in &fiber(w) {
                            b[i][j] += 1;
                            b[j][i] -= 1;
                        }
                    }
                }
            }
        }
        ExchangeMatrix::new(b).expect("signed adjacency is skew-symmetric")
    }

    pub fn to_seed(&self) -> Seed {
        Seed::new(self.arc_names.clone(), self.adjacency_matrix()).expect("aligned sizes")
    }

    /// Equality up to renaming of the internal vertex ids (preserving the
    /// puncture/boundary split): the relation the interchange format can
    /// express, since it stores no vertex numbering.
    pub fn equivalent_to(&self, other: &TaggedTriangulation) -> bool {
        if self.arc_names != other.arc_names
            || self.n_punctures != other.n_punctures
            || self.tris.len() != other.tris.len()
        {
            return false;
        }
        let self_max = self.verts.iter().flatten().max().copied().unwrap_or(0);
        let other_max = other.verts.iter().flatten().max().copied().unwrap_or(0);
        if self_max != other_max {
            return false;
        }
        let n_verts = self_max + 1;
        let n_bd = n_verts - self.n_punctures;
        let pperms = crate::perm::Perm::all(self.n_punctures);
        let bperms = crate::perm::Perm::all(n_bd);
        for pp in &pperms {
            for bp in &bperms {
                let map = |v: usize| {
                    if v < self.n_punctures {
                        pp.apply(v)
                    } else {
                        self.n_punctures + bp.apply(v - self.n_punctures)
                    }
                };
                let mut renamed = self.clone();
                for vs in renamed.verts.iter_mut() {
                    for v in vs.iter_mut() {
                        *v = map(*v);
                    }
                }
                for (ends, tags) in renamed.ends.iter_mut().zip(renamed.tags.iter_mut()) {
                    let mapped = [map(ends[0]), map(ends[1])];
                    if mapped[0] <= mapped[1] {
                        *ends = mapped;
                    } else {
                        *ends = [mapped[1], mapped[0]];
                        tags.swap(0, 1);
                    }
                }
                renamed.canonicalize();
                if renamed == *other {
                    return true;
                }
            }
        }
        false
    }

    // ----- stock constructors -----

    /// Unpunctured disk with `marks ≥ 4` boundary points: the fan
    /// triangulation from vertex 0.
    pub fn polygon(marks: usize) -> Result<TaggedTriangulation> {
        if marks < 4 {
            return Err(Error::ExcludedSurface(format!("disk with {marks} marks")));
        }
        let n_arcs = marks - 3;
        let arc_names: Vec<String> = (1..=n_arcs).map(|i| format!("d{i}")).collect();
        // Diagonal d_i joins vertex 0 to vertex i+1.
        let diag = |v: usize| -> Side {
            if v >= 2 && v <= marks - 2 {
                Side::Arc(v - 2)
            } else {
                Side::Boundary
            }
        };
        let mut tris = Vec::new();
        let mut verts = Vec::new();
        for i in 1..marks - 1 {
            // Triangle (0, i, i+1): sides 0→i, i→i+1 (boundary), i+1→0.
            tris.push([diag(i), Side::Boundary, diag(i + 1)]);
            verts.push([0, i, i + 1]);
        }
        let ends: Vec<[usize; 2]> = (2..=marks - 2).map(|v| [0, v]).collect();
        let tags = vec![[Tag::Plain, Tag::Plain]; n_arcs];
        TaggedTriangulation::new(arc_names, tris, verts, 0, ends, tags)
    }

    /// Once-punctured torus: two triangles over three arcs through the
    /// single puncture.
    pub fn once_punctured_torus() -> TaggedTriangulation {
        let arc_names = vec!["a".into(), "b".into(), "c".into()];
        let tris = vec![
            [Side::Arc(0), Side::Arc(1), Side::Arc(2)],
            [Side::Arc(0), Side::Arc(1), Side::Arc(2)],
        ];
        let verts = vec![[0, 0, 0], [0, 0, 0]];
        let ends = vec![[0, 0]; 3];
        let tags = vec![[Tag::Plain, Tag::Plain]; 3];
        TaggedTriangulation::new(arc_names, tris, verts, 1, ends, tags)
            .expect("stock torus is valid")
    }

    /// Unpunctured annulus with p outer and q inner marks: the double fan
    /// matching the stock annulus state.
    pub fn annulus(p: usize, q: usize) -> Result<TaggedTriangulation> {
        if p == 0 || q == 0 {
            return Err(Error::BadIndex("annulus needs p, q >= 1".into()));
        }
        // Vertices: outer 0..p (boundary), inner p..p+q (boundary).
        let outer = |k: usize| k % p;
        let inner = |l: usize| p + (l % q);
        let n_arcs = p + q;
        // Arcs: A_k = outer k → inner 0 for k = 0..p−1, then
        // B_l = outer 0 → inner l for l = 1..q−1, then X = the full-turn
        // outer 0 → inner 0.
        let mut arc_names: Vec<String> = (0..p).map(|k| format!("A{k}")).collect();
        arc_names.extend((1..q).map(|l| format!("B{l}")));
        arc_names.push("X".into());
        let a = |k: usize| Side::Arc(k);
        let bfan = |l: usize| -> Side {
            // B_0 is the short arc A_0, B_q the full-turn arc X.
            if l == 0 {
                Side::Arc(0)
            } else if l == q {
                Side::Arc(n_arcs - 1)
            } else {
                Side::Arc(p + l - 1)
            }
        };
        let mut tris: Vec<[Side; 3]> = Vec::new();
        let mut verts: Vec<[usize; 3]> = Vec::new();
        // Fan through o₀ along the inner boundary: triangles
        // (o₀, i_{l+1}, i_l) with sides [B_{l+1}, boundary, B_l].
        for l in 0..q {
            tris.push([bfan(l + 1), Side::Boundary, bfan(l)]);
            verts.push([outer(0), inner(l + 1), inner(l)]);
        }
        // Fan through i₀ along the outer boundary: triangles
        // (o_k, o_{k+1}, i₀) with sides [boundary, A_{k+1}, A_k],
        // where the k = 0 triangle enters through the full-turn arc.
        for k in 0..p {
            let left = if k == 0 { bfan(q) } else { a(k) };
            tris.push([Side::Boundary, a((k + 1) % p), left]);
            verts.push([outer(k), outer(k + 1), inner(0)]);
        }
        let mut ends: Vec<[usize; 2]> = (0..p).map(|k| sorted_pair(outer(k), inner(0))).collect();
        ends.extend((1..q).map(|l| sorted_pair(outer(0), inner(l))));
        ends.push(sorted_pair(outer(0), inner(0)));
        let tags = vec![[Tag::Plain, Tag::Plain]; n_arcs];
        TaggedTriangulation::new(arc_names, tris, verts, 0, ends, tags)
    }

    // ----- interchange format -----

    pub fn to_file(&self) -> TriangulationFile {
        let name = |s: &Side| match s {
            Side::Arc(a) => Some(self.arc_names[*a].clone()),
            Side::Boundary => None,
        };
        let triangles =
            self.tris.iter().map(|tri| [name(&tri[0]), name(&tri[1]), name(&tri[2])]).collect();
        let selffolded = self
            .self_folded()
            .into_iter()
            .map(|(_, radius, l, _, _)| [self.arc_names[radius].clone(), self.arc_names[l].clone()])
            .collect();
        let mut notched = Vec::new();
        for a in 0..self.n_arcs() {
            for (i, &t) in self.tags[a].iter().enumerate() {
                if t == Tag::Notched {
                    notched.push((self.arc_names[a].clone(), i as u8));
                }
            }
        }
        TriangulationFile { arcs: self.arc_names.clone(), triangles, selffolded, notched }
    }

    /// Rebuilds a triangulation from the interchange form, deriving the
    /// vertex structure by corner classes.
    pub fn from_file(file: &TriangulationFile) -> Result<TaggedTriangulation> {
        let n = file.arcs.len();
        let arc_of = |name: &str| -> Result<usize> {
            file.arcs
                .iter()
                .position(|a| a == name)
                .ok_or_else(|| Error::Parse(format!("unknown arc {name:?}")))
        };
        let mut tris: Vec<[Side; 3]> = Vec::new();
        for tri in &file.triangles {
            let mut sides = [Side::Boundary; 3];
            for (k, s) in tri.iter().enumerate() {
                sides[k] = match s {
                    Some(name) => Side::Arc(arc_of(name)?),
                    None => Side::Boundary,
                };
            }
            tris.push(sides);
        }
        // Corner classes: corner (t,k) is glued around its vertex.
        let nt = tris.len();
        let idx = |t: usize, k: usize| 3 * t + k;
        let mut uf: Vec<usize> = (0..3 * nt).collect();
        fn find(uf: &mut Vec<usize>, mut i: usize) -> usize {
            while uf[i] != i {
                uf[i] = uf[uf[i]];
                i = uf[i];
            }
            i
        }
        let mut union = |uf: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(uf, a), find(uf, b));
            if ra != rb {
                uf[ra.max(rb)] = ra.min(rb);
            }
        };
        // Find slots per arc.
        let mut slots: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (t, tri) in tris.iter().enumerate() {
            for (k, s) in tri.iter().enumerate() {
                if let Side::Arc(a) = s {
                    slots[*a].push((t, k));
                }
            }
        }
        for (a, s) in slots.iter().enumerate() {
            if s.len() != 2 {
                return Err(Error::BadTriangulation(format!(
                    "arc {} occupies {} sides",
                    file.arcs[a],
                    s.len()
                )));
            }
            let [(t1, k1), (t2, k2)] = [s[0], s[1]];
            // Antiparallel: start of one = end of the other.
            union(&mut uf, idx(t1, k1), idx(t2, (k2 + 1) % 3));
            union(&mut uf, idx(t2, k2), idx(t1, (k1 + 1) % 3));
        }
        // Boundary flags per class.
        let mut class_ids: Vec<usize> = Vec::new();
        let mut corner_class = vec![0usize; 3 * nt];
        for t in 0..nt {
            for k in 0..3 {
                let r = find(&mut uf, idx(t, k));
                corner_class[idx(t, k)] = r;
                if !class_ids.contains(&r) {
                    class_ids.push(r);
                }
            }
        }
        let mut is_boundary = std::collections::BTreeMap::new();
        for t in 0..nt {
            for k in 0..3 {
                // Corner k touches sides k (outgoing) and k+2 (incoming).
                let touches_boundary =
                    tris[t][k] == Side::Boundary || tris[t][(k + 2) % 3] == Side::Boundary;
                let r = corner_class[idx(t, k)];
                *is_boundary.entry(r).or_insert(false) |= touches_boundary;
            }
        }
        let mut punctures: Vec<usize> =
            class_ids.iter().copied().filter(|r| !is_boundary[r]).collect();
        let mut boundary: Vec<usize> =
            class_ids.iter().copied().filter(|r| is_boundary[r]).collect();
        punctures.sort_unstable();
        boundary.sort_unstable();
        let n_punctures = punctures.len();
        let vertex_id: std::collections::BTreeMap<usize, usize> = punctures
            .iter()
            .chain(boundary.iter())
            .enumerate()
            .map(|(i, &r)| (r, i))
            .collect();
        let verts: Vec<[usize; 3]> = (0..nt)
            .map(|t| {
                [
                    vertex_id[&corner_class[idx(t, 0)]],
                    vertex_id[&corner_class[idx(t, 1)]],
                    vertex_id[&corner_class[idx(t, 2)]],
                ]
            })
            .collect();
        // Ends: geometric, except pair members share the radius ends.
        let mut ends: Vec<[usize; 2]> = Vec::with_capacity(n);
        for a in 0..n {
            let (t1, k1) = slots[a][0];
            ends.push(sorted_pair(verts[t1][k1], verts[t1][(k1 + 1) % 3]));
        }
        for pair in &file.selffolded {
            let inner = arc_of(&pair[0])?;
            let outer = arc_of(&pair[1])?;
            ends[outer] = ends[inner];
        }
        let mut tags = vec![[Tag::Plain, Tag::Plain]; n];
        for (name, end) in &file.notched {
            let a = arc_of(name)?;
            if *end > 1 {
                return Err(Error::Parse(format!("end index {end} out of range")));
            }
            tags[a][*end as usize] = Tag::Notched;
        }
        TaggedTriangulation::new(file.arcs.clone(), tris, verts, n_punctures, ends, tags)
    }
}

fn sorted_pair(a: usize, b: usize) -> [usize; 2] {
    if a <= b {
        [a, b]
    } else {
        [b, a]
    }
}
