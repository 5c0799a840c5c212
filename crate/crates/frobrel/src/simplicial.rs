//! 2-truncated simplicial sets with explicit face and degeneracy tables.
//!
//! A [`TruncSimplicialSet2`] stores three levels of simplices and all eight
//! structure maps as total lookup tables; [`validate`](TruncSimplicialSet2::validate)
//! checks every instance of the simplicial identities that exists at
//! truncation level 2. Higher simplices are never stored: the 3-simplices of
//! the 2-coskeletal extension are materialized on demand as boundary-
//! compatible quadruples.
//!
//! Throughout the crate, 2-simplices are read off through the *reordered*
//! boundary map `ζ ↦ (d₂ζ, d₀ζ, d₁ζ)`. With that ordering the 2-simplices
//! of the structures built from Frobenius objects embed into `X₁³` without
//! any permutation, which keeps every rotation and comparison literal.
//!
//! An [`AlphaSimplicial`] pairs a validated structure with an automorphism
//! `α̂` of the 1-simplices; the three characterizing properties checked by
//! [`check_p1`](TruncSimplicialSet2::check_p1),
//! [`check_p2`](TruncSimplicialSet2::check_p2), and
//! [`AlphaSimplicial::check_p3`] are exactly the hypotheses under which such
//! a structure determines a Frobenius object.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use thiserror::Error;

use crate::rel::{Bijection, BijectionError, FiniteSet};
use crate::verdict::Verdict;

/// Errors from assembling simplicial data out of raw tables.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimplicialError {
    #[error("map {map} is missing an entry for `{label}`")]
    MissingEntry { map: &'static str, label: String },
    #[error("map {map} has an entry for `{label}`, which is not in its domain")]
    ExtraEntry { map: &'static str, label: String },
    #[error("map {map} sends `{label}` to `{image}`, which is not in its codomain")]
    BadImage {
        map: &'static str,
        label: String,
        image: String,
    },
    #[error("`{0}` is not a 2-simplex")]
    UnknownSimplex(String),
    #[error("the automorphism is not a bijection of the 1-simplices: {0}")]
    BadAlpha(#[from] BijectionError),
}

/// The eight structure maps of a 2-truncated simplicial set, as label maps.
///
/// This is the exchange format between constructors, serialization, and the
/// command line; `d10` is the 0th face `X₁ → X₀`, `s11` the 1st degeneracy
/// `X₁ → X₂`, and so on.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LevelMaps {
    pub d10: BTreeMap<String, String>,
    pub d11: BTreeMap<String, String>,
    pub d20: BTreeMap<String, String>,
    pub d21: BTreeMap<String, String>,
    pub d22: BTreeMap<String, String>,
    pub s00: BTreeMap<String, String>,
    pub s10: BTreeMap<String, String>,
    pub s11: BTreeMap<String, String>,
}

/// A 2-truncated simplicial set: levels `X₀`, `X₁`, `X₂` and total face and
/// degeneracy tables between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSimplicialSet2 {
    x0: Arc<FiniteSet>,
    x1: Arc<FiniteSet>,
    x2: Arc<FiniteSet>,
    d10: Vec<u16>,
    d11: Vec<u16>,
    d20: Vec<u16>,
    d21: Vec<u16>,
    d22: Vec<u16>,
    s00: Vec<u16>,
    s10: Vec<u16>,
    s11: Vec<u16>,
}

fn resolve_table(
    name: &'static str,
    map: &BTreeMap<String, String>,
    domain: &FiniteSet,
    codomain: &FiniteSet,
) -> Result<Vec<u16>, SimplicialError> {
    for key in map.keys() {
        if !domain.contains(key) {
            return Err(SimplicialError::ExtraEntry {
                map: name,
                label: key.clone(),
            });
        }
    }
    domain
        .iter()
        .map(|label| {
            let image = map.get(label).ok_or_else(|| SimplicialError::MissingEntry {
                map: name,
                label: label.to_owned(),
            })?;
            codomain
                .index_of(image)
                .map(|i| i as u16)
                .ok_or_else(|| SimplicialError::BadImage {
                    map: name,
                    label: label.to_owned(),
                    image: image.clone(),
                })
        })
        .collect()
}

impl TruncSimplicialSet2 {
    /// Builds a structure from label tables, checking that every map is
    /// total on its level and lands in the right level.
    pub fn new(
        x0: FiniteSet,
        x1: FiniteSet,
        x2: FiniteSet,
        maps: &LevelMaps,
    ) -> Result<Self, SimplicialError> {
        let x0 = Arc::new(x0);
        let x1 = Arc::new(x1);
        let x2 = Arc::new(x2);
        Ok(TruncSimplicialSet2 {
            d10: resolve_table("d10", &maps.d10, &x1, &x0)?,
            d11: resolve_table("d11", &maps.d11, &x1, &x0)?,
            d20: resolve_table("d20", &maps.d20, &x2, &x1)?,
            d21: resolve_table("d21", &maps.d21, &x2, &x1)?,
            d22: resolve_table("d22", &maps.d22, &x2, &x1)?,
            s00: resolve_table("s00", &maps.s00, &x0, &x1)?,
            s10: resolve_table("s10", &maps.s10, &x1, &x2)?,
            s11: resolve_table("s11", &maps.s11, &x1, &x2)?,
            x0,
            x1,
            x2,
        })
    }

    #[allow(clippy::too_many_arguments)]
    pub(crate) fn from_tables(
        x0: Arc<FiniteSet>,
        x1: Arc<FiniteSet>,
        x2: Arc<FiniteSet>,
        d10: Vec<u16>,
        d11: Vec<u16>,
        d20: Vec<u16>,
        d21: Vec<u16>,
        d22: Vec<u16>,
        s00: Vec<u16>,
        s10: Vec<u16>,
        s11: Vec<u16>,
    ) -> Self {
        debug_assert_eq!(d10.len(), x1.len());
        debug_assert_eq!(d11.len(), x1.len());
        debug_assert_eq!(d20.len(), x2.len());
        debug_assert_eq!(d21.len(), x2.len());
        debug_assert_eq!(d22.len(), x2.len());
        debug_assert_eq!(s00.len(), x0.len());
        debug_assert_eq!(s10.len(), x1.len());
        debug_assert_eq!(s11.len(), x1.len());
        TruncSimplicialSet2 {
            x0,
            x1,
            x2,
            d10,
            d11,
            d20,
            d21,
            d22,
            s00,
            s10,
            s11,
        }
    }

    pub fn x0(&self) -> &Arc<FiniteSet> {
        &self.x0
    }

    pub fn x1(&self) -> &Arc<FiniteSet> {
        &self.x1
    }

    pub fn x2(&self) -> &Arc<FiniteSet> {
        &self.x2
    }

    /// The structure maps as label tables, for serialization and display.
    pub fn level_maps(&self) -> LevelMaps {
        let table = |domain: &FiniteSet, codomain: &FiniteSet, map: &[u16]| {
            domain
                .iter()
                .zip(map)
                .map(|(label, &i)| (label.to_owned(), codomain.label(i as usize).to_owned()))
                .collect()
        };
        LevelMaps {
            d10: table(&self.x1, &self.x0, &self.d10),
            d11: table(&self.x1, &self.x0, &self.d11),
            d20: table(&self.x2, &self.x1, &self.d20),
            d21: table(&self.x2, &self.x1, &self.d21),
            d22: table(&self.x2, &self.x1, &self.d22),
            s00: table(&self.x0, &self.x1, &self.s00),
            s10: table(&self.x1, &self.x2, &self.s10),
            s11: table(&self.x1, &self.x2, &self.s11),
        }
    }

    pub(crate) fn s00_idx(&self, u: u16) -> u16 {
        self.s00[u as usize]
    }

    /// Checks every instance of the simplicial identities that exists at
    /// truncation level 2.
    pub fn validate(&self) -> Verdict {
        let x0_labels: Vec<&str> = self.x0.iter().collect();
        let x1_labels: Vec<&str> = self.x1.iter().collect();
        let x2_labels: Vec<&str> = self.x2.iter().collect();

        // Faces of faces: d_i ∘ d_j = d_{j-1} ∘ d_i for i < j.
        type FaceCase<'a> = (&'a str, &'a [u16], &'a [u16], &'a [u16], &'a [u16]);
        let face_face: [FaceCase; 3] = [
            ("faces of faces (0,1)", &self.d10, &self.d21, &self.d10, &self.d20),
            ("faces of faces (0,2)", &self.d10, &self.d22, &self.d11, &self.d20),
            ("faces of faces (1,2)", &self.d11, &self.d22, &self.d11, &self.d21),
        ];
        for (law, outer_l, inner_l, outer_r, inner_r) in face_face {
            for (zeta, label) in x2_labels.iter().enumerate() {
                if outer_l[inner_l[zeta] as usize] != outer_r[inner_r[zeta] as usize] {
                    return Verdict::fail(law, vec![(*label).to_owned()]);
                }
            }
        }

        // Degeneracies of degeneracies: s₀¹ ∘ s₀⁰ = s₁¹ ∘ s₀⁰.
        for (u, label) in x0_labels.iter().enumerate() {
            let down = self.s00[u] as usize;
            if self.s10[down] != self.s11[down] {
                return Verdict::fail("degeneracies of degeneracies", vec![(*label).to_owned()]);
            }
        }

        // Faces of degeneracies at level 0: both faces of s₀⁰(u) are u.
        for (u, label) in x0_labels.iter().enumerate() {
            let down = self.s00[u] as usize;
            if self.d10[down] != u as u16 || self.d11[down] != u as u16 {
                return Verdict::fail("faces of degeneracies (level 0)", vec![(*label).to_owned()]);
            }
        }

        // Faces of degeneracies at level 1: six equations per 1-simplex.
        for (x, label) in x1_labels.iter().enumerate() {
            let up0 = self.s10[x] as usize;
            let up1 = self.s11[x] as usize;
            let ok = self.d20[up0] == x as u16
                && self.d21[up0] == x as u16
                && self.d22[up0] == self.s00[self.d11[x] as usize]
                && self.d20[up1] == self.s00[self.d10[x] as usize]
                && self.d21[up1] == x as u16
                && self.d22[up1] == x as u16;
            if !ok {
                return Verdict::fail("faces of degeneracies (level 1)", vec![(*label).to_owned()]);
            }
        }
        Verdict::Pass
    }

    /// The reordered boundary of a 2-simplex: `(d₂ζ, d₀ζ, d₁ζ)`.
    pub fn boundary2(&self, simplex: &str) -> Result<[&str; 3], SimplicialError> {
        let i = self
            .x2
            .index_of(simplex)
            .ok_or_else(|| SimplicialError::UnknownSimplex(simplex.to_owned()))?;
        let [a, b, c] = self.boundary2_idx(i as u16);
        Ok([
            self.x1.label(a as usize),
            self.x1.label(b as usize),
            self.x1.label(c as usize),
        ])
    }

    pub(crate) fn boundary2_idx(&self, zeta: u16) -> [u16; 3] {
        let z = zeta as usize;
        [self.d22[z], self.d20[z], self.d21[z]]
    }

    pub(crate) fn boundary2_image(&self) -> BTreeSet<[u16; 3]> {
        (0..self.x2.len() as u16).map(|z| self.boundary2_idx(z)).collect()
    }

    /// The boundaries of all 2-simplices, as label triples.
    pub fn boundary2_image_labels(&self) -> BTreeSet<[String; 3]> {
        self.boundary2_image()
            .into_iter()
            .map(|t| t.map(|i| self.x1.label(i as usize).to_owned()))
            .collect()
    }

    /// Boundary-compatible triples of 1-simplices, in the reordered
    /// convention: the outlines of would-be 2-simplices.
    pub(crate) fn delta2_indices(&self) -> BTreeSet<[u16; 3]> {
        let n = self.x1.len() as u16;
        let mut out = BTreeSet::new();
        for a in 0..n {
            for b in 0..n {
                if self.d10[a as usize] != self.d11[b as usize] {
                    continue;
                }
                for c in 0..n {
                    if self.d10[b as usize] == self.d10[c as usize]
                        && self.d11[a as usize] == self.d11[c as usize]
                    {
                        out.insert([a, b, c]);
                    }
                }
            }
        }
        out
    }

    /// The outlines of 2-simplices, as label triples.
    pub fn compatible_triples(&self) -> Vec<[&str; 3]> {
        self.delta2_indices()
            .into_iter()
            .map(|t| t.map(|i| self.x1.label(i as usize)))
            .collect()
    }

    /// Boundary-compatible quadruples of 2-simplices: the 3-simplices of the
    /// 2-coskeletal extension.
    pub(crate) fn delta3_indices(&self) -> BTreeSet<[u16; 4]> {
        let m = self.x2.len() as u16;
        let mut out = BTreeSet::new();
        for z0 in 0..m {
            for z1 in 0..m {
                if self.d20[z1 as usize] != self.d20[z0 as usize] {
                    continue;
                }
                for z2 in 0..m {
                    if self.d20[z2 as usize] != self.d21[z0 as usize]
                        || self.d21[z2 as usize] != self.d21[z1 as usize]
                    {
                        continue;
                    }
                    for z3 in 0..m {
                        if self.d20[z3 as usize] == self.d22[z0 as usize]
                            && self.d21[z3 as usize] == self.d22[z1 as usize]
                            && self.d22[z3 as usize] == self.d22[z2 as usize]
                        {
                            out.insert([z0, z1, z2, z3]);
                        }
                    }
                }
            }
        }
        out
    }

    /// The 3-simplices of the 2-coskeletal extension, as label quadruples.
    pub fn compatible_quadruples(&self) -> Vec<[&str; 4]> {
        self.delta3_indices()
            .into_iter()
            .map(|t| t.map(|i| self.x2.label(i as usize)))
            .collect()
    }

    fn degenerate_faces(&self) -> BTreeSet<u16> {
        self.s00.iter().copied().collect()
    }

    /// First characterizing property: the boundary map is injective on
    /// 2-simplices, and a degenerate outer face forces the other two faces
    /// to agree.
    pub fn check_p1(&self) -> Verdict {
        let mut seen: BTreeMap<[u16; 3], u16> = BTreeMap::new();
        for zeta in 0..self.x2.len() as u16 {
            if let Some(&prev) = seen.get(&self.boundary2_idx(zeta)) {
                return Verdict::fail(
                    "boundary injectivity",
                    vec![
                        self.x2.label(prev as usize).to_owned(),
                        self.x2.label(zeta as usize).to_owned(),
                    ],
                );
            }
            seen.insert(self.boundary2_idx(zeta), zeta);
        }
        let degenerate = self.degenerate_faces();
        for zeta in 0..self.x2.len() {
            if degenerate.contains(&self.d20[zeta]) && self.d22[zeta] != self.d21[zeta] {
                return Verdict::fail(
                    "degenerate face implication (face 0)",
                    vec![self.x2.label(zeta).to_owned()],
                );
            }
            if degenerate.contains(&self.d22[zeta]) && self.d20[zeta] != self.d21[zeta] {
                return Verdict::fail(
                    "degenerate face implication (face 2)",
                    vec![self.x2.label(zeta).to_owned()],
                );
            }
        }
        Verdict::Pass
    }

    /// Second characterizing property: every compatible pair of 2-simplices
    /// in positions 0/2 (and 1/3) of a 3-simplex outline extends to a full
    /// 3-simplex.
    pub fn check_p2(&self) -> Verdict {
        let m = self.x2.len();
        // All (d₀, d₁, d₂) face triples present, for existence lookups.
        let face_triples: BTreeSet<[u16; 3]> = (0..m)
            .map(|z| [self.d20[z], self.d21[z], self.d22[z]])
            .collect();
        let mut by_faces01: BTreeMap<(u16, u16), Vec<u16>> = BTreeMap::new();
        let mut by_faces02: BTreeMap<(u16, u16), Vec<u16>> = BTreeMap::new();
        for z in 0..m {
            by_faces01
                .entry((self.d20[z], self.d21[z]))
                .or_default()
                .push(self.d22[z]);
            by_faces02
                .entry((self.d20[z], self.d22[z]))
                .or_default()
                .push(self.d21[z]);
        }

        for zeta2 in 0..m {
            for zeta0 in 0..m {
                if self.d20[zeta2] != self.d21[zeta0] {
                    continue;
                }
                // Need γ₁ with faces (d₀ζ₀, d₁ζ₂, w) and γ₃ with faces
                // (d₂ζ₀, w, d₂ζ₂) for a shared middle edge w.
                let gamma1 = by_faces01
                    .get(&(self.d20[zeta0], self.d21[zeta2]))
                    .map(Vec::as_slice)
                    .unwrap_or(&[]);
                let lifted = gamma1.iter().any(|&w| {
                    face_triples.contains(&[self.d22[zeta0], w, self.d22[zeta2]])
                });
                if !lifted {
                    return Verdict::fail(
                        "associativity lift (positions 0 and 2)",
                        vec![
                            self.x2.label(zeta0).to_owned(),
                            self.x2.label(zeta2).to_owned(),
                        ],
                    );
                }
            }
        }

        for zeta3 in 0..m {
            for zeta1 in 0..m {
                if self.d21[zeta3] != self.d22[zeta1] {
                    continue;
                }
                // Need γ₀ with faces (d₀ζ₁, w, d₀ζ₃) and γ₂ with faces
                // (w, d₁ζ₁, d₂ζ₃) for a shared middle edge w.
                let gamma0 = by_faces02
                    .get(&(self.d20[zeta1], self.d20[zeta3]))
                    .map(Vec::as_slice)
                    .unwrap_or(&[]);
                let lifted = gamma0.iter().any(|&w| {
                    face_triples.contains(&[w, self.d21[zeta1], self.d22[zeta3]])
                });
                if !lifted {
                    return Verdict::fail(
                        "associativity lift (positions 1 and 3)",
                        vec![
                            self.x2.label(zeta1).to_owned(),
                            self.x2.label(zeta3).to_owned(),
                        ],
                    );
                }
            }
        }
        Verdict::Pass
    }

    /// Indices of face and degeneracy maps reversed at every level.
    pub fn opposite(&self) -> TruncSimplicialSet2 {
        TruncSimplicialSet2 {
            x0: Arc::clone(&self.x0),
            x1: Arc::clone(&self.x1),
            x2: Arc::clone(&self.x2),
            d10: self.d11.clone(),
            d11: self.d10.clone(),
            d20: self.d22.clone(),
            d21: self.d21.clone(),
            d22: self.d20.clone(),
            s00: self.s00.clone(),
            s10: self.s11.clone(),
            s11: self.s10.clone(),
        }
    }

    /// Matches two structures that share their 1-simplices, up to renaming
    /// of 0- and 2-simplices.
    ///
    /// 0-simplices are matched through their degeneracy images and
    /// 2-simplices through their boundaries, so the matching is unique when
    /// it exists; all remaining tables must commute with it.
    pub fn congruent(&self, other: &TruncSimplicialSet2) -> Option<SimplicialCongruence> {
        if self.x1 != other.x1 {
            return None;
        }
        // Match 0-simplices through the 1-simplex their degeneracy hits.
        let mut other_s00: BTreeMap<u16, u16> = BTreeMap::new();
        for u in 0..other.x0.len() as u16 {
            if other_s00.insert(other.s00[u as usize], u).is_some() {
                return None;
            }
        }
        if self.x0.len() != other.x0.len() {
            return None;
        }
        let mut x0_map = Vec::with_capacity(self.x0.len());
        for u in 0..self.x0.len() as u16 {
            x0_map.push(*other_s00.get(&self.s00[u as usize])?);
        }
        for x in 0..self.x1.len() {
            if x0_map[self.d10[x] as usize] != other.d10[x]
                || x0_map[self.d11[x] as usize] != other.d11[x]
            {
                return None;
            }
        }
        // Match 2-simplices through their boundaries.
        let mut other_boundaries: BTreeMap<[u16; 3], u16> = BTreeMap::new();
        for z in 0..other.x2.len() as u16 {
            if other_boundaries.insert(other.boundary2_idx(z), z).is_some() {
                return None;
            }
        }
        if self.x2.len() != other.x2.len() {
            return None;
        }
        let mut x2_map = Vec::with_capacity(self.x2.len());
        let mut seen = BTreeSet::new();
        for z in 0..self.x2.len() as u16 {
            let image = *other_boundaries.get(&self.boundary2_idx(z))?;
            if !seen.insert(image) {
                return None;
            }
            x2_map.push(image);
        }
        for x in 0..self.x1.len() {
            if x2_map[self.s10[x] as usize] != other.s10[x]
                || x2_map[self.s11[x] as usize] != other.s11[x]
            {
                return None;
            }
        }
        Some(SimplicialCongruence {
            x0_map: x0_map
                .iter()
                .enumerate()
                .map(|(u, &v)| {
                    (
                        self.x0.label(u).to_owned(),
                        other.x0.label(v as usize).to_owned(),
                    )
                })
                .collect(),
            x2_map: x2_map
                .iter()
                .enumerate()
                .map(|(z, &w)| {
                    (
                        self.x2.label(z).to_owned(),
                        other.x2.label(w as usize).to_owned(),
                    )
                })
                .collect(),
        })
    }
}

/// A matching between two structures on the same 1-simplices: how the
/// 0-simplices and the 2-simplices correspond.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialCongruence {
    pub x0_map: Vec<(String, String)>,
    pub x2_map: Vec<(String, String)>,
}

/// A 2-truncated simplicial set together with an automorphism of its
/// 1-simplices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaSimplicial {
    base: TruncSimplicialSet2,
    alpha_hat: Bijection,
}

impl AlphaSimplicial {
    pub fn new(
        base: TruncSimplicialSet2,
        alpha_hat: Bijection,
    ) -> Result<Self, SimplicialError> {
        if alpha_hat.carrier() != &base.x1 {
            return Err(SimplicialError::BadAlpha(BijectionError::NotTotal {
                label: base
                    .x1
                    .iter()
                    .find(|l| !alpha_hat.carrier().contains(l))
                    .unwrap_or_default()
                    .to_owned(),
            }));
        }
        Ok(AlphaSimplicial { base, alpha_hat })
    }

    /// Builds the automorphism from label pairs over the 1-simplices.
    pub fn from_pairs<I, S>(base: TruncSimplicialSet2, pairs: I) -> Result<Self, SimplicialError>
    where
        I: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let alpha_hat = Bijection::from_pairs(&base.x1, pairs)?;
        Ok(AlphaSimplicial { base, alpha_hat })
    }

    pub fn base(&self) -> &TruncSimplicialSet2 {
        &self.base
    }

    pub fn alpha_hat(&self) -> &Bijection {
        &self.alpha_hat
    }

    fn rotate(&self, triple: [u16; 3]) -> [u16; 3] {
        [
            triple[1],
            self.alpha_hat.apply_index(triple[2]),
            self.alpha_hat.apply_index(triple[0]),
        ]
    }

    fn rotation_closed(&self, law: &str, set: &BTreeSet<[u16; 3]>) -> Verdict {
        for &triple in set {
            if !set.contains(&self.rotate(triple)) {
                return Verdict::fail(
                    law,
                    triple
                        .iter()
                        .map(|&i| self.base.x1.label(i as usize).to_owned())
                        .collect(),
                );
            }
        }
        Verdict::Pass
    }

    /// Third characterizing property: the boundaries of 2-simplices are
    /// closed under the rotation `(x, y, z) ↦ (y, α̂(z), α̂(x))`.
    pub fn check_p3(&self) -> Verdict {
        self.rotation_closed("rotation invariance of 2-simplices", &self.base.boundary2_image())
    }

    /// The rotation also preserves the outlines: the middle term of the
    /// filtration of `X₁³` is invariant as well.
    pub fn check_delta2_invariance(&self) -> Verdict {
        self.rotation_closed(
            "rotation invariance of compatible triples",
            &self.base.delta2_indices(),
        )
    }
}
