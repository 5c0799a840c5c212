//! Signed basis monomials of an exterior algebra, the Hodge star, and the
//! finite Frobenius objects they generate.
//!
//! Fix an oriented inner-product space of dimension `n` with orthonormal
//! basis `e₁, …, eₙ`. The unit-norm monomials `±e_S` for `S ⊆ {1, …, n}`
//! are closed under wedge (up to vanishing) and under the Hodge star, and
//! they are all this module ever manipulates — every computation is exact
//! sign bookkeeping, no floating point anywhere.
//!
//! The star convention is fixed by the shuffle-sign formula
//! `⋆e_S = sgn(S, Sᶜ) e_{Sᶜ}`, where `sgn(S, Sᶜ)` is the sign of the
//! permutation that lists sorted `S` and then sorted `Sᶜ`. The defining
//! identity `e_S ∧ ⋆e_S = ν` holds on the nose, and that identity — not any
//! orientation lore — is what the tests anchor to.
//!
//! A [`SubsetSpec`] is a finite candidate set `Y` of signed monomials; when
//! it contains the unit, is closed under star, and is closed under nonzero
//! wedges, [`SubsetSpec::build_frobenius`] produces the Frobenius object
//! with multiplication `{(λ, θ, φ) | λ ∧ θ ∧ ⋆φ = ν}` whose rotation
//! bijection is the star itself.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::frobenius::FrobeniusObject;
use crate::rel::{Bijection, FiniteSet};
use crate::simplicial::{AlphaSimplicial, TruncSimplicialSet2};
use crate::verdict::{Verdict, Violation};

/// Errors from monomial construction and sub-object conditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExteriorError {
    #[error("dimension {0} is out of range (1..=9 supported)")]
    DimensionOutOfRange(u8),
    #[error("basis index {index} is out of range for dimension {dim}")]
    IndexOutOfRange { index: u8, dim: u8 },
    #[error("duplicate basis index {0} in a monomial")]
    DuplicateIndex(u8),
    #[error("sign must be +1 or -1, got {0}")]
    BadSign(i8),
    #[error("monomials of different dimensions cannot mix ({0} vs {1})")]
    MixedDimensions(u8, u8),
    #[error("the unit monomial is missing from the candidate set")]
    MissingUnit,
    #[error("the candidate set is not closed under the star: `{0}` maps outside")]
    NotStarClosed(String),
    #[error("the candidate set is not closed under wedges: `{0}` ∧ `{1}` lands outside")]
    NotWedgeClosed(String, String),
    #[error("constructed object fails verification ({0}); this is a bug, not bad input")]
    InternalInvariant(Violation),
}

/// A signed basis monomial `±e_S` of an `n`-dimensional exterior algebra.
///
/// The empty subset is the unit `1`; the full subset is the volume form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SignedMonomial {
    negative: bool,
    subset: Vec<u8>,
    dim: u8,
}

impl SignedMonomial {
    /// Builds `sign · e_subset` in dimension `dim`; indices are 1-based.
    pub fn new(sign: i8, subset: &[u8], dim: u8) -> Result<Self, ExteriorError> {
        if dim == 0 || dim > 9 {
            return Err(ExteriorError::DimensionOutOfRange(dim));
        }
        let negative = match sign {
            1 => false,
            -1 => true,
            other => return Err(ExteriorError::BadSign(other)),
        };
        let mut subset = subset.to_vec();
        subset.sort_unstable();
        for window in subset.windows(2) {
            if window[0] == window[1] {
                return Err(ExteriorError::DuplicateIndex(window[0]));
            }
        }
        for &i in &subset {
            if i == 0 || i > dim {
                return Err(ExteriorError::IndexOutOfRange { index: i, dim });
            }
        }
        Ok(SignedMonomial {
            negative,
            subset,
            dim,
        })
    }

    /// The unit monomial `1 = e_∅`.
    pub fn one(dim: u8) -> Self {
        SignedMonomial::new(1, &[], dim).expect("the empty subset is always valid")
    }

    /// The volume form `ν = e_{1…n}`.
    pub fn volume(dim: u8) -> Self {
        let full: Vec<u8> = (1..=dim).collect();
        SignedMonomial::new(1, &full, dim).expect("the full subset is always valid")
    }

    /// The basis vector `e_i`.
    pub fn basis(i: u8, dim: u8) -> Result<Self, ExteriorError> {
        SignedMonomial::new(1, &[i], dim)
    }

    pub fn dim(&self) -> u8 {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.subset.len()
    }

    pub fn sign(&self) -> i8 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    pub fn subset(&self) -> &[u8] {
        &self.subset
    }

    pub fn negated(&self) -> SignedMonomial {
        SignedMonomial {
            negative: !self.negative,
            subset: self.subset.clone(),
            dim: self.dim,
        }
    }

    /// The display label: `1`, `-1`, `e1`, `-e12`, …
    pub fn label(&self) -> String {
        let sign = if self.negative { "-" } else { "" };
        if self.subset.is_empty() {
            return format!("{sign}1");
        }
        let digits: String = self.subset.iter().map(|i| i.to_string()).collect();
        format!("{sign}e{digits}")
    }

    /// The wedge product, or `None` when the subsets overlap and the
    /// product vanishes.
    ///
    /// The sign is the product of the input signs times the shuffle sign of
    /// merging the two sorted subsets.
    pub fn wedge(&self, other: &SignedMonomial) -> Result<Option<SignedMonomial>, ExteriorError> {
        if self.dim != other.dim {
            return Err(ExteriorError::MixedDimensions(self.dim, other.dim));
        }
        let mut inversions = 0usize;
        for &i in &self.subset {
            for &j in &other.subset {
                if i == j {
                    return Ok(None);
                }
                if i > j {
                    inversions += 1;
                }
            }
        }
        let mut subset = self.subset.clone();
        subset.extend_from_slice(&other.subset);
        subset.sort_unstable();
        Ok(Some(SignedMonomial {
            negative: self.negative ^ other.negative ^ (inversions % 2 == 1),
            subset,
            dim: self.dim,
        }))
    }

    /// The Hodge star `⋆(±e_S) = ± sgn(S, Sᶜ) e_{Sᶜ}`.
    pub fn hodge(&self) -> SignedMonomial {
        let complement: Vec<u8> = (1..=self.dim).filter(|i| !self.subset.contains(i)).collect();
        let mut inversions = 0usize;
        for &i in &self.subset {
            for &j in &complement {
                if i > j {
                    inversions += 1;
                }
            }
        }
        SignedMonomial {
            negative: self.negative ^ (inversions % 2 == 1),
            subset: complement,
            dim: self.dim,
        }
    }

    /// Every signed monomial of the given dimension, both signs.
    pub fn all(dim: u8) -> Vec<SignedMonomial> {
        let mut out = Vec::new();
        for mask in 0u16..(1 << dim) {
            let subset: Vec<u8> = (1..=dim).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            for sign in [1, -1] {
                out.push(SignedMonomial::new(sign, &subset, dim).unwrap());
            }
        }
        out
    }
}

impl fmt::Display for SignedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// A finite candidate set of signed monomials, all of one dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetSpec {
    dim: u8,
    members: BTreeSet<SignedMonomial>,
}

impl SubsetSpec {
    pub fn new(
        dim: u8,
        members: impl IntoIterator<Item = SignedMonomial>,
    ) -> Result<Self, ExteriorError> {
        if dim == 0 || dim > 9 {
            return Err(ExteriorError::DimensionOutOfRange(dim));
        }
        let members: BTreeSet<SignedMonomial> = members.into_iter().collect();
        for m in &members {
            if m.dim() != dim {
                return Err(ExteriorError::MixedDimensions(dim, m.dim()));
            }
        }
        Ok(SubsetSpec { dim, members })
    }

    /// The two-element set `{1, ν}`, a sub-object in any dimension.
    pub fn one_volume(dim: u8) -> Result<SubsetSpec, ExteriorError> {
        SubsetSpec::new(
            dim,
            [SignedMonomial::one(dim), SignedMonomial::volume(dim)],
        )
    }

    /// The eight-element set `{±1, ±a, ±b, ±ν}` over a two-dimensional
    /// space, where `a` and `b` are the two basis covectors. This is the
    /// cohomology model of the torus.
    pub fn torus() -> SubsetSpec {
        let a = SignedMonomial::basis(1, 2).unwrap();
        let b = SignedMonomial::basis(2, 2).unwrap();
        let one = SignedMonomial::one(2);
        let vol = SignedMonomial::volume(2);
        let members = [one.clone(), a.clone(), b.clone(), vol.clone()]
            .into_iter()
            .flat_map(|m| [m.clone(), m.negated()]);
        SubsetSpec::new(2, members).expect("the torus set is well-formed")
    }

    pub fn dim(&self) -> u8 {
        self.dim
    }

    pub fn members(&self) -> impl Iterator<Item = &SignedMonomial> {
        self.members.iter()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Checks the three sub-object conditions: the unit belongs to the set,
    /// the set is closed under the star, and it is closed under nonzero
    /// wedges. Each violation is reported separately.
    pub fn validate(&self) -> Result<(), ExteriorError> {
        if !self.members.contains(&SignedMonomial::one(self.dim)) {
            return Err(ExteriorError::MissingUnit);
        }
        for m in &self.members {
            if !self.members.contains(&m.hodge()) {
                return Err(ExteriorError::NotStarClosed(m.label()));
            }
        }
        for a in &self.members {
            for b in &self.members {
                if let Some(w) = a.wedge(b).expect("one dimension throughout") {
                    if !self.members.contains(&w) {
                        return Err(ExteriorError::NotWedgeClosed(a.label(), b.label()));
                    }
                }
            }
        }
        Ok(())
    }

    fn carrier(&self) -> (Arc<FiniteSet>, BTreeMap<SignedMonomial, u16>) {
        let carrier = Arc::new(
            FiniteSet::new(self.members.iter().map(SignedMonomial::label))
                .expect("distinct monomials have distinct labels"),
        );
        let index = self
            .members
            .iter()
            .map(|m| {
                let i = carrier.index_of(&m.label()).unwrap() as u16;
                (m.clone(), i)
            })
            .collect();
        (carrier, index)
    }

    /// The multiplication triples `(λ, θ, φ)` with `λ ∧ θ ∧ ⋆φ = ν`,
    /// computed literally from the defining equation.
    fn multiplication(&self) -> Vec<(&SignedMonomial, &SignedMonomial, &SignedMonomial)> {
        let volume = SignedMonomial::volume(self.dim);
        let mut out = Vec::new();
        for lambda in &self.members {
            for theta in &self.members {
                let Some(front) = lambda.wedge(theta).expect("one dimension") else {
                    continue;
                };
                for phi in &self.members {
                    if let Some(total) = front.wedge(&phi.hodge()).expect("one dimension") {
                        if total == volume {
                            out.push((lambda, theta, phi));
                        }
                    }
                }
            }
        }
        out
    }

    /// Builds the Frobenius object on this set: multiplication from the
    /// volume equation, unit `{1}`, counit `{ν}`, comultiplication through
    /// the star. The result is re-verified.
    pub fn build_frobenius(&self) -> Result<FrobeniusObject, ExteriorError> {
        self.validate()?;
        let (carrier, index) = self.carrier();
        let mut mu = BTreeSet::new();
        let mut delta = BTreeSet::new();
        for (lambda, theta, phi) in self.multiplication() {
            let (x, y, z) = (index[lambda], index[theta], index[phi]);
            mu.insert([x, y, z]);
            delta.insert([y, index[&lambda.hodge()], z]);
        }
        let eta: BTreeSet<u16> = [index[&SignedMonomial::one(self.dim)]].into();
        let epsilon: BTreeSet<u16> = [index[&SignedMonomial::volume(self.dim)]].into();
        let f = FrobeniusObject::from_indices(carrier, eta, epsilon, mu, delta);
        match f.verify() {
            Verdict::Pass => Ok(f),
            Verdict::Fail(violation) => Err(ExteriorError::InternalInvariant(violation)),
        }
    }

    /// The simplicial structure built directly: one vertex, the members as
    /// edges, the multiplication triples as triangles, star as the rotation
    /// automorphism.
    ///
    /// This is an independent route to the same structure as
    /// `frob_to_simplicial(build_frobenius(..))`; the two agree up to
    /// triangle renaming.
    pub fn alpha_simplicial(&self) -> Result<AlphaSimplicial, ExteriorError> {
        self.validate()?;
        let (carrier, index) = self.carrier();
        let one = index[&SignedMonomial::one(self.dim)];

        let triples: Vec<[u16; 3]> = self
            .multiplication()
            .into_iter()
            .map(|(l, t, p)| [index[l], index[t], index[p]])
            .collect();
        let ids: Vec<String> = triples
            .iter()
            .map(|t| {
                format!(
                    "({},{},{})",
                    carrier.label(t[0] as usize),
                    carrier.label(t[1] as usize),
                    carrier.label(t[2] as usize)
                )
            })
            .collect();
        let x2 = Arc::new(FiniteSet::new(ids.clone()).expect("triple labels are distinct"));
        let triple_of: BTreeMap<&str, [u16; 3]> = ids
            .iter()
            .zip(&triples)
            .map(|(id, t)| (id.as_str(), *t))
            .collect();
        let triangle_of: BTreeMap<[u16; 3], u16> = x2
            .iter()
            .enumerate()
            .map(|(pos, id)| (triple_of[id], pos as u16))
            .collect();

        let mut d20 = Vec::with_capacity(x2.len());
        let mut d21 = Vec::with_capacity(x2.len());
        let mut d22 = Vec::with_capacity(x2.len());
        for id in x2.iter() {
            let [x, y, z] = triple_of[id];
            d22.push(x);
            d20.push(y);
            d21.push(z);
        }
        let n = carrier.len() as u16;
        let mut s10 = Vec::with_capacity(n as usize);
        let mut s11 = Vec::with_capacity(n as usize);
        for x in 0..n {
            s10.push(triangle_of[&[one, x, x]]);
            s11.push(triangle_of[&[x, one, x]]);
        }
        let x0 = Arc::new(FiniteSet::new([carrier.label(one as usize)]).unwrap());
        let base = TruncSimplicialSet2::from_tables(
            x0,
            Arc::clone(&carrier),
            x2,
            vec![0; n as usize],
            vec![0; n as usize],
            d20,
            d21,
            d22,
            vec![one],
            s10,
            s11,
        );
        let star_table: Vec<u16> = (0..n)
            .map(|i| {
                let m = self
                    .members
                    .iter()
                    .find(|m| index[*m] == i)
                    .expect("index covers the members");
                index[&m.hodge()]
            })
            .collect();
        let alpha = Bijection::from_table(&carrier, star_table);
        Ok(AlphaSimplicial::new(base, alpha).expect("star lives on the carrier"))
    }

    /// For every multiplication triple `(λ, θ, φ)`: the wedge `λ ∧ θ` is a
    /// unit monomial and equals `φ`.
    pub fn check_lemma_ext(&self) -> Verdict {
        for (lambda, theta, phi) in self.multiplication() {
            let wedge = lambda.wedge(theta).expect("one dimension");
            if wedge.as_ref() != Some(phi) {
                return Verdict::fail(
                    "products are wedges",
                    vec![lambda.label(), theta.label(), phi.label()],
                );
            }
        }
        Verdict::Pass
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::one_volume_pair;

    fn m(sign: i8, subset: &[u8], dim: u8) -> SignedMonomial {
        SignedMonomial::new(sign, subset, dim).unwrap()
    }

    #[test]
    fn wedge_signs() {
        let e1 = m(1, &[1], 2);
        let e2 = m(1, &[2], 2);
        assert_eq!(e1.wedge(&e2).unwrap(), Some(m(1, &[1, 2], 2)));
        assert_eq!(e2.wedge(&e1).unwrap(), Some(m(-1, &[1, 2], 2)));
        assert_eq!(e1.wedge(&e1).unwrap(), None);
    }

    #[test]
    fn hodge_on_the_plane() {
        // ⋆1 = ν und ⋆ν = 1 in any dimension; in the plane ⋆e₁ = e₂ and
        // ⋆e₂ = -e₁, so ⋆⋆ = -1 in degree one.
        for dim in 1..=5 {
            assert_eq!(SignedMonomial::one(dim).hodge(), SignedMonomial::volume(dim));
            assert_eq!(SignedMonomial::volume(dim).hodge(), SignedMonomial::one(dim));
        }
        let e1 = m(1, &[1], 2);
        let e2 = m(1, &[2], 2);
        assert_eq!(e1.hodge(), e2);
        assert_eq!(e2.hodge(), m(-1, &[1], 2));
        assert_eq!(e1.hodge().hodge(), m(-1, &[1], 2));
        // The defining identity, checked directly for the convention.
        assert_eq!(
            e1.wedge(&e1.hodge()).unwrap(),
            Some(SignedMonomial::volume(2))
        );
    }

    #[test]
    fn hodge_defining_identity_everywhere() {
        // e_S ∧ ⋆e_S = ν for every monomial in dimensions up to five.
        for dim in 1..=5 {
            for mono in SignedMonomial::all(dim) {
                let positive = if mono.sign() == 1 {
                    mono.clone()
                } else {
                    mono.negated()
                };
                assert_eq!(
                    positive.wedge(&positive.hodge()).unwrap(),
                    Some(SignedMonomial::volume(dim)),
                    "defining identity at {positive}"
                );
                // Double star is (-1)^{k(n-k)}.
                let k = mono.degree();
                let n = dim as usize;
                let expect = if (k * (n - k)).is_multiple_of(2) {
                    mono.clone()
                } else {
                    mono.negated()
                };
                assert_eq!(mono.hodge().hodge(), expect, "double star at {mono}");
            }
        }
    }

    #[test]
    fn degrees_add_along_multiplication() {
        let spec = SubsetSpec::torus();
        for (l, t, p) in spec.multiplication() {
            assert_eq!(l.degree() + t.degree(), p.degree());
        }
    }

    #[test]
    fn one_volume_matches_the_known_tables() {
        let spec = SubsetSpec::one_volume(3).unwrap();
        let f = spec.build_frobenius().unwrap();
        assert!(f.verify().passes());
        // Labels: 1 and e123; the tables are the two-element ones.
        let expected = one_volume_pair();
        let witness = f.is_isomorphic(&expected).unwrap();
        assert_eq!(
            witness,
            vec![
                ("1".to_owned(), "1".to_owned()),
                ("e123".to_owned(), "v".to_owned())
            ]
        );
        assert!(f.is_commutative());
        assert!(spec.check_lemma_ext().passes());
    }

    #[test]
    fn missing_volume_is_not_star_closed() {
        let spec = SubsetSpec::new(2, [SignedMonomial::one(2)]).unwrap();
        assert_eq!(spec.validate(), Err(ExteriorError::NotStarClosed("1".to_owned())));
        assert!(spec.build_frobenius().is_err());
    }

    #[test]
    fn torus_object_shape() {
        let spec = SubsetSpec::torus();
        let f = spec.build_frobenius().unwrap();
        assert!(f.verify().passes());
        assert_eq!(f.carrier().len(), 8);
        assert_eq!(f.eta_labels(), vec!["1"]);
        assert_eq!(f.epsilon_labels(), vec!["e12"]);
        assert!(!f.is_commutative());
        assert!(!f.is_dagger());
        assert!(!f.is_special());
        assert!(spec.check_lemma_ext().passes());
        // (a, b, ν) is a product triple since a ∧ b = ν; its partner in the
        // comultiplication is (b, ⋆a, ν) = (b, b, ν).
        assert!(f.mu_contains(["e1", "e2", "e12"]));
        assert!(f.delta_contains(["e2", "e2", "e12"]));
    }

    #[test]
    fn torus_nakayama_is_nontrivial_of_order_two() {
        let f = SubsetSpec::torus().build_frobenius().unwrap();
        let derived = f.extract_alpha().unwrap();
        let hat = derived.alpha_hat();
        // α̂ = ⋆: on the two basis covectors the square is the sign flip.
        assert_eq!(hat.apply("e1"), "e2");
        assert_eq!(hat.apply("e2"), "-e1");
        assert_eq!(derived.nakayama().apply("e1"), "-e1");
        assert_eq!(derived.nakayama().apply("e2"), "-e2");
        assert!(!derived.nakayama().is_identity());
        assert!(derived.nakayama().then(derived.nakayama()).is_identity());
    }

    #[test]
    fn direct_simplicial_route_agrees() {
        for spec in [SubsetSpec::one_volume(2).unwrap(), SubsetSpec::torus()] {
            let direct = spec.alpha_simplicial().unwrap();
            assert!(direct.base().validate().passes());
            assert!(direct.base().check_p1().passes());
            assert!(direct.base().check_p2().passes());
            assert!(direct.check_p3().passes());
            assert!(direct.check_delta2_invariance().passes());
            let via_object =
                crate::correspondence::frob_to_simplicial(&spec.build_frobenius().unwrap())
                    .unwrap();
            assert!(direct.base().congruent(via_object.base()).is_some());
            assert_eq!(direct.alpha_hat(), via_object.alpha_hat());
        }
    }
}
