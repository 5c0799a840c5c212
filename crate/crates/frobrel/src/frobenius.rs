//! Frobenius objects in the category of relations: the data type, the axiom
//! checker, and every piece of derived structure.
//!
//! A [`FrobeniusObject`] is a carrier set `X` together with four relations:
//! a unit `η ⊆ X`, a counit `ε ⊆ X`, a multiplication `μ ⊆ X³` read as
//! `((x, y), z)`, and a comultiplication `δ ⊆ X³` read as `(x, (y, z))`.
//! The axioms are the usual unit, counit, and Frobenius laws, checked here
//! as exact equalities of composite relations.
//!
//! Every verified object carries a rotation bijection `α̂` extracted from the
//! pairing `ε ∘ μ`, source and target maps into `η`, and a Nakayama
//! automorphism `α̂²`. Checks return a [`Verdict`] with the least violating
//! tuple; derived operations refuse to run on unverified input rather than
//! silently computing garbage.

use std::collections::BTreeSet;
use std::sync::Arc;

use thiserror::Error;

use crate::rel::{BijectionError, Bijection, FiniteSet, Relation};
use crate::verdict::{least_failure, relations_equal, Verdict, Violation};

/// Errors from assembling a Frobenius object out of raw tables.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrobeniusError {
    #[error("label `{0}` is not in the carrier")]
    UnknownLabel(String),
}

/// Errors from derived-structure extraction on bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DerivationError {
    #[error("object does not verify: {0}")]
    Unverified(Violation),
    #[error("snake identity fails: {0}")]
    Snake(Violation),
    #[error("the pairing is not the graph of a bijection: {0}")]
    Pairing(#[from] BijectionError),
    #[error("the copairing is not the reversed graph of the extracted bijection")]
    CopairingMismatch,
    #[error("`{element}` has {count} {role} unit candidates instead of exactly one")]
    UnitCandidates {
        element: String,
        role: &'static str,
        count: usize,
    },
    #[error("`{0}` is not an element of the carrier")]
    UnknownElement(String),
}

/// A carrier set with unit, counit, multiplication, and comultiplication
/// relations. Construction checks membership only; the axioms are checked by
/// [`FrobeniusObject::verify`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FrobeniusObject {
    carrier: Arc<FiniteSet>,
    eta: BTreeSet<u16>,
    epsilon: BTreeSet<u16>,
    mu: BTreeSet<[u16; 3]>,
    delta: BTreeSet<[u16; 3]>,
}

impl FrobeniusObject {
    /// Builds an object from label tables.
    ///
    /// `mu` rows are read as `((x, y), z)` and `delta` rows as `(x, (y, z))`.
    pub fn new<S, E1, E2, T1, T2>(
        carrier: FiniteSet,
        eta: E1,
        epsilon: E2,
        mu: T1,
        delta: T2,
    ) -> Result<Self, FrobeniusError>
    where
        S: AsRef<str>,
        E1: IntoIterator<Item = S>,
        E2: IntoIterator<Item = S>,
        T1: IntoIterator<Item = [S; 3]>,
        T2: IntoIterator<Item = [S; 3]>,
    {
        let carrier = Arc::new(carrier);
        let index = |label: S| {
            carrier
                .index_of(label.as_ref())
                .map(|i| i as u16)
                .ok_or_else(|| FrobeniusError::UnknownLabel(label.as_ref().to_owned()))
        };
        let subset = |it: &mut dyn Iterator<Item = S>| -> Result<BTreeSet<u16>, FrobeniusError> {
            it.map(index).collect()
        };
        let triples = |it: &mut dyn Iterator<Item = [S; 3]>| -> Result<BTreeSet<[u16; 3]>, FrobeniusError> {
            it.map(|[x, y, z]| Ok([index(x)?, index(y)?, index(z)?])).collect()
        };
        Ok(FrobeniusObject {
            eta: subset(&mut eta.into_iter())?,
            epsilon: subset(&mut epsilon.into_iter())?,
            mu: triples(&mut mu.into_iter())?,
            delta: triples(&mut delta.into_iter())?,
            carrier,
        })
    }

    pub(crate) fn from_indices(
        carrier: Arc<FiniteSet>,
        eta: BTreeSet<u16>,
        epsilon: BTreeSet<u16>,
        mu: BTreeSet<[u16; 3]>,
        delta: BTreeSet<[u16; 3]>,
    ) -> Self {
        let n = carrier.len() as u16;
        debug_assert!(eta.iter().chain(&epsilon).all(|&i| i < n));
        debug_assert!(mu.iter().chain(&delta).all(|t| t.iter().all(|&i| i < n)));
        FrobeniusObject {
            carrier,
            eta,
            epsilon,
            mu,
            delta,
        }
    }

    /// The object on the empty carrier, with all four relations empty.
    pub fn empty() -> Self {
        FrobeniusObject::from_indices(
            Arc::new(FiniteSet::empty()),
            BTreeSet::new(),
            BTreeSet::new(),
            BTreeSet::new(),
            BTreeSet::new(),
        )
    }

    pub fn carrier(&self) -> &Arc<FiniteSet> {
        &self.carrier
    }

    fn label(&self, i: u16) -> &str {
        self.carrier.label(i as usize)
    }

    pub fn eta_labels(&self) -> Vec<&str> {
        self.eta.iter().map(|&i| self.label(i)).collect()
    }

    pub fn epsilon_labels(&self) -> Vec<&str> {
        self.epsilon.iter().map(|&i| self.label(i)).collect()
    }

    pub fn mu_triples(&self) -> Vec<[&str; 3]> {
        self.mu.iter().map(|t| t.map(|i| self.label(i))).collect()
    }

    pub fn delta_triples(&self) -> Vec<[&str; 3]> {
        self.delta.iter().map(|t| t.map(|i| self.label(i))).collect()
    }

    pub fn mu_contains(&self, triple: [&str; 3]) -> bool {
        self.encode(triple).is_some_and(|t| self.mu.contains(&t))
    }

    pub fn delta_contains(&self, triple: [&str; 3]) -> bool {
        self.encode(triple).is_some_and(|t| self.delta.contains(&t))
    }

    fn encode(&self, triple: [&str; 3]) -> Option<[u16; 3]> {
        let mut out = [0u16; 3];
        for (slot, label) in out.iter_mut().zip(triple) {
            *slot = self.carrier.index_of(label)? as u16;
        }
        Some(out)
    }

    pub(crate) fn eta_indices(&self) -> &BTreeSet<u16> {
        &self.eta
    }

    pub(crate) fn mu_indices(&self) -> &BTreeSet<[u16; 3]> {
        &self.mu
    }

    /// The unit as a relation `{•} ⇸ X`.
    pub fn eta_rel(&self) -> Relation {
        let pairs = self.eta.iter().map(|&u| (Vec::new(), vec![u])).collect();
        Relation::from_indices(&self.carrier, 0, 1, pairs)
    }

    /// The counit as a relation `X ⇸ {•}`.
    pub fn epsilon_rel(&self) -> Relation {
        let pairs = self.epsilon.iter().map(|&u| (vec![u], Vec::new())).collect();
        Relation::from_indices(&self.carrier, 1, 0, pairs)
    }

    /// The multiplication as a relation `X² ⇸ X`.
    pub fn mu_rel(&self) -> Relation {
        let pairs = self.mu.iter().map(|&[x, y, z]| (vec![x, y], vec![z])).collect();
        Relation::from_indices(&self.carrier, 2, 1, pairs)
    }

    /// The comultiplication as a relation `X ⇸ X²`.
    pub fn delta_rel(&self) -> Relation {
        let pairs = self.delta.iter().map(|&[x, y, z]| (vec![x], vec![y, z])).collect();
        Relation::from_indices(&self.carrier, 1, 2, pairs)
    }

    fn id1(&self) -> Relation {
        Relation::identity(&self.carrier, 1)
    }

    /// Unit axiom: `μ ∘ (η × 1) = 1 = μ ∘ (1 × η)`.
    pub fn check_unit(&self) -> Verdict {
        let id = self.id1();
        let eta = self.eta_rel();
        let mu = self.mu_rel();
        let left = eta
            .tensor(&id)
            .and_then(|r| r.compose(&mu))
            .expect("unit composite arities align");
        let right = id
            .tensor(&eta)
            .and_then(|r| r.compose(&mu))
            .expect("unit composite arities align");
        least_failure([
            relations_equal("unit axiom (left)", &left, &id),
            relations_equal("unit axiom (right)", &right, &id),
        ])
    }

    /// Counit axiom: `(ε × 1) ∘ δ = 1 = (1 × ε) ∘ δ`.
    pub fn check_counit(&self) -> Verdict {
        let id = self.id1();
        let epsilon = self.epsilon_rel();
        let delta = self.delta_rel();
        let left = delta
            .compose(&epsilon.tensor(&id).expect("same carrier"))
            .expect("counit composite arities align");
        let right = delta
            .compose(&id.tensor(&epsilon).expect("same carrier"))
            .expect("counit composite arities align");
        least_failure([
            relations_equal("counit axiom (left)", &left, &id),
            relations_equal("counit axiom (right)", &right, &id),
        ])
    }

    /// Frobenius axiom: `(1 × μ) ∘ (δ × 1) = δ ∘ μ = (μ × 1) ∘ (1 × δ)`.
    pub fn check_frobenius(&self) -> Verdict {
        let id = self.id1();
        let mu = self.mu_rel();
        let delta = self.delta_rel();
        let left = delta
            .tensor(&id)
            .and_then(|r| r.compose(&id.tensor(&mu)?))
            .expect("Frobenius composite arities align");
        let middle = mu.compose(&delta).expect("Frobenius composite arities align");
        let right = id
            .tensor(&delta)
            .and_then(|r| r.compose(&mu.tensor(&id)?))
            .expect("Frobenius composite arities align");
        least_failure([
            relations_equal("Frobenius axiom (left vs middle)", &left, &middle),
            relations_equal("Frobenius axiom (middle vs right)", &middle, &right),
        ])
    }

    /// All three axioms, short-circuiting on the first failure.
    pub fn verify(&self) -> Verdict {
        self.check_unit()
            .and(|| self.check_counit())
            .and(|| self.check_frobenius())
    }

    /// Extracts the rotation bijection, copairing, source/target maps, and
    /// Nakayama automorphism of a verified object.
    pub fn extract_alpha(&self) -> Result<DerivedStructure, DerivationError> {
        if let Verdict::Fail(violation) = self.verify() {
            return Err(DerivationError::Unverified(violation));
        }
        let id = self.id1();
        let alpha = self
            .mu_rel()
            .compose(&self.epsilon_rel())
            .expect("pairing arities align");
        let beta = self
            .eta_rel()
            .compose(&self.delta_rel())
            .expect("copairing arities align");

        // Snake identity: (α × 1) ∘ (1 × β) = 1 = (1 × α) ∘ (β × 1).
        let snake_left = id
            .tensor(&beta)
            .and_then(|r| r.compose(&alpha.tensor(&id)?))
            .expect("snake arities align");
        let snake_right = beta
            .tensor(&id)
            .and_then(|r| r.compose(&id.tensor(&alpha)?))
            .expect("snake arities align");
        let snake = least_failure([
            relations_equal("snake identity (left)", &snake_left, &id),
            relations_equal("snake identity (right)", &snake_right, &id),
        ]);
        if let Verdict::Fail(violation) = snake {
            return Err(DerivationError::Snake(violation));
        }

        let alpha_hat = alpha.reshape(1, 1).expect("total arity 2").as_bijection()?;
        let beta_map = beta.reshape(1, 1).expect("total arity 2");
        if beta_map != alpha_hat.inverse().graph() {
            return Err(DerivationError::CopairingMismatch);
        }

        let source = self.unit_table("source")?;
        let target = self.unit_table("target")?;
        let nakayama = alpha_hat.then(&alpha_hat);
        let beta_pairs = beta_map
            .index_pairs()
            .iter()
            .map(|(a, b)| (a[0], b[0]))
            .collect();
        Ok(DerivedStructure {
            carrier: Arc::clone(&self.carrier),
            alpha_hat,
            beta: beta_pairs,
            source,
            target,
            nakayama,
        })
    }

    fn unit_candidates(&self, x: u16, role: &'static str) -> Vec<u16> {
        self.eta
            .iter()
            .copied()
            .filter(|&u| match role {
                "source" => self.mu.contains(&[x, u, x]),
                _ => self.mu.contains(&[u, x, x]),
            })
            .collect()
    }

    fn unit_table(&self, role: &'static str) -> Result<Vec<u16>, DerivationError> {
        (0..self.carrier.len() as u16)
            .map(|x| {
                let candidates = self.unit_candidates(x, role);
                if candidates.len() == 1 {
                    Ok(candidates[0])
                } else {
                    Err(DerivationError::UnitCandidates {
                        element: self.label(x).to_owned(),
                        role,
                        count: candidates.len(),
                    })
                }
            })
            .collect()
    }

    /// The unique `s(x) ∈ η` with `(x, s(x), x) ∈ μ`.
    pub fn source(&self, x: &str) -> Result<&str, DerivationError> {
        self.unit_of(x, "source")
    }

    /// The unique `t(x) ∈ η` with `(t(x), x, x) ∈ μ`.
    pub fn target(&self, x: &str) -> Result<&str, DerivationError> {
        self.unit_of(x, "target")
    }

    fn unit_of(&self, x: &str, role: &'static str) -> Result<&str, DerivationError> {
        let i = self
            .carrier
            .index_of(x)
            .ok_or_else(|| DerivationError::UnknownElement(x.to_owned()))? as u16;
        let candidates = self.unit_candidates(i, role);
        if candidates.len() == 1 {
            Ok(self.label(candidates[0]))
        } else {
            Err(DerivationError::UnitCandidates {
                element: x.to_owned(),
                role,
                count: candidates.len(),
            })
        }
    }

    /// The structure rotated by π: unit and counit swap, and both
    /// multiplication tables reverse end to end.
    pub fn rotation_dual(&self) -> FrobeniusObject {
        FrobeniusObject::from_indices(
            Arc::clone(&self.carrier),
            self.epsilon.clone(),
            self.eta.clone(),
            self.delta.iter().map(|&[x, y, z]| [z, y, x]).collect(),
            self.mu.iter().map(|&[x, y, z]| [z, y, x]).collect(),
        )
    }

    /// The vertical reflection: `(x, y, z) ∈ μ†` iff `(z, x, y) ∈ δ`, and
    /// `(x, y, z) ∈ δ†` iff `(y, z, x) ∈ μ`.
    pub fn dagger_dual(&self) -> FrobeniusObject {
        FrobeniusObject::from_indices(
            Arc::clone(&self.carrier),
            self.epsilon.clone(),
            self.eta.clone(),
            self.delta.iter().map(|&[z, x, y]| [x, y, z]).collect(),
            self.mu.iter().map(|&[y, z, x]| [x, y, z]).collect(),
        )
    }

    /// The horizontal reflection: inputs of `μ` and outputs of `δ` swap.
    pub fn opposite_dual(&self) -> FrobeniusObject {
        FrobeniusObject::from_indices(
            Arc::clone(&self.carrier),
            self.eta.clone(),
            self.epsilon.clone(),
            self.mu.iter().map(|&[y, x, z]| [x, y, z]).collect(),
            self.delta.iter().map(|&[x, z, y]| [x, y, z]).collect(),
        )
    }

    /// Commutativity: `μ ∘ τ = μ`.
    pub fn is_commutative(&self) -> bool {
        let mu = self.mu_rel();
        let twisted = Relation::twist(&self.carrier)
            .compose(&mu)
            .expect("twist arities align");
        twisted == mu
    }

    /// The special property: `μ ∘ δ = 1`.
    pub fn is_special(&self) -> bool {
        let composite = self
            .delta_rel()
            .compose(&self.mu_rel())
            .expect("special composite arities align");
        composite == self.id1()
    }

    /// The dagger property: the object equals its vertical reflection.
    pub fn is_dagger(&self) -> bool {
        *self == self.dagger_dual()
    }

    /// The multiplication/comultiplication exchange identities plus the
    /// pointwise three-way membership equivalence between `μ` and `δ`.
    pub fn check_md_identities(&self, derived: &DerivedStructure) -> Verdict {
        let id = self.id1();
        let mu = self.mu_rel();
        let delta = self.delta_rel();
        let alpha = derived.alpha_hat.graph().reshape(2, 0).expect("total arity 2");

        // (1 × α) ∘ (δ × 1) = μ and (α × 1) ∘ (1 × δ) = μ.
        let left = delta
            .tensor(&id)
            .and_then(|r| r.compose(&id.tensor(&alpha)?))
            .expect("exchange arities align");
        let right = id
            .tensor(&delta)
            .and_then(|r| r.compose(&alpha.tensor(&id)?))
            .expect("exchange arities align");
        let exchange = least_failure([
            relations_equal("multiplication from comultiplication (left)", &left, &mu),
            relations_equal("multiplication from comultiplication (right)", &right, &mu),
        ]);

        exchange.and(|| {
            let n = self.carrier.len() as u16;
            let inverse = derived.alpha_hat.inverse();
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let in_mu = self.mu.contains(&[x, y, z]);
                        let via_alpha = self.delta.contains(&[y, derived.alpha_hat.apply_index(x), z]);
                        let via_inverse = self.delta.contains(&[x, z, inverse.apply_index(y)]);
                        if in_mu != via_alpha || in_mu != via_inverse {
                            return Verdict::fail(
                                "triple membership equivalence",
                                vec![
                                    self.label(x).to_owned(),
                                    self.label(y).to_owned(),
                                    self.label(z).to_owned(),
                                ],
                            );
                        }
                    }
                }
            }
            Verdict::Pass
        })
    }

    /// Invariance of `μ` under the rotation `(x, y, z) ↦ (y, α̂(z), α̂(x))`.
    pub fn check_rotation_property(&self, derived: &DerivedStructure) -> Verdict {
        for &[x, y, z] in &self.mu {
            let rotated = [
                y,
                derived.alpha_hat.apply_index(z),
                derived.alpha_hat.apply_index(x),
            ];
            if !self.mu.contains(&rotated) {
                return Verdict::fail(
                    "rotation invariance of multiplication",
                    vec![
                        self.label(x).to_owned(),
                        self.label(y).to_owned(),
                        self.label(z).to_owned(),
                    ],
                );
            }
        }
        Verdict::Pass
    }

    /// Transports the structure along a bijection of the carrier with itself.
    pub fn relabeled(&self, along: &Bijection) -> FrobeniusObject {
        let map = |i: u16| along.apply_index(i);
        FrobeniusObject::from_indices(
            Arc::clone(&self.carrier),
            self.eta.iter().map(|&u| map(u)).collect(),
            self.epsilon.iter().map(|&u| map(u)).collect(),
            self.mu.iter().map(|t| t.map(map)).collect(),
            self.delta.iter().map(|t| t.map(map)).collect(),
        )
    }

    /// Searches for a bijection of carriers carrying this structure onto
    /// `other`, returning the witness as `(from, to)` label pairs.
    pub fn is_isomorphic(&self, other: &FrobeniusObject) -> Option<Vec<(String, String)>> {
        let n = self.carrier.len();
        if n != other.carrier.len()
            || self.eta.len() != other.eta.len()
            || self.epsilon.len() != other.epsilon.len()
            || self.mu.len() != other.mu.len()
            || self.delta.len() != other.delta.len()
        {
            return None;
        }
        let mut perm: Vec<u16> = (0..n as u16).collect();
        let found = search_permutations(&mut perm, 0, &mut |p| {
            self.eta.iter().map(|&u| p[u as usize]).collect::<BTreeSet<_>>() == other.eta
                && self.epsilon.iter().map(|&u| p[u as usize]).collect::<BTreeSet<_>>()
                    == other.epsilon
                && self.mu.iter().map(|t| t.map(|i| p[i as usize])).collect::<BTreeSet<_>>()
                    == other.mu
                && self.delta.iter().map(|t| t.map(|i| p[i as usize])).collect::<BTreeSet<_>>()
                    == other.delta
        });
        found.map(|p| {
            p.iter()
                .enumerate()
                .map(|(i, &j)| {
                    (
                        self.label(i as u16).to_owned(),
                        other.label(j).to_owned(),
                    )
                })
                .collect()
        })
    }
}

/// Tries every permutation of the tail `perm[at..]`, returning the first one
/// accepted by the predicate.
fn search_permutations(
    perm: &mut Vec<u16>,
    at: usize,
    accept: &mut impl FnMut(&[u16]) -> bool,
) -> Option<Vec<u16>> {
    if at == perm.len() {
        return accept(perm).then(|| perm.clone());
    }
    for i in at..perm.len() {
        perm.swap(at, i);
        if let Some(found) = search_permutations(perm, at + 1, accept) {
            return Some(found);
        }
        perm.swap(at, i);
    }
    None
}

/// The structure a verified Frobenius object carries for free: the rotation
/// bijection `α̂`, the copairing `β`, total source and target maps into the
/// unit set, and the Nakayama automorphism `α̂²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedStructure {
    carrier: Arc<FiniteSet>,
    alpha_hat: Bijection,
    beta: Vec<(u16, u16)>,
    source: Vec<u16>,
    target: Vec<u16>,
    nakayama: Bijection,
}

impl DerivedStructure {
    pub fn alpha_hat(&self) -> &Bijection {
        &self.alpha_hat
    }

    /// The copairing as `(α̂(x), x)` label pairs.
    pub fn beta_pairs(&self) -> Vec<(&str, &str)> {
        self.beta
            .iter()
            .map(|&(a, b)| (self.carrier.label(a as usize), self.carrier.label(b as usize)))
            .collect()
    }

    pub fn source_of(&self, x: &str) -> &str {
        let i = self
            .carrier
            .index_of(x)
            .unwrap_or_else(|| panic!("label `{x}` is not in the carrier"));
        self.carrier.label(self.source[i] as usize)
    }

    pub fn target_of(&self, x: &str) -> &str {
        let i = self
            .carrier
            .index_of(x)
            .unwrap_or_else(|| panic!("label `{x}` is not in the carrier"));
        self.carrier.label(self.target[i] as usize)
    }

    pub(crate) fn source_index(&self, x: u16) -> u16 {
        self.source[x as usize]
    }

    pub(crate) fn target_index(&self, x: u16) -> u16 {
        self.target[x as usize]
    }

    /// The Nakayama automorphism `α̂²`.
    pub fn nakayama(&self) -> &Bijection {
        &self.nakayama
    }
}
