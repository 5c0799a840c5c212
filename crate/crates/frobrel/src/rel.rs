//! Finite sets and exact relations between their powers.
//!
//! This module is the ambient category everything else computes in. Objects
//! are [`FiniteSet`]s; a morphism `X^m ⇸ X^n` is a [`Relation`]: a finite,
//! duplicate-free set of pairs of tuples over a single shared carrier. All
//! values are immutable and all operations are pure, so relations can be
//! shared freely between threads.
//!
//! Two conventions are load-bearing and used consistently across the crate:
//!
//! * **Composition is diagrammatic.** `r.compose(&s)` first runs `r`, then
//!   `s`; in the classical right-to-left notation it computes `s ∘ r`.
//! * **Arity 0 means "the one-point set".** The unique tuple of length zero
//!   plays the role of the point `•`, so a relation `{•} ⇸ X` is literally a
//!   subset of `X` and a relation `{•} ⇸ {•}` is a boolean.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Errors from building or combining relations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelError {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("label `{0}` is not in the carrier")]
    UnknownLabel(String),
    #[error("tuple {tuple:?} has length {got}, expected {expected}")]
    TupleLength {
        tuple: Vec<String>,
        expected: usize,
        got: usize,
    },
    #[error("arity mismatch: left relation targets arity {left}, right expects arity {right}")]
    ComposeArity { left: usize, right: usize },
    #[error("relations live on different carriers")]
    CarrierMismatch,
    #[error("cannot reshape a {src}+{tgt} relation into {new_src}+{new_tgt}")]
    Reshape {
        src: usize,
        tgt: usize,
        new_src: usize,
        new_tgt: usize,
    },
}

/// Why a unary relation fails to be the graph of a bijection.
///
/// The four failure modes are reported separately so callers can explain
/// exactly how a pairing degenerates.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("expected a relation of arity 1 -> 1, got {src} -> {tgt}")]
    WrongArity { src: usize, tgt: usize },
    #[error("not single-valued: `{label}` relates to both `{first}` and `{second}`")]
    NotSingleValued {
        label: String,
        first: String,
        second: String,
    },
    #[error("not total: `{label}` has no image")]
    NotTotal { label: String },
    #[error("not injective: `{first}` and `{second}` both map to `{image}`")]
    NotInjective {
        image: String,
        first: String,
        second: String,
    },
    #[error("not surjective: `{label}` has no preimage")]
    NotSurjective { label: String },
}

/// An ordered set of distinct string labels.
///
/// Labels are sorted on construction, so two finite sets are equal exactly
/// when they contain the same labels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FiniteSet {
    labels: Vec<String>,
}

impl FiniteSet {
    /// Builds a set from labels, sorting them; duplicates are an error.
    pub fn new<I, S>(labels: I) -> Result<Self, RelError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        labels.sort();
        for window in labels.windows(2) {
            if window[0] == window[1] {
                return Err(RelError::DuplicateLabel(window[0].clone()));
            }
        }
        Ok(FiniteSet { labels })
    }

    pub fn empty() -> Self {
        FiniteSet::default()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index_of(label).is_some()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.binary_search_by(|l| l.as_str().cmp(label)).ok()
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.labels.iter().map(String::as_str)
    }
}

impl fmt::Display for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels.join(", "))
    }
}

/// All tuples of the given arity over `0..size`, in lexicographic order.
///
/// For arity 0 this is the single empty tuple, including over the empty
/// carrier; that is what makes arity-0 relations behave like booleans.
pub(crate) fn all_tuples(size: usize, arity: usize) -> Vec<Vec<u16>> {
    let mut out = vec![Vec::new()];
    for _ in 0..arity {
        let mut next = Vec::with_capacity(out.len() * size);
        for t in &out {
            for v in 0..size {
                let mut t = t.clone();
                t.push(v as u16);
                next.push(t);
            }
        }
        out = next;
    }
    out
}

/// A relation `X^m ⇸ X^n` over a fixed carrier `X`, stored extensionally as
/// a sorted set of `(source tuple, target tuple)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Relation {
    carrier: Arc<FiniteSet>,
    source_arity: usize,
    target_arity: usize,
    pairs: BTreeSet<(Vec<u16>, Vec<u16>)>,
}

impl Relation {
    /// Builds a relation from label tuples, validating lengths and membership.
    pub fn new<I, S>(
        carrier: &Arc<FiniteSet>,
        source_arity: usize,
        target_arity: usize,
        pairs: I,
    ) -> Result<Self, RelError>
    where
        I: IntoIterator<Item = (Vec<S>, Vec<S>)>,
        S: AsRef<str>,
    {
        let mut index_pairs = BTreeSet::new();
        for (src, tgt) in pairs {
            index_pairs.insert((
                encode_tuple(carrier, &src, source_arity)?,
                encode_tuple(carrier, &tgt, target_arity)?,
            ));
        }
        Ok(Relation {
            carrier: Arc::clone(carrier),
            source_arity,
            target_arity,
            pairs: index_pairs,
        })
    }

    /// Index-level constructor used by the rest of the crate.
    pub(crate) fn from_indices(
        carrier: &Arc<FiniteSet>,
        source_arity: usize,
        target_arity: usize,
        pairs: BTreeSet<(Vec<u16>, Vec<u16>)>,
    ) -> Self {
        debug_assert!(pairs.iter().all(|(a, b)| {
            a.len() == source_arity
                && b.len() == target_arity
                && a.iter().chain(b).all(|&i| (i as usize) < carrier.len())
        }));
        Relation {
            carrier: Arc::clone(carrier),
            source_arity,
            target_arity,
            pairs,
        }
    }

    /// The relation with no pairs at all.
    pub fn empty(carrier: &Arc<FiniteSet>, source_arity: usize, target_arity: usize) -> Self {
        Relation::from_indices(carrier, source_arity, target_arity, BTreeSet::new())
    }

    /// The diagonal relation on tuples of the given arity.
    ///
    /// `identity(X, 0)` is the full relation `{•} ⇸ {•}`, i.e. the boolean
    /// "true", even over an empty carrier.
    pub fn identity(carrier: &Arc<FiniteSet>, arity: usize) -> Self {
        let pairs = all_tuples(carrier.len(), arity)
            .into_iter()
            .map(|t| (t.clone(), t))
            .collect();
        Relation::from_indices(carrier, arity, arity, pairs)
    }

    /// The twist `X² ⇸ X²` sending `(x, y)` to `(y, x)`.
    pub fn twist(carrier: &Arc<FiniteSet>) -> Self {
        let n = carrier.len() as u16;
        let mut pairs = BTreeSet::new();
        for x in 0..n {
            for y in 0..n {
                pairs.insert((vec![x, y], vec![y, x]));
            }
        }
        Relation::from_indices(carrier, 2, 2, pairs)
    }

    pub fn carrier(&self) -> &Arc<FiniteSet> {
        &self.carrier
    }

    pub fn source_arity(&self) -> usize {
        self.source_arity
    }

    pub fn target_arity(&self) -> usize {
        self.target_arity
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub(crate) fn index_pairs(&self) -> &BTreeSet<(Vec<u16>, Vec<u16>)> {
        &self.pairs
    }

    /// The pairs of the relation as label tuples, in canonical order.
    pub fn pairs(&self) -> Vec<(Vec<&str>, Vec<&str>)> {
        self.pairs
            .iter()
            .map(|(a, b)| (self.decode(a), self.decode(b)))
            .collect()
    }

    fn decode(&self, tuple: &[u16]) -> Vec<&str> {
        tuple.iter().map(|&i| self.carrier.label(i as usize)).collect()
    }

    pub fn contains<S: AsRef<str>>(&self, source: &[S], target: &[S]) -> bool {
        let Ok(src) = encode_tuple(&self.carrier, source, self.source_arity) else {
            return false;
        };
        let Ok(tgt) = encode_tuple(&self.carrier, target, self.target_arity) else {
            return false;
        };
        self.pairs.contains(&(src, tgt))
    }

    fn same_carrier(&self, other: &Relation) -> bool {
        Arc::ptr_eq(&self.carrier, &other.carrier) || self.carrier == other.carrier
    }

    /// Diagrammatic composition: first `self`, then `then`.
    ///
    /// Computes `{(x, z) | ∃y. (x, y) ∈ self and (y, z) ∈ then}`, which is
    /// `then ∘ self` in right-to-left notation.
    pub fn compose(&self, then: &Relation) -> Result<Relation, RelError> {
        if !self.same_carrier(then) {
            return Err(RelError::CarrierMismatch);
        }
        if self.target_arity != then.source_arity {
            return Err(RelError::ComposeArity {
                left: self.target_arity,
                right: then.source_arity,
            });
        }
        let mut by_source: BTreeMap<&[u16], Vec<&[u16]>> = BTreeMap::new();
        for (m, b) in &then.pairs {
            by_source.entry(m.as_slice()).or_default().push(b.as_slice());
        }
        let mut pairs = BTreeSet::new();
        for (a, m) in &self.pairs {
            if let Some(targets) = by_source.get(m.as_slice()) {
                for b in targets {
                    pairs.insert((a.clone(), b.to_vec()));
                }
            }
        }
        Ok(Relation::from_indices(
            &self.carrier,
            self.source_arity,
            then.target_arity,
            pairs,
        ))
    }

    /// Monoidal product: arities add and pairs concatenate, `self` on the left.
    pub fn tensor(&self, right: &Relation) -> Result<Relation, RelError> {
        if !self.same_carrier(right) {
            return Err(RelError::CarrierMismatch);
        }
        let mut pairs = BTreeSet::new();
        for (a1, b1) in &self.pairs {
            for (a2, b2) in &right.pairs {
                let mut a = a1.clone();
                a.extend_from_slice(a2);
                let mut b = b1.clone();
                b.extend_from_slice(b2);
                pairs.insert((a, b));
            }
        }
        Ok(Relation::from_indices(
            &self.carrier,
            self.source_arity + right.source_arity,
            self.target_arity + right.target_arity,
            pairs,
        ))
    }

    /// The converse relation: pairs reversed, arities swapped.
    pub fn converse(&self) -> Relation {
        let pairs = self.pairs.iter().map(|(a, b)| (b.clone(), a.clone())).collect();
        Relation::from_indices(&self.carrier, self.target_arity, self.source_arity, pairs)
    }

    /// Reinterprets the splitting of each pair into source and target parts.
    ///
    /// The total arity must be preserved; the underlying tuples do not move.
    /// This is how a pairing `X² ⇸ {•}` is read as a map shape `X ⇸ X`.
    pub fn reshape(&self, source_arity: usize, target_arity: usize) -> Result<Relation, RelError> {
        if source_arity + target_arity != self.source_arity + self.target_arity {
            return Err(RelError::Reshape {
                src: self.source_arity,
                tgt: self.target_arity,
                new_src: source_arity,
                new_tgt: target_arity,
            });
        }
        let pairs = self
            .pairs
            .iter()
            .map(|(a, b)| {
                let mut flat = a.clone();
                flat.extend_from_slice(b);
                let tail = flat.split_off(source_arity);
                (flat, tail)
            })
            .collect();
        Ok(Relation::from_indices(&self.carrier, source_arity, target_arity, pairs))
    }

    /// Extracts the bijection whose graph this relation is, or explains why
    /// there is none.
    pub fn as_bijection(&self) -> Result<Bijection, BijectionError> {
        if self.source_arity != 1 || self.target_arity != 1 {
            return Err(BijectionError::WrongArity {
                src: self.source_arity,
                tgt: self.target_arity,
            });
        }
        let n = self.carrier.len();
        let mut forward: Vec<Option<u16>> = vec![None; n];
        for (a, b) in &self.pairs {
            let (x, y) = (a[0], b[0]);
            match forward[x as usize] {
                Some(prev) if prev != y => {
                    let (first, second) = if prev < y { (prev, y) } else { (y, prev) };
                    return Err(BijectionError::NotSingleValued {
                        label: self.carrier.label(x as usize).to_owned(),
                        first: self.carrier.label(first as usize).to_owned(),
                        second: self.carrier.label(second as usize).to_owned(),
                    });
                }
                _ => forward[x as usize] = Some(y),
            }
        }
        let mut map = Vec::with_capacity(n);
        for (x, image) in forward.iter().enumerate() {
            match image {
                Some(y) => map.push(*y),
                None => {
                    return Err(BijectionError::NotTotal {
                        label: self.carrier.label(x).to_owned(),
                    })
                }
            }
        }
        let mut preimage: Vec<Option<u16>> = vec![None; n];
        for (x, &y) in map.iter().enumerate() {
            if let Some(first) = preimage[y as usize] {
                return Err(BijectionError::NotInjective {
                    image: self.carrier.label(y as usize).to_owned(),
                    first: self.carrier.label(first as usize).to_owned(),
                    second: self.carrier.label(x).to_owned(),
                });
            }
            preimage[y as usize] = Some(x as u16);
        }
        if let Some(y) = preimage.iter().position(Option::is_none) {
            return Err(BijectionError::NotSurjective {
                label: self.carrier.label(y).to_owned(),
            });
        }
        Ok(Bijection {
            carrier: Arc::clone(&self.carrier),
            forward: map,
        })
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .pairs
            .iter()
            .map(|(a, b)| format!("({}) -> ({})", self.decode(a).join(", "), self.decode(b).join(", ")))
            .collect();
        write!(f, "{{{}}}", rows.join(", "))
    }
}

fn encode_tuple<S: AsRef<str>>(
    carrier: &FiniteSet,
    tuple: &[S],
    arity: usize,
) -> Result<Vec<u16>, RelError> {
    if tuple.len() != arity {
        return Err(RelError::TupleLength {
            tuple: tuple.iter().map(|s| s.as_ref().to_owned()).collect(),
            expected: arity,
            got: tuple.len(),
        });
    }
    tuple
        .iter()
        .map(|label| {
            carrier
                .index_of(label.as_ref())
                .map(|i| i as u16)
                .ok_or_else(|| RelError::UnknownLabel(label.as_ref().to_owned()))
        })
        .collect()
}

/// A bijection of a carrier with itself, stored as a total lookup table.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Bijection {
    carrier: Arc<FiniteSet>,
    forward: Vec<u16>,
}

impl Bijection {
    pub fn identity(carrier: &Arc<FiniteSet>) -> Self {
        Bijection {
            carrier: Arc::clone(carrier),
            forward: (0..carrier.len() as u16).collect(),
        }
    }

    /// Builds a bijection from `(x, f(x))` label pairs; the map must be a
    /// total permutation of the carrier.
    pub fn from_pairs<I, S>(carrier: &Arc<FiniteSet>, pairs: I) -> Result<Self, BijectionError>
    where
        I: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let mut graph = BTreeSet::new();
        for (x, y) in pairs {
            let encode = |label: &str| {
                carrier
                    .index_of(label)
                    .map(|i| i as u16)
                    .ok_or_else(|| BijectionError::NotTotal {
                        label: label.to_owned(),
                    })
            };
            graph.insert((vec![encode(x.as_ref())?], vec![encode(y.as_ref())?]));
        }
        Relation::from_indices(carrier, 1, 1, graph).as_bijection()
    }

    pub(crate) fn from_table(carrier: &Arc<FiniteSet>, forward: Vec<u16>) -> Self {
        debug_assert_eq!(forward.len(), carrier.len());
        Bijection {
            carrier: Arc::clone(carrier),
            forward,
        }
    }

    pub fn carrier(&self) -> &Arc<FiniteSet> {
        &self.carrier
    }

    pub fn apply(&self, label: &str) -> &str {
        let i = self
            .carrier
            .index_of(label)
            .unwrap_or_else(|| panic!("label `{label}` is not in the carrier"));
        self.carrier.label(self.forward[i] as usize)
    }

    pub(crate) fn apply_index(&self, index: u16) -> u16 {
        self.forward[index as usize]
    }

    pub fn inverse(&self) -> Bijection {
        let mut backward = vec![0u16; self.forward.len()];
        for (x, &y) in self.forward.iter().enumerate() {
            backward[y as usize] = x as u16;
        }
        Bijection {
            carrier: Arc::clone(&self.carrier),
            forward: backward,
        }
    }

    /// Diagrammatic composition: first `self`, then `next`.
    pub fn then(&self, next: &Bijection) -> Bijection {
        debug_assert!(self.carrier == next.carrier);
        let forward = self.forward.iter().map(|&y| next.forward[y as usize]).collect();
        Bijection {
            carrier: Arc::clone(&self.carrier),
            forward,
        }
    }

    /// Iterated self-composition.
    pub fn pow(&self, exponent: usize) -> Bijection {
        let mut out = Bijection::identity(&self.carrier);
        for _ in 0..exponent {
            out = out.then(self);
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.forward.iter().enumerate().all(|(i, &y)| i as u16 == y)
    }

    /// The graph of the bijection as a relation `X ⇸ X`.
    pub fn graph(&self) -> Relation {
        let pairs = self
            .forward
            .iter()
            .enumerate()
            .map(|(x, &y)| (vec![x as u16], vec![y]))
            .collect();
        Relation::from_indices(&self.carrier, 1, 1, pairs)
    }

    /// The `(x, f(x))` pairs as labels, in carrier order.
    pub fn pairs(&self) -> Vec<(&str, &str)> {
        self.forward
            .iter()
            .enumerate()
            .map(|(x, &y)| (self.carrier.label(x), self.carrier.label(y as usize)))
            .collect()
    }
}

impl fmt::Display for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .pairs()
            .into_iter()
            .map(|(x, y)| format!("{x} -> {y}"))
            .collect();
        write!(f, "{{{}}}", rows.join(", "))
    }
}
