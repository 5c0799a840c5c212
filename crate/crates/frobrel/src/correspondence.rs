//! The two-way passage between Frobenius objects and 2-truncated simplicial
//! sets with a rotation automorphism.
//!
//! Forward, a verified object becomes a simplicial set whose vertices are
//! the unit elements, whose edges are the carrier, and whose triangles are
//! the multiplication triples; the face maps at the bottom level are the
//! source and target maps. Backward, a validated structure satisfying the
//! three characterizing properties yields a Frobenius object whose
//! multiplication is the set of triangle boundaries. The two
//! [`roundtrip_frob`] and [`roundtrip_simp`] checks witness that these
//! passages invert each other, up to the canonical renaming of vertices and
//! triangles on the simplicial side.

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::frobenius::{DerivationError, FrobeniusObject};
use crate::rel::FiniteSet;
use crate::simplicial::{AlphaSimplicial, SimplicialCongruence, TruncSimplicialSet2};
use crate::verdict::{Verdict, Violation};

/// Errors from either direction of the passage.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorrespondenceError {
    #[error(transparent)]
    Derivation(#[from] DerivationError),
    #[error("precondition {property} fails: {violation}")]
    PropertyFailed {
        property: &'static str,
        violation: Violation,
    },
    #[error("constructed object fails verification ({0}); this is a bug, not bad input")]
    InternalInvariant(Violation),
}

/// Distinct display names for the triangles of a multiplication table.
fn triangle_ids(f: &FrobeniusObject) -> Vec<(String, [u16; 3])> {
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    let carrier = f.carrier();
    let name = |t: &[u16; 3]| {
        format!(
            "({},{},{})",
            carrier.label(t[0] as usize),
            carrier.label(t[1] as usize),
            carrier.label(t[2] as usize)
        )
    };
    for triple in f.mu_indices() {
        *counts.entry(name(triple)).or_default() += 1;
    }
    let mut used: BTreeMap<String, usize> = BTreeMap::new();
    f.mu_indices()
        .iter()
        .map(|triple| {
            let base = name(triple);
            let id = if counts[&base] > 1 {
                let k = used.entry(base.clone()).or_default();
                let id = format!("{base}#{k}");
                *k += 1;
                id
            } else {
                base
            };
            (id, *triple)
        })
        .collect()
}

/// Builds the simplicial set of a verified Frobenius object.
///
/// Vertices are the unit elements, edges the whole carrier, triangles the
/// multiplication triples; the automorphism is the extracted rotation
/// bijection.
pub fn frob_to_simplicial(f: &FrobeniusObject) -> Result<AlphaSimplicial, DerivationError> {
    let derived = f.extract_alpha()?;
    let x1 = Arc::clone(f.carrier());

    let eta: Vec<u16> = f.eta_indices().iter().copied().collect();
    let x0 = Arc::new(
        FiniteSet::new(f.eta_labels()).expect("unit labels are distinct"),
    );
    let vertex_of = |i: u16| -> u16 {
        eta.binary_search(&i).expect("source and target land in the unit set") as u16
    };

    let ids = triangle_ids(f);
    let x2 = Arc::new(FiniteSet::new(ids.iter().map(|(id, _)| id.clone())).expect("ids are distinct"));
    let triple_of: BTreeMap<&str, [u16; 3]> =
        ids.iter().map(|(id, t)| (id.as_str(), *t)).collect();
    let triangle_of: BTreeMap<[u16; 3], u16> = x2
        .iter()
        .enumerate()
        .map(|(pos, id)| (triple_of[id], pos as u16))
        .collect();

    let n1 = x1.len() as u16;
    let mut d10 = Vec::with_capacity(n1 as usize);
    let mut d11 = Vec::with_capacity(n1 as usize);
    let mut s10 = Vec::with_capacity(n1 as usize);
    let mut s11 = Vec::with_capacity(n1 as usize);
    for x in 0..n1 {
        let s = derived.source_index(x);
        let t = derived.target_index(x);
        d10.push(vertex_of(s));
        d11.push(vertex_of(t));
        s10.push(triangle_of[&[t, x, x]]);
        s11.push(triangle_of[&[x, s, x]]);
    }
    let mut d20 = Vec::with_capacity(x2.len());
    let mut d21 = Vec::with_capacity(x2.len());
    let mut d22 = Vec::with_capacity(x2.len());
    for id in x2.iter() {
        let [x, y, z] = triple_of[id];
        d22.push(x);
        d20.push(y);
        d21.push(z);
    }
    let base = TruncSimplicialSet2::from_tables(
        x0, x1, x2, d10, d11, d20, d21, d22, eta.clone(), s10, s11,
    );
    Ok(AlphaSimplicial::new(base, derived.alpha_hat().clone())
        .expect("automorphism lives on the edge set"))
}

/// Builds the Frobenius object of a structure satisfying the characterizing
/// properties, re-verifying the result.
pub fn simplicial_to_frob(a: &AlphaSimplicial) -> Result<FrobeniusObject, CorrespondenceError> {
    let base = a.base();
    let preflight = [
        ("simplicial validation", base.validate()),
        ("boundary property", base.check_p1()),
        ("associativity lift property", base.check_p2()),
        ("rotation property", a.check_p3()),
    ];
    for (property, verdict) in preflight {
        if let Verdict::Fail(violation) = verdict {
            return Err(CorrespondenceError::PropertyFailed {
                property,
                violation,
            });
        }
    }

    let alpha = a.alpha_hat();
    let mu = base.boundary2_image();
    let eta: std::collections::BTreeSet<u16> =
        (0..base.x0().len() as u16).map(|u| base.s00_idx(u)).collect();
    let epsilon = eta.iter().map(|&u| alpha.apply_index(u)).collect();
    let delta = mu
        .iter()
        .map(|&[x, y, z]| [y, alpha.apply_index(x), z])
        .collect();
    let f = FrobeniusObject::from_indices(Arc::clone(base.x1()), eta, epsilon, mu, delta);
    if let Verdict::Fail(violation) = f.verify() {
        return Err(CorrespondenceError::InternalInvariant(violation));
    }
    Ok(f)
}

/// Round trip starting from an object: going to the simplicial side and back
/// must reproduce the object on the nose.
pub fn roundtrip_frob(f: &FrobeniusObject) -> Result<Verdict, CorrespondenceError> {
    let a = frob_to_simplicial(f)?;
    let g = simplicial_to_frob(&a)?;
    if g == *f {
        return Ok(Verdict::Pass);
    }
    let witness = |mine: Vec<&str>, theirs: Vec<&str>| -> Vec<String> {
        mine.into_iter()
            .chain(theirs)
            .map(str::to_owned)
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect()
    };
    let verdict = if g.eta_labels() != f.eta_labels() {
        Verdict::fail("roundtrip (unit)", witness(g.eta_labels(), f.eta_labels()))
    } else if g.epsilon_labels() != f.epsilon_labels() {
        Verdict::fail(
            "roundtrip (counit)",
            witness(g.epsilon_labels(), f.epsilon_labels()),
        )
    } else if g.mu_indices() != f.mu_indices() {
        Verdict::fail("roundtrip (multiplication)", Vec::new())
    } else {
        Verdict::fail("roundtrip (comultiplication)", Vec::new())
    };
    Ok(verdict)
}

/// The outcome of a simplicial round trip: the verdict plus, on success, the
/// canonical renamings of vertices and triangles that witness it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialRoundtrip {
    pub verdict: Verdict,
    pub congruence: Option<SimplicialCongruence>,
}

/// Round trip starting from simplicial data: going to the object side and
/// back must reproduce the structure up to the canonical identifications of
/// vertices with their degenerate edges and of triangles with their
/// boundaries.
pub fn roundtrip_simp(a: &AlphaSimplicial) -> Result<SimplicialRoundtrip, CorrespondenceError> {
    let f = simplicial_to_frob(a)?;
    let b = frob_to_simplicial(&f)?;
    match a.base().congruent(b.base()) {
        None => Ok(SimplicialRoundtrip {
            verdict: Verdict::fail("roundtrip congruence of levels", Vec::new()),
            congruence: None,
        }),
        Some(congruence) => {
            if a.alpha_hat() == b.alpha_hat() {
                Ok(SimplicialRoundtrip {
                    verdict: Verdict::Pass,
                    congruence: Some(congruence),
                })
            } else {
                let witness = a
                    .alpha_hat()
                    .pairs()
                    .into_iter()
                    .zip(b.alpha_hat().pairs())
                    .find(|(mine, theirs)| mine != theirs)
                    .map(|((x, _), _)| vec![x.to_owned()])
                    .unwrap_or_default();
                Ok(SimplicialRoundtrip {
                    verdict: Verdict::fail("roundtrip automorphism equality", witness),
                    congruence: Some(congruence),
                })
            }
        }
    }
}
