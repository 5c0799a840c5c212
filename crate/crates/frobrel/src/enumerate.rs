//! Exhaustive search and classification of Frobenius objects on small
//! carriers.
//!
//! Two independent routes produce the same answer, and that agreement is
//! the correctness gate for both. [`brute_force`] walks the entire raw
//! space of `(η, ε, μ, δ)` quadruples and keeps what verifies — nothing but
//! the axiom checker is trusted. [`smart_enumerate`] instead enumerates
//! `(η, α̂, μ)` triples, using three facts about verified objects: the
//! counit is determined as `ε = α̂(η)`, the comultiplication as
//! `δ = {(y, α̂(x), z) | (x, y, z) ∈ μ}`, and `μ` is a union of orbits of
//! the rotation `(x, y, z) ↦ (y, α̂(z), α̂(x))`. Candidates violating the
//! unit axiom row constraints are pruned before verification, which cuts
//! the three-element search from `2^60`-ish to a few thousand candidates.
//!
//! Both routes return objects in canonical order on the fixed carrier
//! `a, b, c, …`, so the oracle comparison is plain equality of lists.

use std::collections::BTreeSet;
use std::sync::Arc;

use thiserror::Error;

use crate::frobenius::FrobeniusObject;
use crate::rel::FiniteSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("carrier size {n} exceeds the maximum of {max} for {routine}")]
    TooLarge {
        n: usize,
        max: usize,
        routine: &'static str,
    },
}

/// The fixed carrier used by the enumerators: the first `n` of `a, b, c`.
pub fn enumeration_carrier(n: usize) -> FiniteSet {
    let labels = ["a", "b", "c"];
    FiniteSet::new(labels[..n].iter().copied()).expect("labels are distinct")
}

fn subsets(n: usize) -> Vec<BTreeSet<u16>> {
    (0..1u32 << n)
        .map(|mask| (0..n as u16).filter(|&i| mask & (1 << i) != 0).collect())
        .collect()
}

fn all_triples(n: usize) -> Vec<[u16; 3]> {
    let mut out = Vec::with_capacity(n * n * n);
    for x in 0..n as u16 {
        for y in 0..n as u16 {
            for z in 0..n as u16 {
                out.push([x, y, z]);
            }
        }
    }
    out
}

/// Every Frobenius object on an `n`-element carrier, by raw search over all
/// `2^(2n³+2n)` candidate quadruples.
///
/// This is the oracle: it trusts nothing but the axiom checker itself.
/// Feasible for `n ≤ 2`.
pub fn brute_force(n: usize) -> Result<Vec<FrobeniusObject>, EnumerateError> {
    if n > 2 {
        return Err(EnumerateError::TooLarge {
            n,
            max: 2,
            routine: "brute_force",
        });
    }
    let carrier = Arc::new(enumeration_carrier(n));
    let elements = subsets(n);
    let triples = all_triples(n);
    let triple_sets: Vec<BTreeSet<[u16; 3]>> = (0..1u32 << triples.len())
        .map(|mask| {
            triples
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, t)| *t)
                .collect()
        })
        .collect();

    let mut out = Vec::new();
    for eta in &elements {
        for mu in &triple_sets {
            // The unit axiom touches only η and μ; hoist it out of the
            // inner loops.
            let unit_probe = FrobeniusObject::from_indices(
                Arc::clone(&carrier),
                eta.clone(),
                BTreeSet::new(),
                mu.clone(),
                BTreeSet::new(),
            );
            if !unit_probe.check_unit().passes() {
                continue;
            }
            for epsilon in &elements {
                for delta in &triple_sets {
                    let f = FrobeniusObject::from_indices(
                        Arc::clone(&carrier),
                        eta.clone(),
                        epsilon.clone(),
                        mu.clone(),
                        delta.clone(),
                    );
                    if f.check_counit().passes() && f.check_frobenius().passes() {
                        out.push(f);
                    }
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

fn permutations(n: usize) -> Vec<Vec<u16>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for slot in 0..n {
            let mut perm = rest.clone();
            perm.insert(slot, (n - 1) as u16);
            out.push(perm);
        }
    }
    out
}

/// The rotation orbits of the triple space under
/// `(x, y, z) ↦ (y, α̂(z), α̂(x))`.
fn rotation_orbits(n: usize, alpha: &[u16]) -> Vec<Vec<[u16; 3]>> {
    let mut seen: BTreeSet<[u16; 3]> = BTreeSet::new();
    let mut orbits = Vec::new();
    for seed in all_triples(n) {
        if seen.contains(&seed) {
            continue;
        }
        let mut orbit = Vec::new();
        let mut current = seed;
        loop {
            orbit.push(current);
            seen.insert(current);
            current = [
                current[1],
                alpha[current[2] as usize],
                alpha[current[0] as usize],
            ];
            if current == seed {
                break;
            }
        }
        orbits.push(orbit);
    }
    orbits
}

/// Every Frobenius object on an `n`-element carrier, by pruned enumeration
/// of `(η, α̂, μ)` triples. Agrees with [`brute_force`] where both run;
/// feasible for `n ≤ 3`.
pub fn smart_enumerate(n: usize) -> Result<Vec<FrobeniusObject>, EnumerateError> {
    if n > 3 {
        return Err(EnumerateError::TooLarge {
            n,
            max: 3,
            routine: "smart_enumerate",
        });
    }
    let carrier = Arc::new(enumeration_carrier(n));
    if n == 0 {
        return Ok(vec![FrobeniusObject::empty()]);
    }

    let mut out: BTreeSet<FrobeniusObject> = BTreeSet::new();
    for eta in subsets(n) {
        // The unit axiom makes the identity relation factor through η-rows
        // of μ, so η must be nonempty on a nonempty carrier.
        if eta.is_empty() {
            continue;
        }
        for alpha in permutations(n) {
            let orbits = rotation_orbits(n, &alpha);
            // An orbit is unusable if any member breaks the unit axiom:
            // a triple (x, u, z) or (u, x, z) with u a unit and x ≠ z.
            let candidates: Vec<&Vec<[u16; 3]>> = orbits
                .iter()
                .filter(|orbit| {
                    orbit.iter().all(|&[x, y, z]| {
                        !(eta.contains(&y) && x != z) && !(eta.contains(&x) && y != z)
                    })
                })
                .collect();
            for mask in 0..1u32 << candidates.len() {
                let mut mu: BTreeSet<[u16; 3]> = BTreeSet::new();
                for (i, orbit) in candidates.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        mu.extend(orbit.iter().copied());
                    }
                }
                // Unit totality: every element needs a unit row on both
                // sides.
                let total = (0..n as u16).all(|x| {
                    eta.iter().any(|&u| mu.contains(&[x, u, x]))
                        && eta.iter().any(|&u| mu.contains(&[u, x, x]))
                });
                if !total {
                    continue;
                }
                let epsilon: BTreeSet<u16> = eta.iter().map(|&u| alpha[u as usize]).collect();
                let delta: BTreeSet<[u16; 3]> = mu
                    .iter()
                    .map(|&[x, y, z]| [y, alpha[x as usize], z])
                    .collect();
                let f = FrobeniusObject::from_indices(
                    Arc::clone(&carrier),
                    eta.clone(),
                    epsilon,
                    mu,
                    delta,
                );
                if f.verify().passes() {
                    out.insert(f);
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Quotient by isomorphism, keeping the first representative of each class
/// in input order — for canonically sorted input that is the least one.
pub fn up_to_iso(objects: &[FrobeniusObject]) -> Vec<FrobeniusObject> {
    let mut reps: Vec<FrobeniusObject> = Vec::new();
    for f in objects {
        if !reps.iter().any(|r| r.is_isomorphic(f).is_some()) {
            reps.push(f.clone());
        }
    }
    reps
}

/// Tallies of the named properties over a family of verified objects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Classification {
    pub total: usize,
    pub commutative: usize,
    pub special: usize,
    pub dagger: usize,
    pub special_and_dagger: usize,
    pub nontrivial_nakayama: usize,
}

/// Classifies verified objects; panics on unverified input, which would
/// have no rotation bijection to classify by.
pub fn classify(objects: &[FrobeniusObject]) -> Classification {
    let mut counts = Classification {
        total: objects.len(),
        ..Classification::default()
    };
    for f in objects {
        let special = f.is_special();
        let dagger = f.is_dagger();
        if f.is_commutative() {
            counts.commutative += 1;
        }
        if special {
            counts.special += 1;
        }
        if dagger {
            counts.dagger += 1;
        }
        if special && dagger {
            counts.special_and_dagger += 1;
        }
        let derived = f
            .extract_alpha()
            .expect("classification expects verified objects");
        if !derived.nakayama().is_identity() {
            counts.nontrivial_nakayama += 1;
        }
    }
    counts
}
