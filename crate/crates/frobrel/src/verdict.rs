//! Pass/fail results that carry their own counterexamples.

use std::fmt;

use crate::rel::Relation;

/// The outcome of a law check: either the law holds, or it fails with a
/// named violation and a concrete witness tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Violation),
}

/// A failed law together with the offending tuple of labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Which law failed, in plain words.
    pub law: String,
    /// The smallest witness tuple, as labels.
    pub witness: Vec<String>,
}

impl Verdict {
    pub fn fail(law: impl Into<String>, witness: Vec<String>) -> Verdict {
        Verdict::Fail(Violation {
            law: law.into(),
            witness,
        })
    }

    pub fn passes(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn violation(&self) -> Option<&Violation> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(v) => Some(v),
        }
    }

    /// Short-circuit conjunction: keeps the first failure.
    pub fn and(self, next: impl FnOnce() -> Verdict) -> Verdict {
        match self {
            Verdict::Pass => next(),
            fail => fail,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "ok"),
            Verdict::Fail(v) => write!(f, "{v}"),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at ({})", self.law, self.witness.join(", "))
    }
}

/// Compares two relations and reports the lexicographically least tuple in
/// their symmetric difference on failure.
pub(crate) fn relations_equal(law: &str, left: &Relation, right: &Relation) -> Verdict {
    if left == right {
        return Verdict::Pass;
    }
    let diff = left
        .index_pairs()
        .symmetric_difference(right.index_pairs())
        .min()
        .expect("unequal relations have a nonempty symmetric difference");
    let carrier = left.carrier();
    let witness = diff
        .0
        .iter()
        .chain(diff.1.iter())
        .map(|&i| carrier.label(i as usize).to_owned())
        .collect();
    Verdict::fail(law, witness)
}

/// Folds several verdicts, keeping the failure with the least witness so
/// that counterexample reporting is deterministic.
pub(crate) fn least_failure(verdicts: impl IntoIterator<Item = Verdict>) -> Verdict {
    let mut best: Option<Violation> = None;
    for verdict in verdicts {
        if let Verdict::Fail(v) = verdict {
            let replace = match &best {
                None => true,
                Some(b) => v.witness < b.witness,
            };
            if replace {
                best = Some(v);
            }
        }
    }
    match best {
        None => Verdict::Pass,
        Some(v) => Verdict::Fail(v),
    }
}
