//! Shared test fixtures.

use crate::frobenius::FrobeniusObject;
use crate::rel::FiniteSet;

/// The two-element object with carrier {1, v}: unit {1}, counit {v},
/// multiplication {(1,1,1), (1,v,v), (v,1,v)}, and comultiplication
/// {(1,v,1), (1,1,v), (v,v,v)}.
pub(crate) fn one_volume_pair() -> FrobeniusObject {
    FrobeniusObject::new(
        FiniteSet::new(["1", "v"]).unwrap(),
        ["1"],
        ["v"],
        [["1", "1", "1"], ["1", "v", "v"], ["v", "1", "v"]],
        [["1", "v", "1"], ["1", "1", "v"], ["v", "v", "v"]],
    )
    .unwrap()
}
