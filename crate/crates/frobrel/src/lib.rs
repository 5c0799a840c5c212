//! Exact computations with finite Frobenius objects in the category of
//! relations.
//!
//! A Frobenius object here is a finite carrier set with four relations —
//! unit, counit, multiplication, comultiplication — satisfying the unit,
//! counit, and Frobenius laws as equalities of composite relations. Over
//! finite carriers every law is decidable by exhaustive comparison, and
//! this crate decides all of them exactly: there is no numeric tolerance
//! anywhere.
//!
//! The modules follow the mathematics:
//!
//! * [`rel`] — finite sets, relations between powers of a carrier, and
//!   bijection extraction; the ambient category.
//! * [`frobenius`] — the object type, the axiom checks with
//!   counterexamples, derived structure (rotation bijection, source and
//!   target maps, Nakayama automorphism), duals, and isomorphism search.
//! * [`simplicial`] — 2-truncated simplicial sets with explicit tables,
//!   their validation, and the three properties characterizing the
//!   structures that correspond to Frobenius objects.
//! * [`correspondence`] — both directions of that correspondence and the
//!   round-trip laws.
//! * [`groupoid`] — finite groupoids, nerves, the induced special dagger
//!   objects, and a catalog of all groupoids with at most six arrows.
//! * [`exterior`] — signed monomials of an exterior algebra, the Hodge
//!   star, and the finite Frobenius objects they generate, including the
//!   torus example with its nontrivial Nakayama automorphism.
//! * [`term`] — a parser and structural evaluator for cobordism-style
//!   terms, with closed-surface invariants.
//! * [`enumerate`] — exhaustive search on small carriers by two
//!   independent routes, with classification up to isomorphism.
//! * [`files`] — the JSON formats shared with the `frobrel` command line.
//!
//! The [`guide`] module mirrors the mdbook under `book/`; its chapters are
//! doc-tested, so the narrative documentation stays in sync with the API.

pub mod correspondence;
pub mod enumerate;
pub mod exterior;
pub mod files;
pub mod frobenius;
pub mod groupoid;
pub mod guide;
pub mod rel;
pub mod simplicial;
pub mod term;
pub mod verdict;

#[cfg(test)]
pub(crate) mod fixtures;

pub use frobenius::FrobeniusObject;
pub use groupoid::Groupoid;
pub use rel::{Bijection, FiniteSet, Relation};
pub use simplicial::{AlphaSimplicial, TruncSimplicialSet2};
pub use verdict::Verdict;
