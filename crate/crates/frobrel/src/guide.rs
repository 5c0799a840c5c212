//! The user guide, compiled straight from the book sources.
//!
//! Every chapter of the mdbook under `book/` is included here as module
//! documentation, so `cargo test --doc` builds and runs each code listing
//! in the book. A listing that drifts away from the live API breaks the
//! build instead of rotting quietly.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/relations.md")]
pub mod relations {}

#[doc = include_str!("../../../book/src/frobenius-objects.md")]
pub mod frobenius_objects {}

#[doc = include_str!("../../../book/src/derived-structure.md")]
pub mod derived_structure {}

#[doc = include_str!("../../../book/src/duals.md")]
pub mod duals {}

#[doc = include_str!("../../../book/src/simplicial-sets.md")]
pub mod simplicial_sets {}

#[doc = include_str!("../../../book/src/correspondence.md")]
pub mod correspondence {}

#[doc = include_str!("../../../book/src/groupoids.md")]
pub mod groupoids {}

#[doc = include_str!("../../../book/src/exterior-algebras.md")]
pub mod exterior_algebras {}

#[doc = include_str!("../../../book/src/terms.md")]
pub mod terms {}

#[doc = include_str!("../../../book/src/enumeration.md")]
pub mod enumeration {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
