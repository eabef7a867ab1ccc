//! Finite inverse semigroups, their groupoids of germs, and a finite-cover test for
//! Hausdorffness of the universal groupoid.
//!
//! Elements are indices into a verified Cayley table. Multiplication is composition
//! of partial maps: `mul(s, t)` applies `t` first. The natural partial order is
//! `s ≤ t` iff `s = t s*s`, and for every `s` the set `J_s = {e idempotent : s e = e}`
//! drives the criterion in [`criterion`].
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod criterion;
pub mod element;
pub mod error;
pub mod fixtures;
pub mod germ;
pub mod order;
pub mod partial_bijection;
pub mod properties;
pub mod semigroup;
pub mod symbolic;
pub mod union_find;

pub use criterion::{ConditionComparison, CriterionVerdict, Verdict, MAX_EXHAUSTIVE_J};
pub use element::SemigroupElement;
pub use error::{Error, Result};
pub use germ::{FiniteAction, Germ, GermGroupoid, PointSet};
pub use order::{Direction, ElementSet};
pub use partial_bijection::PartialBijection;
pub use properties::{Completeness, CompletenessViolation, UnitaryCheck, UnitaryVariant, DEFAULT_SUBSET_BUDGET};
pub use semigroup::{
    close, verify_inverse_semigroup, CayleyTable, Closure, FiniteInverseSemigroup, Violation, DEFAULT_CLOSURE_BUDGET,
};
