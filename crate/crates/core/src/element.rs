use core::fmt;

use crate::error::Result;

/// A concrete element type of some inverse semigroup, with its own product.
///
/// This is the contract shared by partial bijections and the symbolic families;
/// [`close`](crate::close) turns any finite generating set of such elements into a
/// [`FiniteInverseSemigroup`](crate::FiniteInverseSemigroup).
pub trait SemigroupElement: Clone + Ord + fmt::Display {
    fn product(&self, rhs: &Self) -> Self;

    /// The unique `s*` with `s s* s = s` and `s* s s* = s*`.
    fn inverse(&self) -> Self;

    /// Checks that two elements live in the same ambient semigroup.
    fn check_compatible(&self, _other: &Self) -> Result<()> {
        Ok(())
    }

    fn is_idempotent(&self) -> bool {
        self.product(self) == *self
    }

    /// `self <= other` in the natural partial order: `other self* self = self`.
    fn natural_leq(&self, other: &Self) -> bool {
        other.product(&self.inverse().product(self)) == *self
    }
}
