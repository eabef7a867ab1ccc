//! Natural partial order, up/down closures, compatibility and joins.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::semigroup::FiniteInverseSemigroup;

/// A set of element indices. Ordered, so iteration is deterministic.
pub type ElementSet = BTreeSet<usize>;

/// Which way [`FiniteInverseSemigroup::up_set`] closes a set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `A^≤ = { b : a ≤ b for some a in A }`
    Up,
    /// `A^≥ = { b : a ≥ b for some a in A }`
    Down,
}

impl FiniteInverseSemigroup {
    /// `s ≤ t` iff `t s* s = s`, evaluated from the table rather than the cache.
    pub fn natural_leq(&self, s: usize, t: usize) -> bool {
        self.mul(t, self.mul(self.inv(s), s)) == s
    }

    pub fn up_set(&self, set: &ElementSet, direction: Direction) -> ElementSet {
        self.elements()
            .filter(|&b| {
                set.iter().any(|&a| match direction {
                    Direction::Up => self.leq(a, b),
                    Direction::Down => self.leq(b, a),
                })
            })
            .collect()
    }

    /// `F^≥`: everything below some member of `set`.
    pub fn down_closure(&self, set: &ElementSet) -> ElementSet {
        self.up_set(set, Direction::Down)
    }

    /// Maximal members of `set` under the natural order.
    pub fn maximal_elements(&self, set: &ElementSet) -> ElementSet {
        set.iter().copied().filter(|&a| !set.iter().any(|&b| b != a && self.leq(a, b))).collect()
    }

    /// `J_s = { e idempotent : s e = e }`.
    pub fn j_set(&self, s: usize) -> ElementSet {
        self.idempotents().iter().copied().filter(|&e| self.mul(s, e) == e).collect()
    }

    /// Both `s* t` and `s t*` are idempotent.
    pub fn compatible(&self, s: usize, t: usize) -> bool {
        self.is_idempotent(self.mul(self.inv(s), t)) && self.is_idempotent(self.mul(s, self.inv(t)))
    }

    pub fn is_pairwise_compatible(&self, set: &ElementSet) -> bool {
        set.iter().all(|&a| set.range(a..).all(|&b| self.compatible(a, b)))
    }

    /// Least upper bound of a pairwise compatible set, if one exists in `S`.
    ///
    /// The empty set's join is the least element, when there is one.
    pub fn join(&self, set: &ElementSet) -> Result<Option<usize>> {
        if let Some((a, b)) = self.incompatible_pair(set) {
            return Err(Error::Contract(format!("elements {a} and {b} are not compatible")));
        }
        Ok(self.least_upper_bound(set))
    }

    pub(crate) fn least_upper_bound(&self, set: &ElementSet) -> Option<usize> {
        let uppers: Vec<usize> = self.elements().filter(|&u| set.iter().all(|&a| self.leq(a, u))).collect();
        uppers.iter().copied().find(|&u| uppers.iter().all(|&v| self.leq(u, v)))
    }

    fn incompatible_pair(&self, set: &ElementSet) -> Option<(usize, usize)> {
        for &a in set {
            for &b in set.range(a..) {
                if !self.compatible(a, b) {
                    return Some((a, b));
                }
            }
        }
        None
    }
}
