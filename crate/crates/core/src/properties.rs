//! Whole-semigroup property checks: completeness with infinite distributivity, and
//! E*-unitarity.

use alloc::vec::Vec;

use crate::order::ElementSet;
use crate::semigroup::FiniteInverseSemigroup;

/// Default cap on compatible subsets visited by the completeness check.
pub const DEFAULT_SUBSET_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompletenessViolation {
    /// A pairwise compatible set with no least upper bound.
    MissingJoin { set: ElementSet },
    /// `s (⋁ A) ≠ ⋁ { s a }`.
    LeftDistributivity { s: usize, set: ElementSet },
    /// `(⋁ A) s ≠ ⋁ { a s }`.
    RightDistributivity { s: usize, set: ElementSet },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Completeness {
    Holds { subsets_checked: usize },
    Fails(CompletenessViolation),
    Inconclusive { budget: usize },
}

impl Completeness {
    pub fn holds(&self) -> bool {
        matches!(self, Completeness::Holds { .. })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitaryVariant {
    /// With zero: `J_s ≠ {0}` forces `s` idempotent.
    EStar,
    /// No zero present: `J_s ≠ ∅` forces `s` idempotent.
    E,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnitaryCheck {
    pub variant: UnitaryVariant,
    pub violation: Option<usize>,
}

impl UnitaryCheck {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

impl FiniteInverseSemigroup {
    /// Every non-empty pairwise compatible subset has a join, and left and right
    /// multiplication distribute over it.
    ///
    /// Subsets are enumerated as cliques of the compatibility relation in index order;
    /// at most `budget` of them are visited.
    pub fn is_complete_and_distributive(&self, budget: Option<usize>) -> Completeness {
        let m = self.order();
        let compat: Vec<Vec<bool>> =
            self.elements().map(|a| self.elements().map(|b| self.compatible(a, b)).collect()).collect();
        let mut search = CliqueSearch {
            semigroup: self,
            compat: &compat,
            budget: budget.unwrap_or(usize::MAX),
            visited: 0,
            stack: Vec::new(),
        };
        for start in 0..m {
            if let Err(outcome) = search.extend(start) {
                return outcome;
            }
        }
        Completeness::Holds { subsets_checked: search.visited }
    }

    /// Monoid, complete and infinitely distributive.
    pub fn is_abstract_pseudogroup(&self, budget: Option<usize>) -> bool {
        self.is_monoid() && self.is_complete_and_distributive(budget).holds()
    }

    /// E*-unitary when a zero exists, otherwise the E-unitary variant.
    pub fn is_e_star_unitary(&self) -> UnitaryCheck {
        let variant = match self.zero() {
            Some(_) => UnitaryVariant::EStar,
            None => UnitaryVariant::E,
        };
        let violation = self.elements().find(|&s| {
            if self.is_idempotent(s) {
                return false;
            }
            let j = self.j_set(s);
            match self.zero() {
                Some(z) => j.iter().any(|&e| e != z),
                None => !j.is_empty(),
            }
        });
        UnitaryCheck { variant, violation }
    }

    fn check_join(&self, set: &ElementSet) -> Result<(), CompletenessViolation> {
        let Some(join) = self.least_upper_bound(set) else {
            return Err(CompletenessViolation::MissingJoin { set: set.clone() });
        };
        for s in self.elements() {
            let left: ElementSet = set.iter().map(|&a| self.mul(s, a)).collect();
            if self.least_upper_bound(&left) != Some(self.mul(s, join)) {
                return Err(CompletenessViolation::LeftDistributivity { s, set: set.clone() });
            }
            let right: ElementSet = set.iter().map(|&a| self.mul(a, s)).collect();
            if self.least_upper_bound(&right) != Some(self.mul(join, s)) {
                return Err(CompletenessViolation::RightDistributivity { s, set: set.clone() });
            }
        }
        Ok(())
    }
}

struct CliqueSearch<'a> {
    semigroup: &'a FiniteInverseSemigroup,
    compat: &'a [Vec<bool>],
    budget: usize,
    visited: usize,
    stack: Vec<usize>,
}

impl CliqueSearch<'_> {
    /// Pushes `next`, checks the resulting clique and recurses on larger indices.
    fn extend(&mut self, next: usize) -> Result<(), Completeness> {
        if self.visited == self.budget {
            return Err(Completeness::Inconclusive { budget: self.budget });
        }
        self.visited += 1;
        self.stack.push(next);
        let set: ElementSet = self.stack.iter().copied().collect();
        self.semigroup.check_join(&set).map_err(Completeness::Fails)?;
        for candidate in next + 1..self.compat.len() {
            if self.stack.iter().all(|&a| self.compat[a][candidate]) {
                self.extend(candidate)?;
            }
        }
        self.stack.pop();
        Ok(())
    }
}
