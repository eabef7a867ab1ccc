//! Small named semigroups used throughout the tests and by the command line tool.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::partial_bijection::PartialBijection;
use crate::semigroup::{close, CayleyTable, Closure, FiniteInverseSemigroup};
use crate::symbolic::atom_flip;

/// The symmetric inverse monoid `I_n`, elements in closure order.
pub fn symmetric_inverse_monoid(n: usize) -> Closure<PartialBijection> {
    close(&PartialBijection::all(n), usize::MAX).expect("I_n is closed by construction")
}

/// The cyclic group of order `n` acting on `n` points by rotation.
pub fn cyclic_group(n: usize) -> Closure<PartialBijection> {
    assert!(n > 0, "the cyclic group needs at least one point");
    let pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let rotation = PartialBijection::from_pairs(n, &pairs).expect("rotation is a bijection");
    close(&[rotation], n + 1).expect("a cyclic group of order n has n elements")
}

/// The chain `e0 > e1 > .. > e(k-1)` as a semilattice.
pub fn chain(k: usize) -> FiniteInverseSemigroup {
    let table = CayleyTable::from_fn(k, |a, b| a.max(b));
    let labels = (0..k).map(|i| format!("e{i}")).collect();
    FiniteInverseSemigroup::from_table(table, Some(labels)).expect("a chain is a semilattice")
}

/// `{0, id{0}, id{1}}` on two points: two incomparable atoms with no join.
pub fn two_atoms() -> Closure<PartialBijection> {
    let a = PartialBijection::identity_on(2, &[0]).expect("valid");
    let b = PartialBijection::identity_on(2, &[1]).expect("valid");
    close(&[a, b], 8).expect("three elements")
}

/// The truncation `F_n` of the atom-flip monoid.
pub fn atom_flip(n: usize) -> FiniteInverseSemigroup {
    atom_flip::truncate(n as u64)
}

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: String,
    pub semigroup: FiniteInverseSemigroup,
}

pub fn all_fixtures() -> Vec<Fixture> {
    let mut out = Vec::new();
    let mut push = |name: String, semigroup| out.push(Fixture { name, semigroup });
    for n in 1..=3 {
        push(format!("I_{n}"), symmetric_inverse_monoid(n).semigroup);
    }
    for n in 2..=3 {
        push(format!("Z_{n}"), cyclic_group(n).semigroup);
    }
    for k in 1..=4 {
        push(format!("chain_{k}"), chain(k));
    }
    push("two_atoms".into(), two_atoms().semigroup);
    for n in 0..=6 {
        push(format!("F_{n}"), atom_flip(n));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(symmetric_inverse_monoid(2).semigroup.order(), 7);
        assert_eq!(symmetric_inverse_monoid(3).semigroup.order(), 34);
        assert_eq!(cyclic_group(3).semigroup.order(), 3);
        assert!(cyclic_group(3).semigroup.is_group());
        assert_eq!(chain(4).identity(), Some(0));
        assert_eq!(chain(4).zero(), Some(3));
        assert_eq!(two_atoms().semigroup.order(), 3);
        assert_eq!(atom_flip(4).order(), 7);
    }
}
