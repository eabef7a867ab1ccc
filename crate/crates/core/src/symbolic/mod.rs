//! Countable inverse semigroups with decidable normal forms, and closed-form
//! verdicts for the finite-cover criterion on them.
//!
//! Free inverse monoids and graph inverse semigroups are E*-unitary, so every
//! `J_s` is either `{s}^≥` (for idempotent `s`) or trivial, and a witness of size at
//! most one always exists. The atom-flip family is the opposite: `J_FLIP` has
//! infinitely many maximal elements.

pub mod atom_flip;
pub mod graph;
pub mod munn;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::element::SemigroupElement;
use crate::error::{Error, Result};
use crate::semigroup::FiniteInverseSemigroup;

pub use atom_flip::AtomFlip;
pub use graph::{Graph, Path, PathPair};
pub use munn::{Letter, MunnTree};

/// Which countable family an element belongs to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    FreeInverseMonoid { rank: u32 },
    GraphInverse(Graph),
    AtomFlip,
}

impl Family {
    pub fn id(&self) -> &'static str {
        match self {
            Family::FreeInverseMonoid { .. } => "munn",
            Family::GraphInverse(_) => "graph",
            Family::AtomFlip => "atom-flip",
        }
    }
}

/// An element of one of the three families.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum SymbolicElement {
    Munn(MunnTree),
    PathPair(PathPair),
    AtomFlip(AtomFlip),
}

impl fmt::Display for SymbolicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymbolicElement::Munn(t) => t.fmt(f),
            SymbolicElement::PathPair(p) => p.fmt(f),
            SymbolicElement::AtomFlip(a) => a.fmt(f),
        }
    }
}

/// An injection `i ↦ member(i)`, `i ≥ 1`, into the idempotents of `J_s`.
#[derive(Debug, Clone)]
pub struct AntichainGenerator {
    pub description: String,
    member: fn(u64) -> SymbolicElement,
}

impl PartialEq for AntichainGenerator {
    fn eq(&self, other: &Self) -> bool {
        self.description == other.description && (1..=4).all(|i| self.member(i) == other.member(i))
    }
}

impl Eq for AntichainGenerator {}

impl AntichainGenerator {
    pub fn member(&self, i: u64) -> SymbolicElement {
        (self.member)(i)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymbolicVerdict {
    HausdorffWitness(Vec<SymbolicElement>),
    /// `J_s` contains an infinite antichain of maximal elements.
    Refuted(AntichainGenerator),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicCriterionReport {
    pub family: &'static str,
    pub element: SymbolicElement,
    pub j_set_description: String,
    pub verdict: SymbolicVerdict,
}

impl SymbolicCriterionReport {
    pub fn witness(&self) -> Option<&[SymbolicElement]> {
        match &self.verdict {
            SymbolicVerdict::HausdorffWitness(f) => Some(f),
            SymbolicVerdict::Refuted(_) => None,
        }
    }
}

/// Free inverse monoids are E-unitary: an idempotent below `s` forces `s` to be
/// idempotent, so `J_s` is empty unless `s` is, and then `J_s = {s}^≥`.
pub fn munn_criterion(s: &MunnTree) -> SymbolicCriterionReport {
    let (j_set_description, witness) = if s.is_idempotent() {
        (format!("all idempotents ≤ {s}"), vec![SymbolicElement::Munn(s.clone())])
    } else {
        ("∅".to_string(), Vec::new())
    };
    SymbolicCriterionReport {
        family: "munn",
        element: SymbolicElement::Munn(s.clone()),
        j_set_description,
        verdict: SymbolicVerdict::HausdorffWitness(witness),
    }
}

/// Graph inverse semigroups are E*-unitary: `J_{pq*} = {0}` when `p ≠ q`.
pub fn graph_criterion(s: &PathPair) -> SymbolicCriterionReport {
    let (j_set_description, witness) = if s.is_idempotent() {
        let description = if s.is_zero() { "{ZERO}".to_string() } else { format!("all idempotents ≤ {s}") };
        (description, s.clone())
    } else {
        ("{ZERO}".to_string(), PathPair::Zero)
    };
    SymbolicCriterionReport {
        family: "graph",
        element: SymbolicElement::PathPair(s.clone()),
        j_set_description,
        verdict: SymbolicVerdict::HausdorffWitness(vec![SymbolicElement::PathPair(witness)]),
    }
}

fn atom_member(i: u64) -> SymbolicElement {
    SymbolicElement::AtomFlip(AtomFlip::Atom(i))
}

/// The atom-flip verdict. Untruncated, `FLIP` is refuted by `i ↦ ATOM(i)`; in `F_n`
/// the witness for `FLIP` is the `n` atoms (or `{ZERO}` when `n = 0`). Idempotents
/// are their own witness.
pub fn atomflip_criterion(s: AtomFlip, truncation: Option<u64>) -> Result<SymbolicCriterionReport> {
    atom_flip::check_member(s, truncation)?;
    let verdict = match (s, truncation) {
        (AtomFlip::Flip, None) => SymbolicVerdict::Refuted(AntichainGenerator {
            description: "i ↦ ATOM(i), i ≥ 1".to_string(),
            member: atom_member,
        }),
        (AtomFlip::Flip, Some(0)) => SymbolicVerdict::HausdorffWitness(vec![SymbolicElement::AtomFlip(AtomFlip::Zero)]),
        (AtomFlip::Flip, Some(n)) => SymbolicVerdict::HausdorffWitness((1..=n).map(atom_member).collect()),
        (e, _) => SymbolicVerdict::HausdorffWitness(vec![SymbolicElement::AtomFlip(e)]),
    };
    Ok(SymbolicCriterionReport {
        family: "atom-flip",
        element: SymbolicElement::AtomFlip(s),
        j_set_description: atom_flip::describe_j(s, truncation),
        verdict,
    })
}

/// Why a proposed antichain is not one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AntichainViolation {
    NotIdempotent { index: u64 },
    NotInJ { index: u64 },
    ProductNotZero { i: u64, j: u64 },
    NotMaximal { index: u64 },
    NotInjective { i: u64, j: u64 },
}

/// Checks members `1..=window` of an antichain for `subject`: each is an idempotent
/// of `J_subject`, pairwise products are `zero`, and none lies strictly below another
/// member of `J_subject` drawn from `idempotents` other than itself.
pub fn verify_antichain<T, F>(
    subject: &T,
    member: F,
    window: u64,
    idempotents: &[T],
    zero: &T,
) -> Result<(), AntichainViolation>
where
    T: SemigroupElement,
    F: Fn(u64) -> T,
{
    let members: Vec<T> = (1..=window).map(&member).collect();
    for (k, a) in members.iter().enumerate() {
        let index = k as u64 + 1;
        if !a.is_idempotent() {
            return Err(AntichainViolation::NotIdempotent { index });
        }
        if subject.product(a) != *a {
            return Err(AntichainViolation::NotInJ { index });
        }
        for e in idempotents {
            if e != a && subject.product(e) == *e && a.natural_leq(e) {
                return Err(AntichainViolation::NotMaximal { index });
            }
        }
        for (l, b) in members.iter().enumerate().skip(k + 1) {
            let j = l as u64 + 1;
            if a == b {
                return Err(AntichainViolation::NotInjective { i: index, j });
            }
            if a.product(b) != *zero || b.product(a) != *zero {
                return Err(AntichainViolation::ProductNotZero { i: index, j });
            }
        }
    }
    Ok(())
}

/// A bounded piece of a family: the atom-flip truncation is a genuine finite
/// semigroup; Munn and path pools are plain element sets, not closed under anything.
#[derive(Debug, Clone)]
pub enum Truncation {
    Semigroup(FiniteInverseSemigroup),
    MunnPool(Vec<MunnTree>),
    PathPool(Vec<PathPair>),
}

impl Truncation {
    pub fn is_semigroup(&self) -> bool {
        matches!(self, Truncation::Semigroup(_))
    }
}

/// `n` is the atom count, the Munn vertex bound or the path-length bound.
pub fn truncate(family: &Family, n: usize) -> Truncation {
    match family {
        Family::AtomFlip => Truncation::Semigroup(atom_flip::truncate(n as u64)),
        Family::FreeInverseMonoid { rank } => Truncation::MunnPool(MunnTree::pool(*rank, n)),
        Family::GraphInverse(g) => Truncation::PathPool(g.pool(n)),
    }
}

/// Like [`truncate`], but only for families whose truncations are semigroups.
pub fn truncate_semigroup(family: &Family, n: usize) -> Result<FiniteInverseSemigroup> {
    match truncate(family, n) {
        Truncation::Semigroup(s) => Ok(s),
        _ => Err(Error::Contract(format!(
            "the {} family has no finite truncation closed under multiplication",
            family.id()
        ))),
    }
}

/// First pool element `s` that is not idempotent yet fixes a nonzero idempotent of
/// the pool (`s e = e`).
pub fn unitarity_violation<T: SemigroupElement>(pool: &[T], zero: Option<&T>) -> Option<(T, T)> {
    let idempotents: Vec<&T> = pool.iter().filter(|e| e.is_idempotent() && Some(*e) != zero).collect();
    pool.iter()
        .filter(|s| !s.is_idempotent())
        .find_map(|s| idempotents.iter().find(|e| s.product(e) == ***e).map(|e| (s.clone(), (*e).clone())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::close;

    fn munn(text: &str) -> MunnTree {
        MunnTree::parse(text, Some(2)).unwrap()
    }

    #[test]
    fn munn_verdicts() {
        let x = munn("x");
        let r = munn_criterion(&x);
        assert_eq!(r.witness(), Some(&[][..]));
        assert_eq!(r.j_set_description, "∅");
        // brute force over every tree with at most 3 vertices: nothing in J_x
        for e in MunnTree::pool(2, 3).into_iter().filter(|e| e.is_idempotent()) {
            assert_ne!(x.product(&e), e);
        }
        for text in ["x x^-1", "x x^-1 y y^-1"] {
            let s = munn(text);
            let r = munn_criterion(&s);
            assert_eq!(r.witness(), Some(&[SymbolicElement::Munn(s.clone())][..]));
            // J_s inside the pool is exactly what lies below s
            for e in MunnTree::pool(2, 3).into_iter().filter(|e| e.is_idempotent()) {
                assert_eq!(s.product(&e) == e, e.natural_leq(&s));
            }
        }
    }

    #[test]
    fn graph_verdicts() {
        let g = Graph::parse("1>2, 2>2, 1>2").unwrap();
        let s = g.parse_element("p=e1, q=e3").unwrap();
        let r = graph_criterion(&s);
        assert_eq!(r.witness(), Some(&[SymbolicElement::PathPair(PathPair::Zero)][..]));
        for e in g.pool(3).into_iter().filter(|e| e.is_idempotent() && !e.is_zero()) {
            assert_ne!(s.product(&e), e);
        }
        let e = g.parse_element("p=e1, q=e1").unwrap();
        assert_eq!(graph_criterion(&e).witness(), Some(&[SymbolicElement::PathPair(e.clone())][..]));
        assert_eq!(graph_criterion(&PathPair::Zero).witness(), Some(&[SymbolicElement::PathPair(PathPair::Zero)][..]));
    }

    #[test]
    fn atom_flip_verdicts() {
        let r = atomflip_criterion(AtomFlip::Flip, None).unwrap();
        let SymbolicVerdict::Refuted(gen) = &r.verdict else { panic!("expected refutation") };
        assert_eq!(gen.member(4), SymbolicElement::AtomFlip(AtomFlip::Atom(4)));

        let r = atomflip_criterion(AtomFlip::Flip, Some(3)).unwrap();
        assert_eq!(r.witness().unwrap().len(), 3);
        let r = atomflip_criterion(AtomFlip::Square, None).unwrap();
        assert_eq!(r.witness(), Some(&[SymbolicElement::AtomFlip(AtomFlip::Square)][..]));
        assert!(atomflip_criterion(AtomFlip::Atom(5), Some(3)).is_err());
    }

    #[test]
    fn atom_antichain_verifies() {
        let n = 16;
        let idempotents: Vec<AtomFlip> =
            AtomFlip::truncation(n + 1).into_iter().filter(|e| e.is_idempotent()).collect();
        verify_antichain(&AtomFlip::Flip, AtomFlip::Atom, n, &idempotents, &AtomFlip::Zero).unwrap();
        // SQUARE is not in J_FLIP, and neither is FLIP itself
        assert_eq!(
            verify_antichain(&AtomFlip::Flip, |_| AtomFlip::Square, 1, &idempotents, &AtomFlip::Zero),
            Err(AntichainViolation::NotInJ { index: 1 })
        );
        assert_eq!(
            verify_antichain(&AtomFlip::Square, AtomFlip::Atom, 2, &idempotents, &AtomFlip::Zero),
            Err(AntichainViolation::NotMaximal { index: 1 })
        );
        assert_eq!(
            verify_antichain(&AtomFlip::Flip, |_| AtomFlip::Atom(1), 2, &idempotents, &AtomFlip::Zero),
            Err(AntichainViolation::NotInjective { i: 1, j: 2 })
        );
    }

    #[test]
    fn truncation_kinds() {
        assert!(truncate(&Family::AtomFlip, 2).is_semigroup());
        match truncate(&Family::FreeInverseMonoid { rank: 2 }, 1) {
            Truncation::MunnPool(p) => assert_eq!(p, vec![MunnTree::identity(2)]),
            other => panic!("{other:?}"),
        }
        let g = Graph::parse("1>2").unwrap();
        assert!(truncate_semigroup(&Family::GraphInverse(g), 2).is_err());
        assert!(truncate_semigroup(&Family::FreeInverseMonoid { rank: 1 }, 2).is_err());
        assert_eq!(truncate_semigroup(&Family::AtomFlip, 2).unwrap().order(), 5);
    }

    #[test]
    fn acyclic_graph_semigroup_closes() {
        // finite graph inverse semigroup: closing edge generators gives an inverse
        // semigroup whose table order and inverse agree with the element operations
        let g = Graph::parse("1>2, 2>3, 1>3").unwrap();
        let c = close(&g.edge_generators(), 1000).unwrap();
        let s = &c.semigroup;
        assert!(crate::verify_inverse_semigroup(s.table()).is_ok());
        for a in s.elements() {
            assert_eq!(c.elements[s.inv(a)], c.elements[a].inverse());
            assert_eq!(s.is_idempotent(a), c.elements[a].is_idempotent());
            for b in s.elements() {
                assert_eq!(s.leq(a, b), c.elements[a].natural_leq(&c.elements[b]));
            }
        }
        assert!(s.is_e_star_unitary().holds());
        assert!(s.zero().is_some());
    }

    #[test]
    fn free_inverse_closure_exceeds_budget() {
        let x = MunnTree::generator(1, 0).unwrap();
        assert_eq!(close(&[x], 50).unwrap_err(), Error::BudgetExceeded { budget: 50 });
    }

    #[test]
    fn unitarity_scan_catches_atom_flip() {
        let pool = AtomFlip::truncation(2);
        assert_eq!(unitarity_violation(&pool, Some(&AtomFlip::Zero)), Some((AtomFlip::Flip, AtomFlip::Atom(1))));
    }
}
