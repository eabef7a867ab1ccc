//! Finite inverse semigroups as multiplication tables, and their closure from
//! generators.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::element::SemigroupElement;
use crate::error::{Error, Result};

/// Default element budget for [`close`].
pub const DEFAULT_CLOSURE_BUDGET: usize = 4096;

/// A raw `m x m` multiplication table over element indices `0..m`.
///
/// Nothing beyond shape is assumed; [`verify_inverse_semigroup`] decides the rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    order: usize,
    cells: Vec<usize>,
}

impl CayleyTable {
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let order = rows.len();
        let mut cells = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidTable(format!("row {i} has {} entries, expected {order}", row.len())));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(Error::InvalidTable(format!("entry ({i},{j}) = {v} is not an element index")));
                }
                cells.push(v);
            }
        }
        Ok(CayleyTable { order, cells })
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        let mut cells = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                let v = f(a, b);
                assert!(v < order, "product ({a},{b}) = {v} out of range");
                cells.push(v);
            }
        }
        CayleyTable { order, cells }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn product(&self, a: usize, b: usize) -> usize {
        self.cells[a * self.order + b]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells.chunks(self.order.max(1)).take(self.order).map(|r| r.to_vec()).collect()
    }
}

/// Why a table failed [`verify_inverse_semigroup`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    NotAssociative {
        a: usize,
        b: usize,
        c: usize,
    },
    /// No `t` with `sts = s` and `tst = t`.
    NoInverse {
        element: usize,
    },
    /// Two distinct `t` satisfy the inverse equations for `element`.
    MultipleInverses {
        element: usize,
        first: usize,
        second: usize,
    },
}

/// Checks associativity and unique generalised inverses exhaustively.
///
/// On success returns the inverse map `s ↦ s*`.
pub fn verify_inverse_semigroup(table: &CayleyTable) -> Result<Vec<usize>, Violation> {
    let m = table.order();
    let p = |a, b| table.product(a, b);
    for a in 0..m {
        for b in 0..m {
            let ab = p(a, b);
            for c in 0..m {
                if p(ab, c) != p(a, p(b, c)) {
                    return Err(Violation::NotAssociative { a, b, c });
                }
            }
        }
    }
    let mut inverse = Vec::with_capacity(m);
    for s in 0..m {
        let mut found = None;
        for t in 0..m {
            if p(p(s, t), s) == s && p(p(t, s), t) == t {
                match found {
                    None => found = Some(t),
                    Some(first) => return Err(Violation::MultipleInverses { element: s, first, second: t }),
                }
            }
        }
        inverse.push(found.ok_or(Violation::NoInverse { element: s })?);
    }
    Ok(inverse)
}

/// A finite inverse semigroup with precomputed inverse, idempotents, natural order
/// and zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteInverseSemigroup {
    table: CayleyTable,
    inverse: Vec<usize>,
    idempotent: Vec<bool>,
    idempotents: Vec<usize>,
    leq: Vec<bool>,
    zero: Option<usize>,
    identity: Option<usize>,
    labels: Option<Vec<String>>,
}

impl FiniteInverseSemigroup {
    /// Validates `table` and builds the derived structure.
    pub fn from_table(table: CayleyTable, labels: Option<Vec<String>>) -> Result<Self> {
        let inverse = verify_inverse_semigroup(&table).map_err(|v| Error::InvalidTable(format!("{v:?}")))?;
        Self::from_parts(table, inverse, labels)
    }

    /// Builds from a table already known to be inverse, with its inverse map.
    pub(crate) fn from_parts(table: CayleyTable, inverse: Vec<usize>, labels: Option<Vec<String>>) -> Result<Self> {
        let m = table.order();
        if m == 0 {
            return Err(Error::InvalidTable("empty semigroup".to_string()));
        }
        if let Some(l) = &labels {
            if l.len() != m {
                return Err(Error::InvalidTable(format!("{} labels for {m} elements", l.len())));
            }
        }
        let idempotent: Vec<bool> = (0..m).map(|e| table.product(e, e) == e).collect();
        let idempotents = (0..m).filter(|&e| idempotent[e]).collect();
        let mut leq = vec![false; m * m];
        for s in 0..m {
            let source = table.product(inverse[s], s);
            for t in 0..m {
                leq[s * m + t] = table.product(t, source) == s;
            }
        }
        let zero = (0..m).find(|&z| (0..m).all(|x| table.product(z, x) == z && table.product(x, z) == z));
        let identity = (0..m).find(|&u| (0..m).all(|x| table.product(u, x) == x && table.product(x, u) == x));
        Ok(FiniteInverseSemigroup { table, inverse, idempotent, idempotents, leq, zero, identity, labels })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.table.order()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table.product(a, b)
    }

    #[inline]
    pub fn inv(&self, s: usize) -> usize {
        self.inverse[s]
    }

    #[inline]
    pub fn is_idempotent(&self, e: usize) -> bool {
        self.idempotent[e]
    }

    /// Idempotent indices in increasing order.
    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    /// The natural partial order, precomputed: `t s* s = s`.
    #[inline]
    pub fn leq(&self, s: usize, t: usize) -> bool {
        self.leq[s * self.order() + t]
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn is_monoid(&self) -> bool {
        self.identity.is_some()
    }

    pub fn is_group(&self) -> bool {
        self.idempotents.len() == 1
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The label of `s`, or its index when unlabelled.
    pub fn label(&self, s: usize) -> String {
        match &self.labels {
            Some(l) => l[s].clone(),
            None => s.to_string(),
        }
    }

    /// Index of the element carrying `label`, if labelled.
    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.order()
    }

    /// `sS = { s x : x in S }`, sorted.
    pub fn right_ideal(&self, s: usize) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        for x in self.elements() {
            seen[self.mul(s, x)] = true;
        }
        (0..self.order()).filter(|&y| seen[y]).collect()
    }
}

/// The result of [`close`]: the table plus the concrete element behind each index.
#[derive(Debug, Clone)]
pub struct Closure<T> {
    pub semigroup: FiniteInverseSemigroup,
    pub elements: Vec<T>,
}

impl<T: SemigroupElement> Closure<T> {
    pub fn index_of(&self, element: &T) -> Option<usize> {
        self.elements.iter().position(|e| e == element)
    }
}

/// The inverse subsemigroup generated by `generators`.
///
/// Elements are indexed breadth-first: the generators in the given order, then their
/// inverses, then right multiples `element[k] * g` for `k = 0, 1, ..` and `g` ranging
/// over that seed list. Fails with [`Error::BudgetExceeded`] once more than `budget`
/// elements appear.
pub fn close<T: SemigroupElement>(generators: &[T], budget: usize) -> Result<Closure<T>> {
    let first = generators.first().ok_or(Error::EmptyGenerators)?;
    for g in generators {
        first.check_compatible(g)?;
    }

    let mut index: BTreeMap<T, usize> = BTreeMap::new();
    let mut elements: Vec<T> = Vec::new();
    let insert = |x: T, index: &mut BTreeMap<T, usize>, elements: &mut Vec<T>| -> Result<()> {
        if !index.contains_key(&x) {
            if elements.len() == budget {
                return Err(Error::BudgetExceeded { budget });
            }
            index.insert(x.clone(), elements.len());
            elements.push(x);
        }
        Ok(())
    };

    for g in generators {
        insert(g.clone(), &mut index, &mut elements)?;
    }
    for g in generators {
        insert(g.inverse(), &mut index, &mut elements)?;
    }
    let seeds = elements.clone();
    let mut k = 0;
    while k < elements.len() {
        for g in &seeds {
            let p = elements[k].product(g);
            insert(p, &mut index, &mut elements)?;
        }
        k += 1;
    }

    let m = elements.len();
    let lookup = |x: &T| -> Result<usize> {
        index.get(x).copied().ok_or_else(|| Error::Contract(format!("closure not closed at {x}")))
    };
    let mut cells = Vec::with_capacity(m * m);
    for a in &elements {
        for b in &elements {
            cells.push(lookup(&a.product(b))?);
        }
    }
    let inverse = elements.iter().map(|e| lookup(&e.inverse())).collect::<Result<Vec<_>>>()?;
    let labels = elements.iter().map(|e| e.to_string()).collect();
    let semigroup = FiniteInverseSemigroup::from_parts(CayleyTable { order: m, cells }, inverse, Some(labels))?;
    Ok(Closure { semigroup, elements })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::PartialBijection;

    #[test]
    fn left_zero_table_rejected() {
        let t = CayleyTable::from_rows(&[vec![0, 0], vec![1, 1]]).unwrap();
        match verify_inverse_semigroup(&t) {
            Err(Violation::MultipleInverses { element: 0, first: 0, second: 1 }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn non_associative_table_rejected() {
        // a*b = b*a = a, a*a = b, b*b = b is a group; break it at (1,1)
        let t = CayleyTable::from_rows(&[vec![1, 0], vec![0, 0]]).unwrap();
        assert!(matches!(verify_inverse_semigroup(&t), Err(Violation::NotAssociative { .. })));
    }

    #[test]
    fn malformed_rows() {
        assert!(CayleyTable::from_rows(&[vec![0, 0], vec![0]]).is_err());
        assert!(CayleyTable::from_rows(&[vec![2]]).is_err());
    }

    #[test]
    fn trivial_semigroup() {
        let t = CayleyTable::from_rows(&[vec![0]]).unwrap();
        assert_eq!(verify_inverse_semigroup(&t), Ok(vec![0]));
        let s = FiniteInverseSemigroup::from_table(t, None).unwrap();
        assert!(s.is_group());
        assert_eq!(s.zero(), Some(0));
        assert_eq!(s.identity(), Some(0));
    }

    #[test]
    fn close_single_idempotent() {
        let g = PartialBijection::identity_on(2, &[0]).unwrap();
        let c = close(&[g], DEFAULT_CLOSURE_BUDGET).unwrap();
        assert_eq!(c.semigroup.order(), 1);
        assert_eq!(c.semigroup.idempotents(), &[0]);
    }

    #[test]
    fn close_budget_and_empty() {
        let gens = PartialBijection::all(3);
        assert_eq!(close(&gens, 10).unwrap_err(), Error::BudgetExceeded { budget: 10 });
        assert_eq!(close::<PartialBijection>(&[], 10).unwrap_err(), Error::EmptyGenerators);
        let mixed = [PartialBijection::identity(2), PartialBijection::identity(3)];
        assert!(matches!(close(&mixed, 10).unwrap_err(), Error::GroundSizeMismatch { .. }));
    }

    #[test]
    fn closure_orders() {
        assert_eq!(fixtures::symmetric_inverse_monoid(1).semigroup.order(), 2);
        assert_eq!(fixtures::symmetric_inverse_monoid(2).semigroup.order(), 7);
        assert_eq!(fixtures::symmetric_inverse_monoid(3).semigroup.order(), 34);
    }

    #[test]
    fn closure_is_deterministic() {
        let a = fixtures::symmetric_inverse_monoid(3);
        let b = fixtures::symmetric_inverse_monoid(3);
        assert_eq!(a.semigroup, b.semigroup);
        assert_eq!(a.elements, b.elements);
    }

    #[test]
    fn closure_table_matches_elements() {
        let c = fixtures::symmetric_inverse_monoid(2);
        let s = &c.semigroup;
        for a in s.elements() {
            for b in s.elements() {
                let direct = c.elements[a].compose(&c.elements[b]).unwrap();
                assert_eq!(c.elements[s.mul(a, b)], direct);
            }
            assert_eq!(c.elements[s.inv(a)], c.elements[a].invert());
        }
        assert_eq!(verify_inverse_semigroup(s.table()).unwrap(), (0..7).map(|a| s.inv(a)).collect::<Vec<_>>());
    }

    #[test]
    fn group_detection() {
        assert!(fixtures::cyclic_group(3).semigroup.is_group());
        assert!(fixtures::cyclic_group(1).semigroup.is_group());
        assert!(!fixtures::symmetric_inverse_monoid(2).semigroup.is_group());
        assert!(!fixtures::chain(2).is_group());
    }

    #[test]
    fn zero_and_identity() {
        let c = fixtures::symmetric_inverse_monoid(2);
        let z = c.semigroup.zero().unwrap();
        assert!(c.elements[z].is_empty());
        let u = c.semigroup.identity().unwrap();
        assert_eq!(c.elements[u], PartialBijection::identity(2));
        assert_eq!(fixtures::cyclic_group(2).semigroup.zero(), None);
    }
}
