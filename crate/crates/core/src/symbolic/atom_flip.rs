//! A small countable inverse monoid whose left-translation groupoid is not
//! Hausdorff.
//!
//! Elements are `ZERO`, `FLIP`, `SQUARE = FLIP²` (the identity away from zero) and
//! pairwise orthogonal idempotents `ATOM(i)`, `i ≥ 1`, each fixed by `FLIP` on both
//! sides. `J_FLIP = {ZERO} ∪ {ATOM(i)}` has every atom maximal, so no finite subset
//! covers it. The truncation `F_n` keeps atoms `1..=n` and is an ordinary finite
//! inverse monoid of order `n + 3`.
//!
//! A concrete model: `F_n` acts faithfully on `{a_1, .., a_n, p, q}` with `ATOM(i)`
//! the identity on `a_i`, `FLIP` swapping `p` and `q` and fixing every `a_i`.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::element::SemigroupElement;
use crate::error::{Error, Result};
use crate::semigroup::{CayleyTable, FiniteInverseSemigroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AtomFlip {
    Zero,
    Flip,
    Square,
    /// 1-based atom index.
    Atom(u64),
}

impl AtomFlip {
    /// The elements of the truncation `F_n` in table order.
    pub fn truncation(n: u64) -> Vec<AtomFlip> {
        let mut out = Vec::with_capacity(n as usize + 3);
        out.extend([AtomFlip::Zero, AtomFlip::Flip, AtomFlip::Square]);
        out.extend((1..=n).map(AtomFlip::Atom));
        out
    }

    pub fn in_truncation(&self, n: u64) -> bool {
        match self {
            AtomFlip::Atom(i) => (1..=n).contains(i),
            _ => true,
        }
    }
}

impl SemigroupElement for AtomFlip {
    fn product(&self, rhs: &Self) -> Self {
        use AtomFlip::*;
        match (*self, *rhs) {
            (Zero, _) | (_, Zero) => Zero,
            (Flip, Flip) => Square,
            (Flip, Square) | (Square, Flip) => Flip,
            (Square, Square) => Square,
            (Flip | Square, Atom(i)) | (Atom(i), Flip | Square) => Atom(i),
            (Atom(i), Atom(j)) => {
                if i == j {
                    Atom(i)
                } else {
                    Zero
                }
            }
        }
    }

    fn inverse(&self) -> Self {
        *self
    }

    fn is_idempotent(&self) -> bool {
        !matches!(self, AtomFlip::Flip)
    }
}

impl fmt::Display for AtomFlip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AtomFlip::Zero => f.write_str("ZERO"),
            AtomFlip::Flip => f.write_str("FLIP"),
            AtomFlip::Square => f.write_str("SQUARE"),
            AtomFlip::Atom(i) => write!(f, "ATOM({i})"),
        }
    }
}

impl FromStr for AtomFlip {
    type Err = Error;

    /// Accepts `ZERO`, `FLIP`, `SQUARE`, `ATOM(i)` or `ATOMi`, case-insensitively.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase();
        match t.as_str() {
            "ZERO" | "0" => return Ok(AtomFlip::Zero),
            "FLIP" => return Ok(AtomFlip::Flip),
            "SQUARE" => return Ok(AtomFlip::Square),
            _ => {}
        }
        let digits = t
            .strip_prefix("ATOM")
            .map(|rest| rest.trim_start_matches('(').trim_end_matches(')').trim())
            .ok_or_else(|| Error::Contract(format!("unknown atom-flip tag {s:?}")))?;
        match digits.parse::<u64>() {
            Ok(i) if i >= 1 => Ok(AtomFlip::Atom(i)),
            _ => Err(Error::Contract(format!("bad atom index in {s:?}"))),
        }
    }
}

/// The truncation `F_n` as a verified finite inverse semigroup, labelled by tag.
pub fn truncate(n: u64) -> FiniteInverseSemigroup {
    let elements = AtomFlip::truncation(n);
    let index = |x: &AtomFlip| match x {
        AtomFlip::Zero => 0,
        AtomFlip::Flip => 1,
        AtomFlip::Square => 2,
        AtomFlip::Atom(i) => 2 + *i as usize,
    };
    let table = CayleyTable::from_fn(elements.len(), |a, b| index(&elements[a].product(&elements[b])));
    let labels = elements.iter().map(|e| e.to_string()).collect();
    FiniteInverseSemigroup::from_table(table, Some(labels)).expect("F_n is an inverse monoid")
}

/// Closed-form `J_s`, listing atoms up to `n` when truncated. Returns `None` for the
/// infinite `J_FLIP` of the untruncated family.
pub fn j_set(s: AtomFlip, truncation: Option<u64>) -> Option<Vec<AtomFlip>> {
    match s {
        AtomFlip::Flip => truncation.map(|n| {
            AtomFlip::truncation(n)
                .into_iter()
                .filter(|e| *e == AtomFlip::Zero || matches!(e, AtomFlip::Atom(_)))
                .collect()
        }),
        AtomFlip::Square => {
            let mut all = AtomFlip::truncation(truncation?);
            all.retain(|e| *e != AtomFlip::Flip);
            Some(all)
        }
        AtomFlip::Zero => Some(alloc::vec![AtomFlip::Zero]),
        AtomFlip::Atom(i) => Some(alloc::vec![AtomFlip::Zero, AtomFlip::Atom(i)]),
    }
}

pub(crate) fn check_member(s: AtomFlip, truncation: Option<u64>) -> Result<()> {
    match truncation {
        Some(n) if !s.in_truncation(n) => Err(Error::Contract(format!("{s} is not an element of F_{n}"))),
        _ => Ok(()),
    }
}

pub(crate) fn describe_j(s: AtomFlip, truncation: Option<u64>) -> alloc::string::String {
    match (s, truncation) {
        (AtomFlip::Flip, None) => "{ZERO} ∪ {ATOM(i) : i ≥ 1}".to_string(),
        (AtomFlip::Flip, Some(0)) => "{ZERO}".to_string(),
        (AtomFlip::Flip, Some(n)) => format!("{{ZERO}} ∪ {{ATOM(i) : 1 ≤ i ≤ {n}}}"),
        (AtomFlip::Square, None) => "all idempotents".to_string(),
        (AtomFlip::Square, Some(_)) => "all idempotents of the truncation".to_string(),
        (other, _) => format!("all idempotents ≤ {other}"),
    }
}
