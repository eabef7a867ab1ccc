//! Partial bijections of a finite ground set `{0, .., n-1}`, the elements of the
//! symmetric inverse monoid.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::element::SemigroupElement;
use crate::error::{Error, Result};

/// An injective partial map on `{0, .., ground_size - 1}`.
///
/// Stored densely: `map[x]` is the image of `x`, or `None` off the domain.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartialBijection {
    ground_size: usize,
    map: Vec<Option<usize>>,
}

impl PartialBijection {
    pub fn from_pairs(ground_size: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut map = vec![None; ground_size];
        let mut hit = vec![false; ground_size];
        for &(source, target) in pairs {
            for point in [source, target] {
                if point >= ground_size {
                    return Err(Error::PointOutOfRange { point, ground_size });
                }
            }
            if map[source].is_some() {
                return Err(Error::NotAFunction { source });
            }
            if hit[target] {
                return Err(Error::NotInjective { target });
            }
            map[source] = Some(target);
            hit[target] = true;
        }
        Ok(PartialBijection { ground_size, map })
    }

    /// The empty map, the zero of `I(X)`.
    pub fn empty(ground_size: usize) -> Self {
        PartialBijection { ground_size, map: vec![None; ground_size] }
    }

    /// The identity restricted to `domain`. Points outside the ground set are an error.
    pub fn identity_on(ground_size: usize, domain: &[usize]) -> Result<Self> {
        let pairs: Vec<_> = domain.iter().map(|&x| (x, x)).collect();
        Self::from_pairs(ground_size, &pairs)
    }

    pub fn identity(ground_size: usize) -> Self {
        PartialBijection { ground_size, map: (0..ground_size).map(Some).collect() }
    }

    /// Every partial bijection on `ground_size` points, in lexicographic order of the
    /// dense image vector (`None` first).
    pub fn all(ground_size: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut current = vec![None; ground_size];
        let mut used = vec![false; ground_size];
        enumerate(0, &mut current, &mut used, &mut out);
        out
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        self.map.get(x).copied().flatten()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.map.iter().enumerate().filter_map(|(x, y)| y.map(|y| (x, y)))
    }

    pub fn domain(&self) -> Vec<usize> {
        self.pairs().map(|(x, _)| x).collect()
    }

    pub fn range(&self) -> Vec<usize> {
        let mut r: Vec<usize> = self.pairs().map(|(_, y)| y).collect();
        r.sort_unstable();
        r
    }

    pub fn rank(&self) -> usize {
        self.map.iter().filter(|y| y.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.rank() == 0
    }

    /// `x ↦ self(rhs(x))`, defined where `rhs(x)` lands in the domain of `self`.
    pub fn compose(&self, rhs: &Self) -> Result<Self> {
        if self.ground_size != rhs.ground_size {
            return Err(Error::GroundSizeMismatch { left: self.ground_size, right: rhs.ground_size });
        }
        Ok(self.compose_unchecked(rhs))
    }

    fn compose_unchecked(&self, rhs: &Self) -> Self {
        let map = rhs.map.iter().map(|y| y.and_then(|y| self.map[y])).collect();
        PartialBijection { ground_size: self.ground_size, map }
    }

    pub fn invert(&self) -> Self {
        let mut map = vec![None; self.ground_size];
        for (x, y) in self.pairs() {
            map[y] = Some(x);
        }
        PartialBijection { ground_size: self.ground_size, map }
    }
}

fn enumerate(x: usize, current: &mut Vec<Option<usize>>, used: &mut Vec<bool>, out: &mut Vec<PartialBijection>) {
    let n = current.len();
    if x == n {
        out.push(PartialBijection { ground_size: n, map: current.clone() });
        return;
    }
    current[x] = None;
    enumerate(x + 1, current, used, out);
    for y in 0..n {
        if !used[y] {
            used[y] = true;
            current[x] = Some(y);
            enumerate(x + 1, current, used, out);
            used[y] = false;
        }
    }
    current[x] = None;
}

impl SemigroupElement for PartialBijection {
    fn product(&self, rhs: &Self) -> Self {
        self.compose_unchecked(rhs)
    }

    fn inverse(&self) -> Self {
        self.invert()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.ground_size != other.ground_size {
            return Err(Error::GroundSizeMismatch { left: self.ground_size, right: other.ground_size });
        }
        Ok(())
    }

    fn is_idempotent(&self) -> bool {
        self.pairs().all(|(x, y)| x == y)
    }
}

impl fmt::Display for PartialBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (x, y)) in self.pairs().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}->{y}")?;
        }
        f.write_str("}")
    }
}
