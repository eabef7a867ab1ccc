//! Free inverse monoids via Munn trees.
//!
//! An element is a finite subtree of the Cayley graph of the free group on `rank`
//! generators, containing the empty word, together with a marked endpoint. Vertices
//! are stored as reduced words. Letters are ordered `x1 < x1⁻¹ < x2 < x2⁻¹ < ..`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::element::SemigroupElement;
use crate::error::{Error, Result};

/// A generator or its formal inverse: `2g` is `x_{g+1}`, `2g + 1` its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u32);

impl Letter {
    pub fn generator(g: u32) -> Self {
        Letter(2 * g)
    }

    pub fn inverse_generator(g: u32) -> Self {
        Letter(2 * g + 1)
    }

    pub fn generator_index(self) -> u32 {
        self.0 / 2
    }

    pub fn is_inverse(self) -> bool {
        self.0 % 2 == 1
    }

    pub fn inverse(self) -> Self {
        Letter(self.0 ^ 1)
    }
}

/// A reduced word in the free group.
pub type Word = Vec<Letter>;

/// Appends `letter`, cancelling against the last letter when possible.
fn push_reduced(word: &mut Word, letter: Letter) {
    if word.last() == Some(&letter.inverse()) {
        word.pop();
    } else {
        word.push(letter);
    }
}

/// The reduced form of `a b`.
pub fn free_product(a: &[Letter], b: &[Letter]) -> Word {
    let mut out = a.to_vec();
    for &l in b {
        push_reduced(&mut out, l);
    }
    out
}

pub fn free_inverse(word: &[Letter]) -> Word {
    word.iter().rev().map(|l| l.inverse()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MunnTree {
    rank: u32,
    vertices: BTreeSet<Word>,
    endpoint: Word,
}

impl MunnTree {
    pub fn identity(rank: u32) -> Self {
        MunnTree { rank, vertices: [Word::new()].into(), endpoint: Word::new() }
    }

    /// The element represented by the word `letters` (not necessarily reduced).
    pub fn from_letters(rank: u32, letters: &[Letter]) -> Result<Self> {
        let mut tree = Self::identity(rank);
        for &l in letters {
            if l.generator_index() >= rank {
                return Err(Error::Contract(format!(
                    "generator {} out of range for rank {rank}",
                    l.generator_index() + 1
                )));
            }
            let end = free_product(&tree.endpoint, &[l]);
            tree.vertices.insert(end.clone());
            tree.endpoint = end;
        }
        Ok(tree)
    }

    pub fn generator(rank: u32, g: u32) -> Result<Self> {
        Self::from_letters(rank, &[Letter::generator(g)])
    }

    /// Parses a space-separated word such as `x y x^-1`.
    ///
    /// Generator names are `x`, `y`, `z` (for generators 1 to 3) or `x1`, `x2`, ..;
    /// `^-1` marks an inverse and `1` is the empty word. With `rank = None` the rank is
    /// the largest generator mentioned.
    pub fn parse(text: &str, rank: Option<u32>) -> Result<Self> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            if token == "1" {
                continue;
            }
            let (name, inverse) = match token.strip_suffix("^-1") {
                Some(n) => (n, true),
                None => (token, false),
            };
            let g = match name {
                "x" => 0,
                "y" => 1,
                "z" => 2,
                _ => name
                    .strip_prefix('x')
                    .and_then(|d| d.parse::<u32>().ok())
                    .filter(|&k| k >= 1)
                    .map(|k| k - 1)
                    .ok_or_else(|| Error::Contract(format!("unknown generator {token:?}")))?,
            };
            letters.push(if inverse { Letter::inverse_generator(g) } else { Letter::generator(g) });
        }
        let needed = letters.iter().map(|l| l.generator_index() + 1).max().unwrap_or(1);
        Self::from_letters(rank.unwrap_or(needed), &letters)
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn vertices(&self) -> &BTreeSet<Word> {
        &self.vertices
    }

    pub fn endpoint(&self) -> &Word {
        &self.endpoint
    }

    /// Tree invariants: contains the root and endpoint, every vertex is reduced with
    /// its parent present, and all letters are within rank.
    pub fn is_valid(&self) -> bool {
        self.vertices.contains(&Word::new())
            && self.vertices.contains(&self.endpoint)
            && self.vertices.iter().all(|w| {
                w.iter().all(|l| l.generator_index() < self.rank)
                    && w.windows(2).all(|p| p[1] != p[0].inverse())
                    && (w.is_empty() || self.vertices.contains(&w[..w.len() - 1]))
            })
    }

    /// `self ≤ other` iff `other`'s tree is contained in this one and the endpoints
    /// agree.
    pub fn tree_leq(&self, other: &Self) -> bool {
        self.endpoint == other.endpoint && other.vertices.is_subset(&self.vertices)
    }

    /// Every element whose tree has at most `max_vertices` vertices.
    pub fn pool(rank: u32, max_vertices: usize) -> Vec<MunnTree> {
        let mut layer: BTreeSet<BTreeSet<Word>> = BTreeSet::new();
        if max_vertices >= 1 {
            layer.insert([Word::new()].into());
        }
        let mut trees: Vec<BTreeSet<Word>> = Vec::new();
        for _ in 1..=max_vertices {
            let mut next = BTreeSet::new();
            for tree in &layer {
                for v in tree {
                    for code in 0..2 * rank {
                        let l = Letter(code);
                        if v.last() == Some(&l.inverse()) {
                            continue;
                        }
                        let mut w = v.clone();
                        w.push(l);
                        if !tree.contains(&w) {
                            let mut grown = tree.clone();
                            grown.insert(w);
                            next.insert(grown);
                        }
                    }
                }
            }
            trees.extend(core::mem::replace(&mut layer, next));
        }
        let mut out = Vec::new();
        for vertices in trees {
            for endpoint in &vertices {
                out.push(MunnTree { rank, vertices: vertices.clone(), endpoint: endpoint.clone() });
            }
        }
        out
    }

    fn letter_name(&self, l: Letter) -> String {
        let g = l.generator_index();
        let base = if self.rank <= 3 { String::from(["x", "y", "z"][g as usize]) } else { format!("x{}", g + 1) };
        if l.is_inverse() {
            base + "^-1"
        } else {
            base
        }
    }

    fn write_word(&self, f: &mut fmt::Formatter<'_>, w: &[Letter]) -> fmt::Result {
        if w.is_empty() {
            return f.write_str("1");
        }
        for (i, &l) in w.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&self.letter_name(l))?;
        }
        Ok(())
    }
}

impl SemigroupElement for MunnTree {
    fn product(&self, rhs: &Self) -> Self {
        let mut vertices = self.vertices.clone();
        for w in &rhs.vertices {
            vertices.insert(free_product(&self.endpoint, w));
        }
        MunnTree { rank: self.rank, vertices, endpoint: free_product(&self.endpoint, &rhs.endpoint) }
    }

    fn inverse(&self) -> Self {
        let back = free_inverse(&self.endpoint);
        MunnTree {
            rank: self.rank,
            vertices: self.vertices.iter().map(|w| free_product(&back, w)).collect(),
            endpoint: back,
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::Contract(format!("ranks {} and {} differ", self.rank, other.rank)));
        }
        Ok(())
    }

    fn is_idempotent(&self) -> bool {
        self.endpoint.is_empty()
    }

    fn natural_leq(&self, other: &Self) -> bool {
        self.tree_leq(other)
    }
}

impl fmt::Display for MunnTree {
    /// `{1, x, x y} @ x y`: the vertex set, then the endpoint.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, w) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            self.write_word(f, w)?;
        }
        f.write_str("} @ ")?;
        self.write_word(f, &self.endpoint)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn x() -> Letter {
        Letter::generator(0)
    }
    fn xi() -> Letter {
        Letter::inverse_generator(0)
    }

    /// Munn's normal form read straight off a word: the reduced prefixes and the
    /// reduced word.
    fn prefix_oracle(rank: u32, word: &[Letter]) -> MunnTree {
        let mut vertices: BTreeSet<Word> = [Word::new()].into();
        for k in 1..=word.len() {
            vertices.insert(free_product(&[], &word[..k]));
        }
        MunnTree { rank, vertices, endpoint: free_product(&[], word) }
    }

    #[test]
    fn x_times_x() {
        let g = MunnTree::generator(1, 0).unwrap();
        let p = g.product(&g);
        assert_eq!(p.vertices(), &[vec![], vec![x()], vec![x(), x()]].into());
        assert_eq!(p.endpoint(), &vec![x(), x()]);
        assert_eq!(p, prefix_oracle(1, &[x(), x()]));
    }

    #[test]
    fn x_times_x_inverse() {
        let g = MunnTree::generator(1, 0).unwrap();
        let p = g.product(&g.inverse());
        assert_eq!(p.vertices(), &[vec![], vec![x()]].into());
        assert!(p.endpoint().is_empty());
        assert!(p.is_idempotent());
        assert_eq!(p, prefix_oracle(1, &[x(), xi()]));
    }

    #[test]
    fn idempotents_square_to_themselves() {
        for e in MunnTree::pool(2, 3).into_iter().filter(|t| t.is_idempotent()) {
            assert_eq!(e.product(&e), e);
        }
    }

    #[test]
    fn product_matches_prefix_oracle_on_words() {
        // all words of length <= 3 over x, x^-1, y, y^-1
        let letters: Vec<Letter> = (0..4).map(Letter).collect();
        let mut words: Vec<Vec<Letter>> = vec![vec![]];
        for _ in 0..3 {
            let mut more = Vec::new();
            for w in &words {
                for &l in &letters {
                    let mut w2 = w.clone();
                    w2.push(l);
                    more.push(w2);
                }
            }
            words.extend(more);
            words.sort();
            words.dedup();
        }
        for u in &words {
            for v in words.iter().filter(|v| v.len() <= 2) {
                let a = MunnTree::from_letters(2, u).unwrap();
                let b = MunnTree::from_letters(2, v).unwrap();
                let mut uv = u.clone();
                uv.extend(v);
                assert_eq!(a.product(&b), prefix_oracle(2, &uv));
            }
        }
    }

    #[test]
    fn pool_sizes() {
        assert_eq!(MunnTree::pool(2, 1), vec![MunnTree::identity(2)]);
        // rank 1 trees are intervals around the root
        assert_eq!(MunnTree::pool(1, 4).len(), 1 + 2 * 2 + 3 * 3 + 4 * 4);
        assert!(MunnTree::pool(2, 4).iter().all(MunnTree::is_valid));
    }

    #[test]
    fn parse_and_display() {
        let t = MunnTree::parse("x y x^-1", None).unwrap();
        assert_eq!(t.rank(), 2);
        assert_eq!(t.to_string(), "{1, x, x y, x y x^-1} @ x y x^-1");
        let e = MunnTree::parse("x x^-1 y y^-1", None).unwrap();
        assert!(e.is_idempotent());
        assert_eq!(e.to_string(), "{1, x, y} @ 1");
        assert_eq!(MunnTree::parse("1", Some(2)).unwrap(), MunnTree::identity(2));
        assert_eq!(MunnTree::parse("x5", None).unwrap().rank(), 5);
        assert!(MunnTree::parse("q", None).is_err());
        assert!(MunnTree::parse("y", Some(1)).is_err());
    }

    #[test]
    fn closed_form_order_matches_formula() {
        let pool = MunnTree::pool(2, 3);
        for a in &pool {
            for b in &pool {
                let formula = b.product(&a.inverse().product(a)) == *a;
                assert_eq!(a.tree_leq(b), formula, "{a} vs {b}");
            }
        }
    }

    #[test]
    fn inverse_laws() {
        for a in MunnTree::pool(2, 4) {
            let ai = a.inverse();
            assert!(ai.is_valid());
            assert_eq!(ai.inverse(), a);
            assert_eq!(a.product(&ai).product(&a), a);
            assert_eq!(ai.product(&a).product(&ai), ai);
        }
    }

    #[test]
    fn rank_mismatch() {
        let a = MunnTree::identity(1);
        let b = MunnTree::identity(2);
        assert!(a.check_compatible(&b).is_err());
        assert_eq!(a.to_string(), "{1} @ 1");
    }
}
