//! Graph inverse semigroups: elements `p q*` for directed paths `p`, `q` ending at the
//! same vertex, plus zero.
//!
//! Paths run along edge directions; a vertex is the trivial path at itself, so every
//! vertex `v` gives the idempotent `v v*`. The product is
//!
//! ```text
//! (p q*)(r t*) = p r' t*      if r = q r'
//!              = p (t q')*    if q = r q'
//!              = 0            otherwise
//! ```

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::element::SemigroupElement;
use crate::error::{Error, Result};

/// A finite directed graph; edge `i` runs `edges[i].0 → edges[i].1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

/// A directed path, stored as its start, its end and the edge indices in between.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    start: usize,
    end: usize,
    edges: Vec<usize>,
}

impl Path {
    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self) -> usize {
        self.end
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.edges.is_empty()
    }

    /// If `self = prefix · rest`, returns `rest`.
    fn strip_prefix(&self, prefix: &Path) -> Option<Path> {
        if self.start != prefix.start || !self.edges.starts_with(&prefix.edges) {
            return None;
        }
        Some(Path { start: prefix.end, end: self.end, edges: self.edges[prefix.edges.len()..].to_vec() })
    }

    /// `self · rest`, assuming `rest` starts where `self` ends.
    fn concat(&self, rest: &Path) -> Path {
        debug_assert_eq!(self.end, rest.start);
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&rest.edges);
        Path { start: self.start, end: rest.end, edges }
    }
}

impl fmt::Display for Path {
    /// Edges as `e1.e2`, trivial paths as `v1`; labels are 1-based.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.edges.is_empty() {
            return write!(f, "v{}", self.start + 1);
        }
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "e{}", e + 1)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PathPair {
    Zero,
    Pair { p: Path, q: Path },
}

impl PathPair {
    pub fn pair(p: Path, q: Path) -> Result<Self> {
        if p.end != q.end {
            return Err(Error::Contract(format!("paths {p} and {q} end at different vertices")));
        }
        Ok(PathPair::Pair { p, q })
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, PathPair::Zero)
    }
}

impl SemigroupElement for PathPair {
    fn product(&self, rhs: &Self) -> Self {
        let (PathPair::Pair { p, q }, PathPair::Pair { p: r, q: t }) = (self, rhs) else {
            return PathPair::Zero;
        };
        if let Some(rest) = r.strip_prefix(q) {
            PathPair::Pair { p: p.concat(&rest), q: t.clone() }
        } else if let Some(rest) = q.strip_prefix(r) {
            PathPair::Pair { p: p.clone(), q: t.concat(&rest) }
        } else {
            PathPair::Zero
        }
    }

    fn inverse(&self) -> Self {
        match self {
            PathPair::Zero => PathPair::Zero,
            PathPair::Pair { p, q } => PathPair::Pair { p: q.clone(), q: p.clone() },
        }
    }

    fn is_idempotent(&self) -> bool {
        match self {
            PathPair::Zero => true,
            PathPair::Pair { p, q } => p == q,
        }
    }
}

impl fmt::Display for PathPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathPair::Zero => f.write_str("ZERO"),
            PathPair::Pair { p, q } => write!(f, "p={p}, q={q}"),
        }
    }
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for &(s, t) in &edges {
            for v in [s, t] {
                if v >= vertex_count {
                    return Err(Error::PointOutOfRange { point: v, ground_size: vertex_count });
                }
            }
        }
        Ok(Graph { vertex_count, edges })
    }

    /// Parses `"1>2, 2>2, 1>2"`: 1-based vertex pairs, one per edge. The vertex count
    /// is the largest vertex mentioned.
    pub fn parse(text: &str) -> Result<Self> {
        let mut edges = Vec::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (a, b) =
                item.split_once('>').ok_or_else(|| Error::Contract(format!("edge {item:?} is not of the form a>b")))?;
            let vertex = |s: &str| -> Result<usize> {
                s.trim()
                    .trim_start_matches('v')
                    .parse::<usize>()
                    .ok()
                    .filter(|&v| v >= 1)
                    .map(|v| v - 1)
                    .ok_or_else(|| Error::Contract(format!("bad vertex {s:?}")))
            };
            edges.push((vertex(a)?, vertex(b)?));
        }
        let vertex_count = edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0);
        Self::new(vertex_count, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex(&self, v: usize) -> Result<Path> {
        if v >= self.vertex_count {
            return Err(Error::PointOutOfRange { point: v, ground_size: self.vertex_count });
        }
        Ok(Path { start: v, end: v, edges: Vec::new() })
    }

    pub fn path(&self, edges: &[usize]) -> Result<Path> {
        let (&first, _) =
            edges.split_first().ok_or_else(|| Error::Contract("use `vertex` for trivial paths".into()))?;
        for &e in edges {
            if e >= self.edges.len() {
                return Err(Error::Contract(format!("no edge e{}", e + 1)));
            }
        }
        for w in edges.windows(2) {
            if self.edges[w[0]].1 != self.edges[w[1]].0 {
                return Err(Error::Contract(format!("edges e{} and e{} do not connect", w[0] + 1, w[1] + 1)));
            }
        }
        Ok(Path {
            start: self.edges[first].0,
            end: self.edges[*edges.last().expect("non-empty")].1,
            edges: edges.to_vec(),
        })
    }

    /// All paths with at most `max_len` edges, trivial paths first, then by length.
    pub fn paths_up_to(&self, max_len: usize) -> Vec<Path> {
        let mut out: Vec<Path> = (0..self.vertex_count).map(|v| Path { start: v, end: v, edges: Vec::new() }).collect();
        let mut frontier = out.clone();
        for _ in 0..max_len {
            let mut next = Vec::new();
            for path in &frontier {
                for (e, &(s, t)) in self.edges.iter().enumerate() {
                    if s == path.end {
                        let mut edges = path.edges.clone();
                        edges.push(e);
                        next.push(Path { start: path.start, end: t, edges });
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    /// Zero and every `p q*` with both paths of length at most `max_len`.
    pub fn pool(&self, max_len: usize) -> Vec<PathPair> {
        let paths = self.paths_up_to(max_len);
        let mut out = alloc::vec![PathPair::Zero];
        for p in &paths {
            for q in paths.iter().filter(|q| q.end == p.end) {
                out.push(PathPair::Pair { p: p.clone(), q: q.clone() });
            }
        }
        out
    }

    /// Generators `e = e r(e)*` and `e*` for every edge.
    pub fn edge_generators(&self) -> Vec<PathPair> {
        let mut out = Vec::new();
        for e in 0..self.edges.len() {
            let p = self.path(&[e]).expect("single edge");
            let v = self.vertex(p.end).expect("edge end");
            out.push(PathPair::Pair { p: p.clone(), q: v.clone() });
            out.push(PathPair::Pair { p: v, q: p });
        }
        out
    }

    fn parse_path(&self, text: &str) -> Result<Path> {
        let text = text.trim();
        if let Some(v) = text.strip_prefix('v') {
            let v: usize = v
                .parse()
                .ok()
                .filter(|&v: &usize| v >= 1)
                .ok_or_else(|| Error::Contract(format!("bad vertex {text:?}")))?;
            return self.vertex(v - 1);
        }
        let edges = text
            .split('.')
            .map(|e| {
                e.trim()
                    .strip_prefix('e')
                    .and_then(|d| d.parse::<usize>().ok())
                    .filter(|&k| k >= 1)
                    .map(|k| k - 1)
                    .ok_or_else(|| Error::Contract(format!("bad edge {e:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        self.path(&edges)
    }

    /// Parses `p=e1.e2 , q=e3`, `p=v1, q=v1` or `ZERO`.
    pub fn parse_element(&self, text: &str) -> Result<PathPair> {
        let text = text.trim();
        if text.eq_ignore_ascii_case("zero") || text == "0" {
            return Ok(PathPair::Zero);
        }
        let mut p = None;
        let mut q = None;
        for part in text.split(',') {
            let (key, value) =
                part.split_once('=').ok_or_else(|| Error::Contract(format!("expected p=.. or q=.., got {part:?}")))?;
            let path = self.parse_path(value)?;
            match key.trim() {
                "p" => p = Some(path),
                "q" => q = Some(path),
                other => return Err(Error::Contract(format!("unknown key {other:?}"))),
            }
        }
        match (p, q) {
            (Some(p), Some(q)) => PathPair::pair(p, q),
            _ => Err(Error::Contract(String::from("both p and q are required"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    /// e1: v1 -> v2, e2: v2 -> v2, e3: v1 -> v2
    fn fixture() -> Graph {
        Graph::parse("1>2, 2>2, 1>2").unwrap()
    }

    /// Bounded-path oracle: words in the generators e, e*, evaluated by the
    /// relations e* e = r(e), e* f = 0 (e ≠ f), written out on paths of length ≤ 3.
    fn pq(g: &Graph, p: &[usize], q: &[usize]) -> PathPair {
        let path = |es: &[usize], other: &[usize]| {
            if es.is_empty() {
                let v = if other.is_empty() { 0 } else { g.edges()[*other.last().unwrap()].1 };
                g.vertex(v).unwrap()
            } else {
                g.path(es).unwrap()
            }
        };
        PathPair::pair(path(p, q), path(q, p)).unwrap()
    }

    #[test]
    fn idempotent_squared() {
        let g = fixture();
        for e in g.pool(3).into_iter().filter(|x| x.is_idempotent()) {
            assert_eq!(e.product(&e), e);
        }
    }

    #[test]
    fn extension_case() {
        let g = Graph::parse("1>2, 2>3").unwrap();
        // a = e1, b = e2: (a a*)(ab (ab)*) = ab (ab)*
        let aa = pq(&g, &[0], &[0]);
        let abab = pq(&g, &[0, 1], &[0, 1]);
        assert_eq!(aa.product(&abab), abab);
        assert_eq!(abab.product(&aa), abab);
    }

    #[test]
    fn disjoint_branches_vanish() {
        let g = fixture();
        let a = pq(&g, &[0], &[0]);
        let b = pq(&g, &[2], &[2]);
        assert_eq!(a.product(&b), PathPair::Zero);
        let v1 = PathPair::pair(g.vertex(0).unwrap(), g.vertex(0).unwrap()).unwrap();
        let v2 = PathPair::pair(g.vertex(1).unwrap(), g.vertex(1).unwrap()).unwrap();
        assert_eq!(v1.product(&v2), PathPair::Zero);
    }

    #[test]
    fn edge_relations() {
        let g = fixture();
        let gens = g.edge_generators();
        let (e1, e1s, e3s) = (&gens[0], &gens[1], &gens[5]);
        // e* e = r(e)
        let v2 = PathPair::pair(g.vertex(1).unwrap(), g.vertex(1).unwrap()).unwrap();
        assert_eq!(e1s.product(e1), v2);
        // e* f = 0 for distinct edges
        assert_eq!(e3s.product(e1), PathPair::Zero);
        // e e* is the range projection of e
        assert_eq!(e1.product(e1s), pq(&g, &[0], &[0]));
    }

    #[test]
    fn pool_counts() {
        let g = fixture();
        let paths = g.paths_up_to(3);
        assert_eq!(paths.len(), 11);
        // v1 alone ends at v1; the other ten end at v2
        assert_eq!(g.pool(3).len(), 1 + 1 + 100);
    }

    #[test]
    fn associativity_on_pool() {
        let g = fixture();
        let pool = g.pool(2);
        for a in &pool {
            for b in &pool {
                let ab = a.product(b);
                for c in &pool {
                    assert_eq!(ab.product(c), a.product(&b.product(c)));
                }
            }
        }
    }

    #[test]
    fn parse_round_trip() {
        let g = fixture();
        let x = g.parse_element("p=e1.e2 , q=e3").unwrap();
        assert_eq!(x.to_string(), "p=e1.e2, q=e3");
        assert_eq!(g.parse_element(&x.to_string()).unwrap(), x);
        assert_eq!(g.parse_element("ZERO").unwrap(), PathPair::Zero);
        assert_eq!(g.parse_element("p=v1, q=v1").unwrap().to_string(), "p=v1, q=v1");
        assert!(g.parse_element("p=e1, q=v1").is_err());
        assert!(g.parse_element("p=e2.e1, q=e3").is_err());
        assert!(g.parse_element("p=e9, q=e3").is_err());
        assert!(Graph::parse("1-2").is_err());
    }

    #[test]
    fn inverse_laws_on_pool() {
        let g = fixture();
        for a in g.pool(3) {
            let ai = a.inverse();
            assert_eq!(a.product(&ai).product(&a), a);
            assert_eq!(ai.product(&a).product(&ai), ai);
        }
    }
}
