//! Dense bit-indexed vertex sets over a fixed universe 0..n.

use std::fmt;

const WORD: usize = 64;

/// A subset of the vertices 0..n, stored as a bitmask.
///
/// All binary operations require both operands to share the same universe
/// size n (the graph's vertex count), which keeps equality, ordering and
/// hashing canonical.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet { n, words: vec![0; n.div_ceil(WORD)] }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn singleton(n: usize, v: usize) -> Self {
        let mut s = Self::empty(n);
        s.insert(v);
        s
    }

    pub fn from_iter(n: usize, vs: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(n);
        for v in vs {
            s.insert(v);
        }
        s
    }

    /// Universe size n (not the cardinality; see [`VertexSet::len`]).
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {} out of range 0..{}", v, self.n);
        self.words[v / WORD] |= 1 << (v % WORD);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.n, "vertex {} out of range 0..{}", v, self.n);
        self.words[v / WORD] &= !(1 << (v % WORD));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn min_elem(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * WORD + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.n, other.n, "vertex sets over different universes");
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check(other);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect();
        VertexSet { n: self.n, words }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check(other);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        VertexSet { n: self.n, words }
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.check(other);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect();
        VertexSet { n: self.n, words }
    }

    pub fn complement(&self) -> Self {
        let mut out = Self::empty(self.n);
        for v in 0..self.n {
            if !self.contains(v) {
                out.insert(v);
            }
        }
        out
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.check(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.check(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v)?;
        }
        write!(f, "}}")
    }
}
