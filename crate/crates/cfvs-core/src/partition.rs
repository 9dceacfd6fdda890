//! Unlabelled partitions of vertex subsets, kept in canonical form.

use crate::set::VertexSet;

/// A partition of some subset of 0..n into disjoint non-empty pieces.
///
/// Pieces are stored sorted by their minimum element, so two partitions of
/// the same family of pieces always compare equal regardless of insertion
/// order (canonical unlabelled form).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Partition {
    pieces: Vec<VertexSet>,
}

impl Partition {
    /// Builds a partition from pieces; panics if pieces are empty sets or
    /// overlap (they must be pairwise disjoint by definition).
    pub fn new(mut pieces: Vec<VertexSet>) -> Self {
        for p in &pieces {
            assert!(!p.is_empty(), "partition piece must be non-empty");
        }
        for i in 0..pieces.len() {
            for j in i + 1..pieces.len() {
                assert!(pieces[i].is_disjoint(&pieces[j]), "partition pieces must be disjoint");
            }
        }
        pieces.sort_by_key(|p| p.min_elem());
        Partition { pieces }
    }

    pub fn empty() -> Self {
        Partition { pieces: Vec::new() }
    }

    pub fn pieces(&self) -> &[VertexSet] {
        &self.pieces
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    /// Union of all pieces.
    pub fn ground_set(&self, n: usize) -> VertexSet {
        let mut g = VertexSet::empty(n);
        for p in &self.pieces {
            g = g.union(p);
        }
        g
    }

    /// Index of the piece containing v, if any.
    pub fn piece_of(&self, v: usize) -> Option<usize> {
        self.pieces.iter().position(|p| p.contains(v))
    }
}
