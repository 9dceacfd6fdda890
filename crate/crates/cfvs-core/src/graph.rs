//! Undirected multigraphs (loops and parallel edges allowed) and the
//! predicates the solvers are built on.

use crate::partition::Partition;
use crate::set::VertexSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    EndpointOutOfRange(usize, usize, usize),
    #[error("graph is not simple: {0}")]
    NotSimple(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
}

/// An immutable multigraph on vertices 0..n.
///
/// Edges are kept as an explicit multiset (normalized so u <= v), so parallel
/// edges and loops survive construction and round-trip through serialization.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    /// adj[v] lists (neighbor, edge index); a loop at v appears once.
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let mut norm = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange(u, v, n));
            }
            norm.push((u.min(v), u.max(v)));
        }
        let mut adj = vec![Vec::new(); n];
        for (e, &(u, v)) in norm.iter().enumerate() {
            adj[u].push((v, e));
            if u != v {
                adj[v].push((u, e));
            }
        }
        Ok(Graph { n, edges: norm, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// (neighbor, edge id) pairs at v; a loop contributes one entry.
    pub fn adj(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    /// Multigraph degree: loops count twice.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len() + self.adj[v].iter().filter(|&&(u, _)| u == v).count()
    }

    pub fn has_loop_at(&self, v: usize) -> bool {
        self.adj[v].iter().any(|&(u, _)| u == v)
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges.iter().all(|&(u, v)| u != v && seen.insert((u, v)))
    }

    pub fn full_vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// True iff the whole graph is acyclic. Loops and parallel edges are
    /// cycles.
    pub fn is_forest(&self) -> bool {
        self.is_forest_within(&self.full_vertex_set())
    }

    /// True iff the subgraph induced by `keep` is acyclic.
    pub fn is_forest_within(&self, keep: &VertexSet) -> bool {
        let mut uf = UnionFind::new(self.n);
        for &(u, v) in &self.edges {
            if !keep.contains(u) || !keep.contains(v) {
                continue;
            }
            if u == v || !uf.union(u, v) {
                return false;
            }
        }
        true
    }

    /// True iff the subgraph induced by s is connected. The empty set and
    /// singletons count as connected.
    pub fn is_connected_subset(&self, s: &VertexSet) -> bool {
        let Some(start) = s.min_elem() else { return true };
        let mut seen = VertexSet::empty(self.n);
        seen.insert(start);
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &(u, _) in &self.adj[v] {
                if s.contains(u) && !seen.contains(u) {
                    seen.insert(u);
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == s.len()
    }

    /// Connected components of the subgraph induced by s, as a partition
    /// of s.
    pub fn connected_components(&self, s: &VertexSet) -> Partition {
        let mut seen = VertexSet::empty(self.n);
        let mut pieces = Vec::new();
        for start in s.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut piece = VertexSet::empty(self.n);
            piece.insert(start);
            seen.insert(start);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &(u, _) in &self.adj[v] {
                    if s.contains(u) && !seen.contains(u) {
                        seen.insert(u);
                        piece.insert(u);
                        stack.push(u);
                    }
                }
            }
            pieces.push(piece);
        }
        Partition::new(pieces)
    }

    /// Induced subgraph on the complement of `s`, along with the identity
    /// remapping between old and new vertex numbers.
    pub fn delete_vertices(&self, s: &VertexSet) -> (Graph, DeletionMap) {
        let mut old_to_new = vec![None; self.n];
        let mut new_to_old = Vec::new();
        for (v, slot) in old_to_new.iter_mut().enumerate() {
            if !s.contains(v) {
                *slot = Some(new_to_old.len());
                new_to_old.push(v);
            }
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((old_to_new[u]?, old_to_new[v]?)))
            .collect();
        let g = Graph::new(new_to_old.len(), edges).expect("remapped edges are in range");
        (g, DeletionMap { old_to_new, new_to_old })
    }
}

/// Stable identity remapping returned by [`Graph::delete_vertices`].
#[derive(Clone, Debug)]
pub struct DeletionMap {
    pub old_to_new: Vec<Option<usize>>,
    pub new_to_old: Vec<usize>,
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Unions the two classes; false if they were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}
