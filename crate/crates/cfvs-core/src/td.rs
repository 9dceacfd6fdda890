//! Tree decompositions: validation, a min-fill heuristic, and conversion to
//! nice form (leaf / introduce / forget / join nodes) for dynamic
//! programming.

use crate::graph::Graph;
use crate::set::VertexSet;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TdError {
    #[error("bag edge ({0}, {1}) is out of range or a self-loop")]
    BadTreeEdge(usize, usize),
    #[error("bags do not form a tree")]
    NotATree,
    #[error("vertex {0} is in no bag")]
    VertexUncovered(usize),
    #[error("edge ({0}, {1}) is in no bag")]
    EdgeUncovered(usize, usize),
    #[error("bags containing vertex {0} are not connected in the tree")]
    DisconnectedTrace(usize),
    #[error("bag universe mismatch")]
    UniverseMismatch,
}

/// A tree decomposition: bags indexed 0.., plus tree edges between bags.
#[derive(Clone, Debug)]
pub struct TreeDecomposition {
    pub bags: Vec<VertexSet>,
    pub edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    /// Width = max bag size - 1 (0 for an all-empty decomposition).
    pub fn width(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(0).saturating_sub(1)
    }

    /// Checks the three decomposition axioms against g plus tree-ness.
    pub fn validate(&self, g: &Graph) -> Result<(), TdError> {
        let k = self.bags.len();
        if k == 0 {
            return Err(TdError::NotATree);
        }
        for b in &self.bags {
            if b.universe() != g.n() {
                return Err(TdError::UniverseMismatch);
            }
        }
        let mut adj = vec![Vec::new(); k];
        for &(a, b) in &self.edges {
            if a >= k || b >= k || a == b {
                return Err(TdError::BadTreeEdge(a, b));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        if self.edges.len() != k - 1 {
            return Err(TdError::NotATree);
        }
        let mut seen = vec![false; k];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(a) = stack.pop() {
            for &b in &adj[a] {
                if !seen[b] {
                    seen[b] = true;
                    count += 1;
                    stack.push(b);
                }
            }
        }
        if count != k {
            return Err(TdError::NotATree);
        }
        for v in 0..g.n() {
            if !self.bags.iter().any(|b| b.contains(v)) {
                return Err(TdError::VertexUncovered(v));
            }
        }
        for &(u, v) in g.edges() {
            if !self.bags.iter().any(|b| b.contains(u) && b.contains(v)) {
                return Err(TdError::EdgeUncovered(u, v));
            }
        }
        // Trace connectivity: bags containing v induce a connected subtree.
        for v in 0..g.n() {
            let holders: Vec<usize> =
                (0..k).filter(|&i| self.bags[i].contains(v)).collect();
            let holder_set: BTreeSet<usize> = holders.iter().copied().collect();
            let mut seen: BTreeSet<usize> = BTreeSet::new();
            let mut stack = vec![holders[0]];
            seen.insert(holders[0]);
            while let Some(a) = stack.pop() {
                for &b in &adj[a] {
                    if holder_set.contains(&b) && seen.insert(b) {
                        stack.push(b);
                    }
                }
            }
            if seen.len() != holders.len() {
                return Err(TdError::DisconnectedTrace(v));
            }
        }
        Ok(())
    }
}

/// Min-fill elimination heuristic: repeatedly eliminates the vertex whose
/// neighborhood needs the fewest fill edges (ties: smaller degree, then
/// smaller id), emitting the bag {v} + N(v) and linking it to the bag of the
/// earliest-eliminated remaining neighbor. Loops and parallel edges do not
/// affect treewidth and are ignored.
pub fn greedy_td(g: &Graph) -> TreeDecomposition {
    let n = g.n();
    if n == 0 {
        return TreeDecomposition { bags: vec![VertexSet::empty(0)], edges: vec![] };
    }
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for &(u, v) in g.edges() {
        if u != v {
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }
    let mut alive: BTreeSet<usize> = (0..n).collect();
    let mut bags: Vec<VertexSet> = Vec::with_capacity(n);
    let mut elim_of: Vec<usize> = vec![usize::MAX; n]; // vertex -> bag index
    let mut tree_edges: Vec<(usize, usize)> = Vec::new();
    for step in 0..n {
        let v = *alive
            .iter()
            .min_by_key(|&&v| {
                let nb: Vec<usize> = adj[v].iter().copied().collect();
                let mut fill = 0usize;
                for i in 0..nb.len() {
                    for j in i + 1..nb.len() {
                        if !adj[nb[i]].contains(&nb[j]) {
                            fill += 1;
                        }
                    }
                }
                (fill, nb.len(), v)
            })
            .expect("alive set is non-empty");
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        let mut bag = VertexSet::singleton(n, v);
        for &u in &nb {
            bag.insert(u);
        }
        bags.push(bag);
        elim_of[v] = step;
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                adj[nb[i]].insert(nb[j]);
                adj[nb[j]].insert(nb[i]);
            }
        }
        for &u in &nb {
            adj[u].remove(&v);
        }
        adj[v].clear();
        alive.remove(&v);
    }
    // Parent of bag i (eliminating v): the bag of the first-eliminated
    // neighbor of v at elimination time; isolated eliminations chain to the
    // next bag so the result stays a tree.
    let order: Vec<usize> = {
        let mut o = vec![0; n];
        for v in 0..n {
            o[elim_of[v]] = v;
        }
        o
    };
    for step in 0..n - 1 {
        let v = order[step];
        let parent_bag = bags[step]
            .iter()
            .filter(|&u| u != v)
            .map(|u| elim_of[u])
            .min()
            .unwrap_or(step + 1);
        tree_edges.push((step, parent_bag));
    }
    TreeDecomposition { bags, edges: tree_edges }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Leaf,
    Introduce(usize),
    Forget(usize),
    Join,
}

#[derive(Clone, Debug)]
pub struct NiceNode {
    pub bag: VertexSet,
    pub kind: NodeKind,
    pub children: Vec<usize>,
}

/// A nice tree decomposition rooted at an empty bag. Leaves keep their
/// original bags; unary links are forget/introduce chains; joins have two
/// children with identical bags.
#[derive(Clone, Debug)]
pub struct NiceTreeDecomposition {
    pub nodes: Vec<NiceNode>,
    pub root: usize,
}

impl NiceTreeDecomposition {
    pub fn width(&self) -> usize {
        self.nodes.iter().map(|nd| nd.bag.len()).max().unwrap_or(0).saturating_sub(1)
    }

    /// Post-order traversal from the root (children before parents).
    pub fn post_order(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![(self.root, false)];
        while let Some((i, expanded)) = stack.pop() {
            if expanded {
                out.push(i);
            } else {
                stack.push((i, true));
                for &c in &self.nodes[i].children {
                    stack.push((c, false));
                }
            }
        }
        out
    }

    /// Structural invariants of nice form, plus the decomposition axioms.
    pub fn validate(&self, g: &Graph) -> Result<(), TdError> {
        for nd in &self.nodes {
            match nd.kind {
                NodeKind::Leaf => {
                    if !nd.children.is_empty() {
                        return Err(TdError::NotATree);
                    }
                }
                NodeKind::Introduce(v) => {
                    if nd.children.len() != 1 {
                        return Err(TdError::NotATree);
                    }
                    let child = &self.nodes[nd.children[0]];
                    let mut expect = child.bag.clone();
                    if expect.contains(v) {
                        return Err(TdError::NotATree);
                    }
                    expect.insert(v);
                    if expect != nd.bag {
                        return Err(TdError::NotATree);
                    }
                }
                NodeKind::Forget(v) => {
                    if nd.children.len() != 1 {
                        return Err(TdError::NotATree);
                    }
                    let child = &self.nodes[nd.children[0]];
                    if !child.bag.contains(v) {
                        return Err(TdError::NotATree);
                    }
                    let mut expect = child.bag.clone();
                    expect.remove(v);
                    if expect != nd.bag {
                        return Err(TdError::NotATree);
                    }
                }
                NodeKind::Join => {
                    if nd.children.len() != 2 {
                        return Err(TdError::NotATree);
                    }
                    for &c in &nd.children {
                        if self.nodes[c].bag != nd.bag {
                            return Err(TdError::NotATree);
                        }
                    }
                }
            }
        }
        if !self.nodes[self.root].bag.is_empty() {
            return Err(TdError::NotATree);
        }
        // Reuse the plain validator for the decomposition axioms.
        let mut edges = Vec::new();
        for (i, nd) in self.nodes.iter().enumerate() {
            for &c in &nd.children {
                edges.push((i, c));
            }
        }
        let td =
            TreeDecomposition { bags: self.nodes.iter().map(|nd| nd.bag.clone()).collect(), edges };
        td.validate(g)
    }
}

struct Nicifier<'a> {
    td: &'a TreeDecomposition,
    adj: Vec<Vec<usize>>,
    nodes: Vec<NiceNode>,
}

impl Nicifier<'_> {
    fn push(&mut self, bag: VertexSet, kind: NodeKind, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode { bag, kind, children });
        self.nodes.len() - 1
    }

    /// Appends forget/introduce nodes above `from` until its bag equals `to`.
    fn lift(&mut self, mut from: usize, to: &VertexSet) -> usize {
        let drop: Vec<usize> = self.nodes[from].bag.difference(to).to_vec();
        for v in drop {
            let mut bag = self.nodes[from].bag.clone();
            bag.remove(v);
            from = self.push(bag, NodeKind::Forget(v), vec![from]);
        }
        let add: Vec<usize> = to.difference(&self.nodes[from].bag).to_vec();
        for v in add {
            let mut bag = self.nodes[from].bag.clone();
            bag.insert(v);
            from = self.push(bag, NodeKind::Introduce(v), vec![from]);
        }
        from
    }

    /// Builds the nice subtree for td bag `b` (rooted away from `parent`),
    /// returning a node whose bag equals bag b.
    fn build(&mut self, b: usize, parent: usize) -> usize {
        let bag = self.td.bags[b].clone();
        let children: Vec<usize> =
            self.adj[b].iter().copied().filter(|&c| c != parent).collect();
        let mut lifted: Vec<usize> = Vec::new();
        for c in children {
            let sub = self.build(c, b);
            lifted.push(self.lift(sub, &bag));
        }
        match lifted.len() {
            0 => self.push(bag, NodeKind::Leaf, vec![]),
            1 => lifted[0],
            _ => {
                let mut acc = lifted[0];
                for &r in &lifted[1..] {
                    acc = self.push(bag.clone(), NodeKind::Join, vec![acc, r]);
                }
                acc
            }
        }
    }
}

/// Converts a tree decomposition to nice form rooted at an empty bag.
/// Bag sizes never grow, so the width is preserved.
pub fn nicify(td: &TreeDecomposition) -> NiceTreeDecomposition {
    assert!(!td.bags.is_empty(), "a decomposition has at least one bag");
    let mut adj = vec![Vec::new(); td.bags.len()];
    for &(a, b) in &td.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    for nb in &mut adj {
        nb.sort_unstable();
    }
    let universe = td.bags[0].universe();
    let mut nf = Nicifier { td, adj, nodes: Vec::new() };
    let top = nf.build(0, usize::MAX);
    let root = nf.lift(top, &VertexSet::empty(universe));
    NiceTreeDecomposition { nodes: nf.nodes, root }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_graph(n: usize) -> Graph {
        Graph::new(n, (0..n - 1).map(|i| (i, i + 1)).collect()).unwrap()
    }

    fn cycle_graph(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).unwrap()
    }

    #[test]
    fn greedy_widths_on_known_families() {
        assert_eq!(greedy_td(&path_graph(6)).width(), 1);
        assert_eq!(greedy_td(&cycle_graph(5)).width(), 2);
        let k4 = Graph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(greedy_td(&k4).width(), 3);
    }

    #[test]
    fn greedy_td_validates() {
        for g in [path_graph(7), cycle_graph(6), Graph::new(1, vec![]).unwrap()] {
            let td = greedy_td(&g);
            td.validate(&g).unwrap();
        }
        // Disconnected graph with an isolated vertex.
        let g = Graph::new(5, vec![(0, 1), (3, 4)]).unwrap();
        let td = greedy_td(&g);
        td.validate(&g).unwrap();
    }

    #[test]
    fn greedy_td_empty_graph() {
        let g = Graph::new(0, vec![]).unwrap();
        let td = greedy_td(&g);
        td.validate(&g).unwrap();
        assert_eq!(td.width(), 0);
    }

    #[test]
    fn validate_rejects_broken_decompositions() {
        let g = path_graph(3);
        // Missing edge coverage.
        let td = TreeDecomposition {
            bags: vec![
                VertexSet::from_iter(3, [0, 1]),
                VertexSet::from_iter(3, [2]),
            ],
            edges: vec![(0, 1)],
        };
        assert_eq!(td.validate(&g), Err(TdError::EdgeUncovered(1, 2)));
        // Disconnected trace for vertex 0.
        let td = TreeDecomposition {
            bags: vec![
                VertexSet::from_iter(3, [0, 1]),
                VertexSet::from_iter(3, [1, 2]),
                VertexSet::from_iter(3, [0, 2]),
            ],
            edges: vec![(0, 1), (1, 2)],
        };
        assert_eq!(td.validate(&g), Err(TdError::DisconnectedTrace(0)));
        // Not a tree (cycle of bags).
        let td = TreeDecomposition {
            bags: vec![
                VertexSet::from_iter(3, [0, 1]),
                VertexSet::from_iter(3, [1, 2]),
                VertexSet::from_iter(3, [1]),
            ],
            edges: vec![(0, 1), (1, 2), (2, 0)],
        };
        assert!(td.validate(&g).is_err());
    }

    #[test]
    fn nicify_preserves_width_and_validates() {
        for g in [path_graph(6), cycle_graph(7)] {
            let td = greedy_td(&g);
            let nice = nicify(&td);
            nice.validate(&g).unwrap();
            assert_eq!(nice.width(), td.width());
            assert!(self::post_order_is_consistent(&nice));
        }
    }

    #[test]
    fn nicify_handles_single_bag() {
        let g = Graph::new(2, vec![(0, 1)]).unwrap();
        let td = TreeDecomposition { bags: vec![VertexSet::full(2)], edges: vec![] };
        let nice = nicify(&td);
        nice.validate(&g).unwrap();
    }

    fn post_order_is_consistent(nice: &NiceTreeDecomposition) -> bool {
        let order = nice.post_order();
        if order.len() != nice.nodes.len() {
            return false;
        }
        let mut pos = vec![0; nice.nodes.len()];
        for (idx, &nd) in order.iter().enumerate() {
            pos[nd] = idx;
        }
        nice.nodes.iter().enumerate().all(|(i, nd)| nd.children.iter().all(|&c| pos[c] < pos[i]))
    }
}
