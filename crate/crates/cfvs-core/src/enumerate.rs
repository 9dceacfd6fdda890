//! Enumeration of minimal feedback vertex sets and of their compact
//! representations.
//!
//! A compact representation is a family of pairwise-disjoint non-empty
//! vertex classes; choosing exactly one vertex per class yields a feedback
//! vertex set. The enumerator guarantees:
//!   soundness    — every choice from every emitted representation is an
//!                  FVS with as many vertices as there are classes, and at
//!                  most k of them;
//!   completeness — every inclusion-minimal FVS of size <= k is such a
//!                  choice from at least one emitted representation.
//!
//! The branching skeleton: repeatedly delete degree-<=1 vertices (never on a
//! cycle), force loop vertices into the solution, and branch (in / out) on a
//! degree->=3 undecided vertex. When no such vertex remains, the undecided
//! vertices all have degree 2 and form paths and cycles: a pure cycle is a
//! class (hit it anywhere, once); each path between two excluded vertices is
//! a candidate class that cuts one core edge; the core multigraph on the
//! excluded vertices then needs a minimum feedback edge set, and those are
//! exactly the complements of maximal spanning forests.

use crate::graph::{Graph, UnionFind};
use crate::set::VertexSet;
use itertools::Itertools;
use std::collections::BTreeSet;

/// Pairwise-disjoint non-empty vertex classes, kept sorted by minimum
/// element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CompactRepresentation {
    classes: Vec<VertexSet>,
}

impl CompactRepresentation {
    pub fn new(mut classes: Vec<VertexSet>) -> Self {
        for c in &classes {
            assert!(!c.is_empty(), "classes are non-empty");
        }
        for i in 0..classes.len() {
            for j in i + 1..classes.len() {
                assert!(classes[i].is_disjoint(&classes[j]), "classes are pairwise disjoint");
            }
        }
        classes.sort_by_key(|c| c.min_elem());
        CompactRepresentation { classes }
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Streams the one-vertex-per-class choices. The empty representation
    /// has exactly one choice: the empty set.
    pub fn realizations(&self, n: usize) -> Box<dyn Iterator<Item = VertexSet> + '_> {
        if self.classes.is_empty() {
            return Box::new(std::iter::once(VertexSet::empty(n)));
        }
        Box::new(
            self.classes
                .iter()
                .map(|c| c.to_vec())
                .multi_cartesian_product()
                .map(move |choice| VertexSet::from_iter(n, choice)),
        )
    }

    /// Number of choices: the product of class sizes.
    pub fn realization_count(&self) -> u128 {
        self.classes.iter().map(|c| c.len() as u128).product()
    }
}

/// All inclusion-minimal feedback vertex sets of size <= k, by brute force
/// (oracle-scale; exponential in n).
pub fn enumerate_minimal_fvs(g: &Graph, k: usize) -> Vec<VertexSet> {
    let n = g.n();
    let all = g.full_vertex_set();
    let mut out = Vec::new();
    for size in 0..=k.min(n) {
        for combo in (0..n).combinations(size) {
            let f = VertexSet::from_iter(n, combo);
            let keep = all.difference(&f);
            if !g.is_forest_within(&keep) {
                continue;
            }
            let minimal = f.iter().all(|v| {
                let mut back = keep.clone();
                back.insert(v);
                !g.is_forest_within(&back)
            });
            if minimal {
                out.push(f);
            }
        }
    }
    out
}

/// Exhaustively checks a representation: disjointness (by construction),
/// <= k classes, and every choice an FVS (inclusion-minimal when asked).
pub fn verify_compact_rep(
    g: &Graph,
    rep: &CompactRepresentation,
    k: usize,
    require_minimal: bool,
) -> bool {
    if rep.len() > k {
        return false;
    }
    let all = g.full_vertex_set();
    for choice in rep.realizations(g.n()) {
        if choice.len() != rep.len() {
            return false;
        }
        let keep = all.difference(&choice);
        if !g.is_forest_within(&keep) {
            return false;
        }
        if require_minimal {
            for v in choice.iter() {
                let mut back = keep.clone();
                back.insert(v);
                if g.is_forest_within(&back) {
                    return false;
                }
            }
        }
    }
    true
}

struct Enumerator<'a> {
    g: &'a Graph,
    k: usize,
    out: BTreeSet<Vec<VertexSet>>,
}

/// Enumerates compact representations covering all minimal FVSs of size
/// <= k. Output is deduplicated and sorted by (class count, classes).
pub fn enumerate_compact_representations(g: &Graph, k: usize) -> Vec<CompactRepresentation> {
    let mut e = Enumerator { g, k, out: BTreeSet::new() };
    e.recurse(g.full_vertex_set(), VertexSet::empty(g.n()), Vec::new());
    let mut reps: Vec<CompactRepresentation> =
        e.out.into_iter().map(CompactRepresentation::new).collect();
    reps.sort_by(|a, b| (a.len(), &a.classes).cmp(&(b.len(), &b.classes)));
    reps
}

impl Enumerator<'_> {
    /// Degree within the alive subgraph; loops count twice.
    fn alive_degrees(&self, alive: &VertexSet) -> Vec<usize> {
        let mut deg = vec![0usize; self.g.n()];
        for &(u, v) in self.g.edges() {
            if alive.contains(u) && alive.contains(v) {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        deg
    }

    fn recurse(&mut self, mut alive: VertexSet, mut excluded: VertexSet, mut chosen: Vec<usize>) {
        // Reduction fixpoint: strip degree-<=1 vertices (on no cycle), force
        // loop vertices in (or die if the loop vertex was excluded).
        loop {
            let deg = self.alive_degrees(&alive);
            let mut changed = false;
            for v in alive.iter().collect::<Vec<_>>() {
                if deg[v] <= 1 {
                    alive.remove(v);
                    changed = true;
                }
            }
            if changed {
                continue;
            }
            let mut forced_dead = false;
            for &(u, v) in self.g.edges() {
                if u == v && alive.contains(u) {
                    if excluded.contains(u) {
                        return; // an excluded vertex on a loop: no FVS here
                    }
                    chosen.push(u);
                    alive.remove(u);
                    forced_dead = chosen.len() > self.k;
                    changed = true;
                    break;
                }
            }
            if forced_dead {
                return;
            }
            if !changed {
                break;
            }
        }
        // Branch on the smallest undecided vertex of degree >= 3.
        let deg = self.alive_degrees(&alive);
        let branch = alive.iter().find(|&v| !excluded.contains(v) && deg[v] >= 3);
        if let Some(v) = branch {
            if chosen.len() < self.k {
                let mut in_alive = alive.clone();
                in_alive.remove(v);
                let mut in_chosen = chosen.clone();
                in_chosen.push(v);
                self.recurse(in_alive, excluded.clone(), in_chosen);
            }
            excluded.insert(v);
            self.recurse(alive, excluded, chosen);
            return;
        }
        self.emit_leaf(&alive, &excluded, &chosen);
    }

    /// At a leaf every undecided alive vertex has degree exactly 2. Decompose
    /// into pure cycles (forced classes), undecided paths between excluded
    /// vertices (cuttable core edges carrying a class), and direct
    /// excluded-excluded edges (bare core edges). Emit one representation
    /// per minimum feedback edge set of the core consisting of cuttable
    /// edges only.
    fn emit_leaf(&mut self, alive: &VertexSet, excluded: &VertexSet, chosen: &[usize]) {
        let n = self.g.n();
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n]; // (nbr, eid)
        for (eid, &(u, v)) in self.g.edges().iter().enumerate() {
            if alive.contains(u) && alive.contains(v) {
                adj[u].push((v, eid));
                if u != v {
                    adj[v].push((u, eid));
                }
            }
        }
        let avail: Vec<usize> =
            alive.iter().filter(|&v| !excluded.contains(v)).collect();
        let mut visited = VertexSet::empty(n);
        let mut used_edge = vec![false; self.g.m()];
        let mut forced: Vec<VertexSet> = Vec::new();
        // Core edges: (endpoint, endpoint, class carried by the path).
        let mut core_edges: Vec<(usize, usize, Option<VertexSet>)> = Vec::new();
        for &a in &avail {
            if visited.contains(a) {
                continue;
            }
            visited.insert(a);
            debug_assert_eq!(adj[a].len(), 2, "undecided leaf vertices have degree 2");
            let (end1, passed1, cyc) =
                walk_run(self.g.edges(), a, adj[a][0].1, &adj, excluded, &mut visited, &mut used_edge);
            if cyc {
                let mut class = VertexSet::singleton(n, a);
                for v in passed1 {
                    class.insert(v);
                }
                forced.push(class);
                continue;
            }
            let (end2, passed2, cyc2) =
                walk_run(self.g.edges(), a, adj[a][1].1, &adj, excluded, &mut visited, &mut used_edge);
            debug_assert!(!cyc2, "second walk of a non-cycle run cannot close a cycle");
            let mut class = VertexSet::singleton(n, a);
            for v in passed1.into_iter().chain(passed2) {
                class.insert(v);
            }
            core_edges.push((end1.unwrap(), end2.unwrap(), Some(class)));
        }
        for (eid, &(u, v)) in self.g.edges().iter().enumerate() {
            if !used_edge[eid] && alive.contains(u) && alive.contains(v) {
                debug_assert!(excluded.contains(u) && excluded.contains(v));
                core_edges.push((u, v, None));
            }
        }
        // Cyclomatic number of the core = edges - rank.
        let mut uf = UnionFind::new(n);
        let mut rank = 0;
        for &(u, v, _) in &core_edges {
            if u != v && uf.union(u, v) {
                rank += 1;
            }
        }
        let mu = core_edges.len() - rank;
        if chosen.len() + forced.len() + mu > self.k {
            return;
        }
        let cuttable: Vec<usize> =
            (0..core_edges.len()).filter(|&i| core_edges[i].2.is_some()).collect();
        if mu > cuttable.len() {
            return;
        }
        let base: Vec<VertexSet> = chosen
            .iter()
            .map(|&v| VertexSet::singleton(n, v))
            .chain(forced.iter().cloned())
            .collect();
        for cut in cuttable.iter().copied().combinations(mu) {
            let cut_set: BTreeSet<usize> = cut.iter().copied().collect();
            let mut uf = UnionFind::new(n);
            let mut forest = true;
            for (i, &(u, v, _)) in core_edges.iter().enumerate() {
                if cut_set.contains(&i) {
                    continue;
                }
                if u == v || !uf.union(u, v) {
                    forest = false;
                    break;
                }
            }
            if !forest {
                continue;
            }
            let mut classes = base.clone();
            for i in cut {
                classes.push(core_edges[i].2.clone().unwrap());
            }
            classes.sort_by_key(|c| c.min_elem());
            self.out.insert(classes);
        }
    }
}

/// Follows a degree-2 run starting along edge `eid` out of `start` until an
/// excluded endpoint or back to `start`. Returns the endpoint (None for a
/// closed cycle), the undecided vertices passed, and whether it cycled.
fn walk_run(
    edges: &[(usize, usize)],
    start: usize,
    mut eid: usize,
    adj: &[Vec<(usize, usize)>],
    excluded: &VertexSet,
    visited: &mut VertexSet,
    used_edge: &mut [bool],
) -> (Option<usize>, Vec<usize>, bool) {
    let mut cur = start;
    let mut passed = Vec::new();
    loop {
        used_edge[eid] = true;
        let (u, v) = edges[eid];
        let nbr = if u == cur { v } else { u };
        if excluded.contains(nbr) {
            return (Some(nbr), passed, false);
        }
        if nbr == start {
            return (None, passed, true);
        }
        visited.insert(nbr);
        passed.push(nbr);
        let &(_, next_eid) =
            adj[nbr].iter().find(|&&(_, e)| e != eid).expect("degree-2 vertex has a second edge");
        cur = nbr;
        eid = next_eid;
    }
}
