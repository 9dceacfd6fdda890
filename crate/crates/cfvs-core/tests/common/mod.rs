//! Brute-force oracles and corpora shared by the integration tests. Each
//! oracle is written as directly from the definitions as possible, so that
//! agreement with the library is evidence, not tautology.
#![allow(dead_code)] // each test binary uses its own subset

use cfvs_core::gen;
use cfvs_core::graph::Graph;
use cfvs_core::set::VertexSet;
use cfvs_core::steiner::Digraph;
use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

// ---------------------------------------------------------------------------
// Subset machinery.

/// All subsets of `universe` of the given size, as vertex sets.
pub fn subsets_of_size(n: usize, size: usize) -> Vec<VertexSet> {
    (0..n).combinations(size).map(|c| VertexSet::from_iter(n, c)).collect()
}

/// All subsets, sizes ascending.
pub fn all_subsets(n: usize) -> Vec<VertexSet> {
    (0..=n).flat_map(|s| subsets_of_size(n, s)).collect()
}

// ---------------------------------------------------------------------------
// Connected vertex cover.

/// Minimum size of a connected vertex cover by exhaustive search (simple
/// graphs). The empty set covers an edgeless graph and counts as connected.
pub fn brute_min_connected_vertex_cover(g: &Graph) -> Option<usize> {
    assert!(g.is_simple());
    for size in 0..=g.n() {
        for s in subsets_of_size(g.n(), size) {
            let covers =
                g.edges().iter().all(|&(u, v)| s.contains(u) || s.contains(v));
            if covers && g.is_connected_subset(&s) {
                return Some(size);
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Branching walks, enumerated as explicit objects: an ordered rooted tree
// shape plus a homomorphism into the digraph. Independent of the library's
// length-convolution recurrence.

#[derive(Clone, Debug)]
pub struct TreeShape(pub Vec<TreeShape>);

/// All ordered rooted trees with exactly `edges` edges (Catalan many).
pub fn ordered_trees(edges: usize) -> Vec<TreeShape> {
    children_lists(edges).into_iter().map(TreeShape).collect()
}

/// All ordered lists of subtrees with `edges` edges in total (each child
/// costs one edge plus its own subtree).
fn children_lists(edges: usize) -> Vec<Vec<TreeShape>> {
    if edges == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=edges {
        for sub in children_lists(first - 1) {
            for tail in children_lists(edges - first) {
                let mut list = Vec::with_capacity(1 + tail.len());
                list.push(TreeShape(sub.clone()));
                list.extend(tail.iter().cloned());
                out.push(list);
            }
        }
    }
    out
}

/// Vertex sets of all homomorphic images of `shape` rooted at `v`, one entry
/// per homomorphism (walks are counted with multiplicity, but each walk's
/// image is a set).
fn hom_images(d: &Digraph, v: usize, shape: &TreeShape, allowed: &VertexSet) -> Vec<VertexSet> {
    let mut acc = vec![VertexSet::singleton(d.n(), v)];
    for child in &shape.0 {
        let mut child_images = Vec::new();
        for &s in d.out(v) {
            if allowed.contains(s) {
                child_images.extend(hom_images(d, s, child, allowed));
            }
        }
        let mut next = Vec::with_capacity(acc.len() * child_images.len());
        for a in &acc {
            for c in &child_images {
                next.push(a.union(c));
            }
        }
        acc = next;
    }
    acc
}

/// Vertex sets of all branching walks of length `len` from `root` staying
/// inside `allowed`, one entry per walk.
pub fn walk_vertex_sets(
    d: &Digraph,
    root: usize,
    allowed: &VertexSet,
    len: usize,
) -> Vec<VertexSet> {
    if !allowed.contains(root) {
        return Vec::new();
    }
    let mut out = Vec::new();
    for shape in ordered_trees(len) {
        out.extend(hom_images(d, root, &shape, allowed));
    }
    out
}

/// Number of branching walks of length `len` from `root` whose image
/// contains every terminal.
pub fn covering_walk_count_oracle(
    d: &Digraph,
    root: usize,
    terminals: &VertexSet,
    len: usize,
) -> u64 {
    let all = VertexSet::full(d.n());
    walk_vertex_sets(d, root, &all, len)
        .iter()
        .filter(|img| terminals.is_subset_of(img))
        .count() as u64
}

// ---------------------------------------------------------------------------
// Steiner brute force.

pub fn reachable_within(d: &Digraph, root: usize, inside: &VertexSet) -> VertexSet {
    let mut seen = VertexSet::empty(d.n());
    if !inside.contains(root) {
        return seen;
    }
    seen.insert(root);
    let mut queue = vec![root];
    while let Some(v) = queue.pop() {
        for &s in d.out(v) {
            if inside.contains(s) && !seen.contains(s) {
                seen.insert(s);
                queue.push(s);
            }
        }
    }
    seen
}

/// Is there an out-tree rooted at `root` on at most `p` vertices containing
/// all terminals? A vertex set S carries one iff root reaches all of S
/// inside S.
pub fn brute_dsot(d: &Digraph, root: usize, terminals: &VertexSet, p: usize) -> bool {
    let n = d.n();
    for s in all_subsets(n) {
        if s.len() > p || !s.contains(root) || !terminals.is_subset_of(&s) {
            continue;
        }
        if reachable_within(d, root, &s) == s {
            return true;
        }
    }
    false
}

/// Is there a tree on at most `p` vertices meeting every group? Equivalent
/// to a connected vertex set of size <= p intersecting every group.
pub fn brute_gst(g: &Graph, groups: &[VertexSet], p: usize) -> bool {
    if groups.is_empty() {
        return p >= 1 && g.n() > 0;
    }
    for s in all_subsets(g.n()) {
        if s.is_empty() || s.len() > p {
            continue;
        }
        if g.is_connected_subset(&s) && groups.iter().all(|grp| !grp.is_disjoint(&s)) {
            return true;
        }
    }
    false
}

// ---------------------------------------------------------------------------
// Minimal feedback vertex sets.

pub fn is_fvs(g: &Graph, f: &VertexSet) -> bool {
    g.is_forest_within(&g.full_vertex_set().difference(f))
}

pub fn is_minimal_fvs(g: &Graph, f: &VertexSet) -> bool {
    if !is_fvs(g, f) {
        return false;
    }
    // FVS feasibility is upward closed, so dropping single vertices decides
    // inclusion-minimality.
    f.iter().all(|v| {
        let mut smaller = f.clone();
        smaller.remove(v);
        !is_fvs(g, &smaller)
    })
}

/// All minimal feedback vertex sets of size <= k, by scanning every subset.
pub fn brute_minimal_fvs(g: &Graph, k: usize) -> BTreeSet<VertexSet> {
    all_subsets(g.n())
        .into_iter()
        .filter(|f| f.len() <= k && is_minimal_fvs(g, f))
        .collect()
}

// ---------------------------------------------------------------------------
// Exhaustive corpus: all non-isomorphic connected simple graphs, n <= 7.
// Generated by attaching a new highest vertex to every smaller connected
// graph in every nonempty way, deduplicating by canonical (minimum) adjacency
// bitmask over all vertex relabelings.

fn pair_bit(u: usize, v: usize) -> usize {
    debug_assert!(u < v);
    v * (v - 1) / 2 + u
}

fn canonical_mask(n: usize, mask: u32) -> u32 {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|v| (0..v).map(move |u| (u, v)))
        .filter(|&(u, v)| mask >> pair_bit(u, v) & 1 == 1)
        .collect();
    let mut best = u32::MAX;
    for perm in (0..n).permutations(n) {
        let mut m = 0u32;
        for &(u, v) in &edges {
            let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
            m |= 1 << pair_bit(a, b);
        }
        best = best.min(m);
    }
    best
}

/// All non-isomorphic connected simple graphs with 1..=max_n vertices
/// (max_n <= 7). The per-n counts are pinned in the caller's tests.
pub fn connected_simple_graphs(max_n: usize) -> Vec<Graph> {
    assert!((1..=7).contains(&max_n));
    let mut per_n: Vec<Vec<u32>> = vec![vec![], vec![0]];
    for n in 2..=max_n {
        let mut set: BTreeSet<u32> = BTreeSet::new();
        for &small in &per_n[n - 1] {
            for nb in 1u32..(1 << (n - 1)) {
                let mut mask = small;
                for u in 0..n - 1 {
                    if nb >> u & 1 == 1 {
                        mask |= 1 << pair_bit(u, n - 1);
                    }
                }
                set.insert(canonical_mask(n, mask));
            }
        }
        per_n.push(set.into_iter().collect());
    }
    let mut out = Vec::new();
    for (n, masks) in per_n.iter().enumerate().skip(1) {
        for &mask in masks {
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|v| (0..v).map(move |u| (u, v)))
                .filter(|&(u, v)| mask >> pair_bit(u, v) & 1 == 1)
                .collect();
            out.push(Graph::new(n, edges).expect("mask edges are in range"));
        }
    }
    out
}

/// Per-n class counts of the corpus (connected simple graphs on 1..=7
/// vertices): 1, 1, 2, 6, 21, 112, 853.
pub const CONNECTED_GRAPH_COUNTS: [usize; 7] = [1, 1, 2, 6, 21, 112, 853];

// ---------------------------------------------------------------------------
// Random corpora (seeded).

pub fn random_multigraphs(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let m = rng.gen_range(0..=2 * n);
            gen::gnm_random_multigraph(n, m, rng.gen())
        })
        .collect()
}

pub fn random_simple_graphs(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let m = rng.gen_range(0..=n * (n - 1) / 2);
            gen::gnm_random_simple(n, m, rng.gen())
        })
        .collect()
}

pub fn random_digraph(rng: &mut ChaCha8Rng, max_n: usize) -> Digraph {
    let n = rng.gen_range(1..=max_n);
    let a = rng.gen_range(0..=3 * n);
    let arcs = (0..a).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
    Digraph::new(n, arcs).expect("arcs are in range")
}

/// A random subset of a given maximum size (possibly empty).
pub fn random_subset(rng: &mut ChaCha8Rng, n: usize, max_size: usize) -> VertexSet {
    let size = rng.gen_range(0..=max_size.min(n));
    let mut s = VertexSet::empty(n);
    while s.len() < size {
        s.insert(rng.gen_range(0..n));
    }
    s
}
