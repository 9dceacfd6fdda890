//! Directed Steiner out-tree and group Steiner tree decision procedures
//! based on inclusion-exclusion counting of branching walks.
//!
//! A branching walk of length j from r in a digraph D is a pair (T, phi)
//! where T is an ordered rooted tree with j edges and phi is a homomorphism
//! of T into D taking the root of T to r. There is an out-tree on at most p
//! vertices rooted at r containing a terminal set S iff some length
//! j <= p - 1 admits a branching walk from r whose image covers S, and the
//! number of covering walks equals the signed sum over X of subsets of S of
//! the number of walks avoiding X (inclusion-exclusion). Counting walks that
//! avoid a fixed set is polynomial via the convolution recurrence
//! b_0(v) = 1, b_j(v) = sum over arcs v->s and j1+j2 = j-1 of
//! b_{j1}(s) * b_{j2}(v).

use crate::graph::GraphError;
use crate::set::VertexSet;
use crate::stats::SolveStats;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rayon::prelude::*;

/// A digraph on vertices 0..n. Duplicate arcs collapse; self-arcs are kept.
#[derive(Clone, Debug)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    out: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn new(n: usize, arcs: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let mut out = vec![Vec::new(); n];
        for &(u, v) in &arcs {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange(u, v, n));
            }
            out[u].push(v);
        }
        for o in &mut out {
            o.sort_unstable();
            o.dedup();
        }
        let mut dedup_arcs: Vec<(usize, usize)> =
            out.iter().enumerate().flat_map(|(u, os)| os.iter().map(move |&v| (u, v))).collect();
        dedup_arcs.sort_unstable();
        Ok(Digraph { n, arcs: dedup_arcs, out })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn out(&self, v: usize) -> &[usize] {
        &self.out[v]
    }
}

/// How walk counts are carried: exactly (arbitrary precision) or modulo a
/// caller-supplied prime.
///
/// Modular mode can only err in one direction: a reported "yes" is always
/// certified by a nonzero residue, while a "no" is false only when every
/// signed sum is a nonzero multiple of the prime. With a random 62-bit prime
/// and desk-scale instances (counts below 2^4096), at most 67 primes out of
/// the ~5*10^16 primes in [2^61, 2^62) can divide a fixed nonzero sum, so
/// the false-negative probability is below 10^-13.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMode {
    Exact,
    Modular { prime: u64 },
}

/// A branching-walk count: an exact non-negative integer or a residue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WalkCount {
    Exact(BigUint),
    Modular { residue: u64, prime: u64 },
}

/// Directed Steiner out-tree instance: is there an out-tree of D rooted at
/// `root` on at most `max_vertices` vertices containing every terminal?
#[derive(Clone, Debug)]
pub struct DsotInstance {
    pub digraph: Digraph,
    pub root: usize,
    pub terminals: VertexSet,
    pub max_vertices: usize,
}

impl DsotInstance {
    pub fn new(digraph: Digraph, root: usize, terminals: VertexSet, max_vertices: usize) -> Self {
        assert!(root < digraph.n(), "root out of range");
        assert_eq!(terminals.universe(), digraph.n(), "terminal universe mismatch");
        assert!(max_vertices >= 1, "an out-tree has at least one vertex");
        DsotInstance { digraph, root, terminals, max_vertices }
    }
}

/// Group Steiner tree instance: is there a tree of G on at most
/// `max_vertices` vertices containing at least one vertex of every group?
#[derive(Clone, Debug)]
pub struct GstInstance {
    pub graph: crate::graph::Graph,
    pub groups: Vec<VertexSet>,
    pub max_vertices: usize,
}

impl GstInstance {
    /// Validates that groups are non-empty and pairwise disjoint.
    pub fn new(
        graph: crate::graph::Graph,
        groups: Vec<VertexSet>,
        max_vertices: usize,
    ) -> Result<Self, GraphError> {
        for g in &groups {
            if g.universe() != graph.n() {
                return Err(GraphError::InvalidInstance("group universe mismatch".into()));
            }
            if g.is_empty() {
                return Err(GraphError::InvalidInstance("empty group".into()));
            }
        }
        for i in 0..groups.len() {
            for j in i + 1..groups.len() {
                if !groups[i].is_disjoint(&groups[j]) {
                    return Err(GraphError::InvalidInstance(format!(
                        "groups {} and {} overlap",
                        i, j
                    )));
                }
            }
        }
        Ok(GstInstance { graph, groups, max_vertices })
    }
}

// ---------------------------------------------------------------------------
// Counting kernels, generic over exact / modular arithmetic.

trait Arith: Sync {
    type E: Clone + Send + Sync;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn add_assign(&self, a: &mut Self::E, b: &Self::E);
    fn sub_assign(&self, a: &mut Self::E, b: &Self::E);
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn is_nonzero(&self, a: &Self::E) -> bool;
}

struct ExactArith;

impl Arith for ExactArith {
    type E = BigInt;
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add_assign(&self, a: &mut BigInt, b: &BigInt) {
        *a += b;
    }
    fn sub_assign(&self, a: &mut BigInt, b: &BigInt) {
        *a -= b;
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn is_nonzero(&self, a: &BigInt) -> bool {
        !a.is_zero()
    }
}

struct ModArith {
    p: u64,
}

impl Arith for ModArith {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn add_assign(&self, a: &mut u64, b: &u64) {
        *a = (*a + *b) % self.p;
    }
    fn sub_assign(&self, a: &mut u64, b: &u64) {
        *a = (*a + self.p - *b) % self.p;
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mulmod(*a, *b, self.p)
    }
    fn is_nonzero(&self, a: &u64) -> bool {
        *a != 0
    }
}

/// b[v][j] = number of branching walks of length j from v that stay inside
/// the complement of `excluded`. Rows of excluded vertices stay all-zero.
fn walk_table<A: Arith>(d: &Digraph, excluded: &VertexSet, max_len: usize, ar: &A) -> Vec<Vec<A::E>> {
    let n = d.n();
    let mut b: Vec<Vec<A::E>> = vec![vec![ar.zero(); max_len + 1]; n];
    for (v, row) in b.iter_mut().enumerate() {
        if !excluded.contains(v) {
            row[0] = ar.one();
        }
    }
    for j in 1..=max_len {
        for v in 0..n {
            if excluded.contains(v) {
                continue;
            }
            let mut acc = ar.zero();
            for &s in d.out(v) {
                if excluded.contains(s) {
                    continue;
                }
                for j1 in 0..j {
                    if !ar.is_nonzero(&b[s][j1]) {
                        continue;
                    }
                    let prod = ar.mul(&b[s][j1], &b[v][j - 1 - j1]);
                    ar.add_assign(&mut acc, &prod);
                }
            }
            b[v][j] = acc;
        }
    }
    b
}

/// counts[r][j] = number of branching walks of length j from r whose image
/// contains every terminal, computed by inclusion-exclusion over subsets X
/// of the terminals: sum of (-1)^|X| b_j(r) in D - X.
///
/// Terms with r in X contribute nothing (no walk from r avoids r), which
/// also makes the row of a terminal vertex r the covering count for the
/// remaining terminals — correct, since walks from r always visit r.
fn ie_cover_counts<A: Arith>(d: &Digraph, terminals: &VertexSet, max_len: usize, ar: &A) -> Vec<Vec<A::E>> {
    let terms: Vec<usize> = terminals.to_vec();
    let l = terms.len();
    let n = d.n();
    let zero_matrix = || vec![vec![ar.zero(); max_len + 1]; n];
    let accumulate = |acc: &mut Vec<Vec<A::E>>, mask: u64| {
        let mut excluded = VertexSet::empty(n);
        for (i, &t) in terms.iter().enumerate() {
            if mask >> i & 1 == 1 {
                excluded.insert(t);
            }
        }
        let negative = mask.count_ones() % 2 == 1;
        let b = walk_table(d, &excluded, max_len, ar);
        for (r, row) in b.iter().enumerate() {
            if excluded.contains(r) {
                continue;
            }
            for (j, cnt) in row.iter().enumerate() {
                if negative {
                    ar.sub_assign(&mut acc[r][j], cnt);
                } else {
                    ar.add_assign(&mut acc[r][j], cnt);
                }
            }
        }
    };
    let total: u64 = 1 << l;
    if total < 32 {
        let mut acc = zero_matrix();
        for mask in 0..total {
            accumulate(&mut acc, mask);
        }
        acc
    } else {
        (0..total)
            .into_par_iter()
            .fold(zero_matrix, |mut acc, mask| {
                accumulate(&mut acc, mask);
                acc
            })
            .reduce(zero_matrix, |mut a, b| {
                for (ra, rb) in a.iter_mut().zip(&b) {
                    for (ea, eb) in ra.iter_mut().zip(rb) {
                        ar.add_assign(ea, eb);
                    }
                }
                a
            })
    }
}

/// Counts branching walks from `root` of every length 0..=max_len that stay
/// inside `allowed`. Requires root to be allowed.
pub fn count_branching_walks(
    d: &Digraph,
    root: usize,
    allowed: &VertexSet,
    max_len: usize,
    mode: CountMode,
) -> Vec<WalkCount> {
    assert!(allowed.contains(root), "root must be allowed");
    let excluded = allowed.complement();
    match mode {
        CountMode::Exact => {
            let b = walk_table(d, &excluded, max_len, &ExactArith);
            b[root]
                .iter()
                .map(|c| WalkCount::Exact(c.to_biguint().expect("walk counts are non-negative")))
                .collect()
        }
        CountMode::Modular { prime } => {
            let b = walk_table(d, &excluded, max_len, &ModArith { p: prime });
            b[root].iter().map(|&residue| WalkCount::Modular { residue, prime }).collect()
        }
    }
}

/// Exact covering-walk counts per root and length (the inclusion-exclusion
/// signed sums). Used directly by tests; the decision procedures scan it.
pub fn covering_walk_counts_exact(
    d: &Digraph,
    terminals: &VertexSet,
    max_len: usize,
) -> Vec<Vec<BigInt>> {
    ie_cover_counts(d, terminals, max_len, &ExactArith)
}

/// Decides a directed Steiner out-tree instance.
pub fn dsot_decide(inst: &DsotInstance, mode: CountMode, stats: &mut SolveStats) -> bool {
    let mut eff = inst.terminals.clone();
    eff.remove(inst.root);
    let max_len = inst.max_vertices - 1;
    stats.subsets_evaluated += 1u64 << eff.len();
    match mode {
        CountMode::Exact => {
            let counts = ie_cover_counts(&inst.digraph, &eff, max_len, &ExactArith);
            for c in &counts[inst.root] {
                assert!(!c.is_negative(), "inclusion-exclusion produced a negative count");
            }
            counts[inst.root].iter().any(|c| c.is_positive())
        }
        CountMode::Modular { prime } => {
            let counts = ie_cover_counts(&inst.digraph, &eff, max_len, &ModArith { p: prime });
            counts[inst.root].iter().any(|&c| c != 0)
        }
    }
}

/// The digraph instance a group Steiner question reduces to: both
/// orientations of every non-loop edge, one fresh sink per group with arcs
/// from the group's members, budget p + l, and every original vertex as a
/// root candidate.
#[derive(Clone, Debug)]
pub struct GstReduction {
    pub digraph: Digraph,
    pub terminals: VertexSet,
    pub budget: usize,
    pub root_candidates: Vec<usize>,
}

pub fn reduce_gst_to_dsot(inst: &GstInstance) -> GstReduction {
    let n = inst.graph.n();
    let l = inst.groups.len();
    let mut arcs = Vec::new();
    for &(u, v) in inst.graph.edges() {
        if u != v {
            arcs.push((u, v));
            arcs.push((v, u));
        }
    }
    for (i, group) in inst.groups.iter().enumerate() {
        for x in group.iter() {
            arcs.push((x, n + i));
        }
    }
    let digraph = Digraph::new(n + l, arcs).expect("reduction arcs are in range");
    let terminals = VertexSet::from_iter(n + l, n..n + l);
    GstReduction { digraph, terminals, budget: inst.max_vertices + l, root_candidates: (0..n).collect() }
}

/// Decides a group Steiner tree instance.
///
/// Equivalent to running dsot_decide for each root candidate in ascending
/// order with budget p + l, but the walk tables are root-independent, so one
/// table per terminal subset serves every root.
pub fn gst_decide(inst: &GstInstance, mode: CountMode, stats: &mut SolveStats) -> bool {
    if inst.groups.is_empty() {
        // A tree on one vertex meets all zero groups.
        return inst.max_vertices >= 1 && inst.graph.n() > 0;
    }
    if inst.max_vertices == 0 {
        return false;
    }
    let red = reduce_gst_to_dsot(inst);
    let max_len = red.budget - 1;
    stats.subsets_evaluated += 1u64 << inst.groups.len();
    match mode {
        CountMode::Exact => {
            let counts = ie_cover_counts(&red.digraph, &red.terminals, max_len, &ExactArith);
            for &r in &red.root_candidates {
                for c in &counts[r] {
                    assert!(!c.is_negative(), "inclusion-exclusion produced a negative count");
                }
            }
            red.root_candidates.iter().any(|&r| counts[r].iter().any(|c| c.is_positive()))
        }
        CountMode::Modular { prime } => {
            let counts = ie_cover_counts(&red.digraph, &red.terminals, max_len, &ModArith { p: prime });
            red.root_candidates.iter().any(|&r| counts[r].iter().any(|&c| c != 0))
        }
    }
}

/// If the instance is a yes, extracts the vertex set of a witness tree on at
/// most p vertices meeting every group, by deleting vertices one at a time
/// while the reduced instance stays a yes (self-reduction).
pub fn gst_extract_tree(
    inst: &GstInstance,
    mode: CountMode,
    stats: &mut SolveStats,
) -> Option<VertexSet> {
    if !gst_decide(inst, mode, stats) {
        return None;
    }
    let mut graph = inst.graph.clone();
    let mut groups = inst.groups.clone();
    let mut ids: Vec<usize> = (0..inst.graph.n()).collect();
    let p = inst.max_vertices;
    'outer: loop {
        // Once the residual graph is itself a witness, stop deleting.
        if graph.n() <= p
            && graph.is_connected_subset(&graph.full_vertex_set())
            && groups.iter().all(|g| !g.is_empty())
        {
            break;
        }
        for v in 0..graph.n() {
            let doomed = VertexSet::singleton(graph.n(), v);
            let (candidate, map) = graph.delete_vertices(&doomed);
            let new_groups: Vec<VertexSet> = groups
                .iter()
                .map(|g| {
                    VertexSet::from_iter(
                        candidate.n(),
                        g.iter().filter_map(|x| map.old_to_new[x]),
                    )
                })
                .collect();
            if new_groups.iter().any(|g| g.is_empty()) {
                continue;
            }
            let trial = GstInstance { graph: candidate.clone(), groups: new_groups.clone(), max_vertices: p };
            if gst_decide(&trial, mode, stats) {
                graph = candidate;
                groups = new_groups;
                ids = map.new_to_old.iter().map(|&i| ids[i]).collect();
                continue 'outer;
            }
        }
        break;
    }
    let witness = VertexSet::from_iter(inst.graph.n(), ids.iter().copied());
    assert!(witness.len() <= p, "extraction produced an oversized witness");
    assert!(
        inst.graph.is_connected_subset(&witness),
        "extraction produced a disconnected witness"
    );
    assert!(
        inst.groups.iter().all(|g| !g.is_disjoint(&witness)),
        "extraction produced a witness missing a group"
    );
    Some(witness)
}

/// Witness extraction for directed Steiner out-trees by the same
/// self-reduction; root and terminals are never deleted.
pub fn dsot_extract_tree(
    inst: &DsotInstance,
    mode: CountMode,
    stats: &mut SolveStats,
) -> Option<VertexSet> {
    if !dsot_decide(inst, mode, stats) {
        return None;
    }
    let n = inst.digraph.n();
    let mut keep = VertexSet::full(n);
    loop {
        let mut deleted = false;
        for v in 0..n {
            if v == inst.root || inst.terminals.contains(v) || !keep.contains(v) {
                continue;
            }
            let mut trial_keep = keep.clone();
            trial_keep.remove(v);
            if dsot_in_subgraph(inst, &trial_keep, mode, stats) {
                keep = trial_keep;
                deleted = true;
            }
        }
        if !deleted {
            break;
        }
    }
    // Trim to the vertices an actual shortest witness uses: the residual
    // subgraph still admits an out-tree; take reachable vertices.
    let witness = reachable_within(&inst.digraph, inst.root, &keep);
    assert!(inst.terminals.is_subset_of(&witness), "witness misses a terminal");
    assert!(witness.len() <= inst.max_vertices, "witness too large");
    Some(witness)
}

fn dsot_in_subgraph(
    inst: &DsotInstance,
    keep: &VertexSet,
    mode: CountMode,
    stats: &mut SolveStats,
) -> bool {
    let n = inst.digraph.n();
    let arcs = inst
        .digraph
        .arcs()
        .iter()
        .filter(|&&(u, v)| keep.contains(u) && keep.contains(v))
        .copied()
        .collect();
    let d = Digraph::new(n, arcs).expect("subgraph arcs are in range");
    let trial = DsotInstance {
        digraph: d,
        root: inst.root,
        terminals: inst.terminals.clone(),
        max_vertices: inst.max_vertices,
    };
    dsot_decide(&trial, mode, stats)
}

fn reachable_within(d: &Digraph, root: usize, keep: &VertexSet) -> VertexSet {
    let mut seen = VertexSet::empty(d.n());
    if !keep.contains(root) {
        return seen;
    }
    seen.insert(root);
    let mut stack = vec![root];
    while let Some(v) = stack.pop() {
        for &u in d.out(v) {
            if keep.contains(u) && !seen.contains(u) {
                seen.insert(u);
                stack.push(u);
            }
        }
    }
    seen
}

// ---------------------------------------------------------------------------
// Prime generation for modular mode.

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64 (the listed witnesses are exact below
/// 3.3 * 10^24).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A uniformly random prime in [2^61, 2^62).
pub fn random_prime_62(rng: &mut impl Rng) -> u64 {
    loop {
        let candidate = rng.gen_range(1u64 << 61..1u64 << 62) | 1;
        if is_prime_u64(candidate) {
            return candidate;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn stats() -> SolveStats {
        SolveStats::default()
    }

    fn exact_counts(d: &Digraph, root: usize, allowed: &VertexSet, max_len: usize) -> Vec<u64> {
        count_branching_walks(d, root, allowed, max_len, CountMode::Exact)
            .into_iter()
            .map(|c| match c {
                WalkCount::Exact(b) => u64::try_from(b).unwrap(),
                _ => unreachable!(),
            })
            .collect()
    }

    #[test]
    fn walk_counts_single_arc() {
        // One arc r->s. Lengths 0,1,2 admit 1, 1 and 1 walks: the length-2
        // walk is the ordered tree with two children both mapped to s.
        let d = Digraph::new(2, vec![(0, 1)]).unwrap();
        let allowed = VertexSet::full(2);
        assert_eq!(exact_counts(&d, 0, &allowed, 2), vec![1, 1, 1]);
    }

    #[test]
    fn walk_counts_two_leaves() {
        // Arcs r->s, r->t: length 2 has the four ordered child sequences
        // (s,s), (s,t), (t,s), (t,t).
        let d = Digraph::new(3, vec![(0, 1), (0, 2)]).unwrap();
        let allowed = VertexSet::full(3);
        assert_eq!(exact_counts(&d, 0, &allowed, 2), vec![1, 2, 4]);
    }

    #[test]
    fn walk_counts_respect_allowed() {
        let d = Digraph::new(3, vec![(0, 1), (0, 2)]).unwrap();
        let allowed = VertexSet::from_iter(3, [0, 1]);
        assert_eq!(exact_counts(&d, 0, &allowed, 2), vec![1, 1, 1]);
    }

    #[test]
    fn dsot_single_vertex() {
        let d = Digraph::new(1, vec![]).unwrap();
        let inst = DsotInstance::new(d, 0, VertexSet::singleton(1, 0), 1);
        assert!(dsot_decide(&inst, CountMode::Exact, &mut stats()));
    }

    #[test]
    fn dsot_path_needs_three_vertices() {
        let d = Digraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let terminals = VertexSet::singleton(3, 2);
        let no = DsotInstance::new(d.clone(), 0, terminals.clone(), 2);
        assert!(!dsot_decide(&no, CountMode::Exact, &mut stats()));
        let yes = DsotInstance::new(d, 0, terminals, 3);
        assert!(dsot_decide(&yes, CountMode::Exact, &mut stats()));
    }

    #[test]
    fn gst_star_groups() {
        // Star with center 0 and leaves 1..=4; groups {1}, {2}, {3}.
        let g = Graph::new(5, vec![(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let groups = vec![
            VertexSet::singleton(5, 1),
            VertexSet::singleton(5, 2),
            VertexSet::singleton(5, 3),
        ];
        let no = GstInstance::new(g.clone(), groups.clone(), 3).unwrap();
        assert!(!gst_decide(&no, CountMode::Exact, &mut stats()));
        let yes = GstInstance::new(g, groups, 4).unwrap();
        assert!(gst_decide(&yes, CountMode::Exact, &mut stats()));
        let witness = gst_extract_tree(&yes, CountMode::Exact, &mut stats()).unwrap();
        assert!(witness.len() <= 4);
        assert!(witness.contains(1) && witness.contains(2) && witness.contains(3));
    }

    #[test]
    fn gst_single_vertex_group() {
        let g = Graph::new(2, vec![(0, 1)]).unwrap();
        let inst = GstInstance::new(g, vec![VertexSet::singleton(2, 1)], 1).unwrap();
        assert!(gst_decide(&inst, CountMode::Exact, &mut stats()));
    }

    #[test]
    fn gst_no_groups_convention() {
        let g = Graph::new(2, vec![(0, 1)]).unwrap();
        let yes = GstInstance::new(g.clone(), vec![], 1).unwrap();
        assert!(gst_decide(&yes, CountMode::Exact, &mut stats()));
        let empty = Graph::new(0, vec![]).unwrap();
        let no = GstInstance::new(empty, vec![], 1).unwrap();
        assert!(!gst_decide(&no, CountMode::Exact, &mut stats()));
    }

    #[test]
    fn overlapping_groups_rejected() {
        let g = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let groups = vec![VertexSet::from_iter(3, [0, 1]), VertexSet::from_iter(3, [1, 2])];
        assert!(GstInstance::new(g, groups, 2).is_err());
    }

    #[test]
    fn modular_prime_generation() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64((1 << 61) - 1)); // Mersenne prime
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64((1 << 61) + 1));
        let mut rng = rand::rngs::mock::StepRng::new(1 << 61, 12345);
        let p = random_prime_62(&mut rng);
        assert!(is_prime_u64(p) && p >= 1 << 61);
    }
}
