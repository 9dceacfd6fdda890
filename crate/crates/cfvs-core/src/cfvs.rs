//! Connected feedback vertex set solvers.
//!
//! A CFVS of (G, k) is a set F of at most k vertices such that G - F is a
//! forest and G[F] is connected (the empty set counts as connected). Three
//! routes are provided: the compact-representation + group Steiner tree
//! pipeline, the partition-table dynamic program over a tree decomposition,
//! and a brute-force oracle.

use crate::dp;
use crate::enumerate::enumerate_compact_representations;
use crate::graph::{Graph, GraphError};
use crate::set::VertexSet;
use crate::stats::SolveStats;
use crate::steiner::{gst_decide, gst_extract_tree, CountMode, GstInstance};
use crate::td::{greedy_td, nicify, TdError, TreeDecomposition};
use itertools::Itertools;
use std::time::Instant;

#[derive(Clone, Debug)]
pub struct CfvsInstance {
    pub graph: Graph,
    pub k: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveMethod {
    CompactGst,
    TreewidthDp,
    BruteForce,
}

impl std::fmt::Display for SolveMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SolveMethod::CompactGst => "compact-gst",
            SolveMethod::TreewidthDp => "treewidth-dp",
            SolveMethod::BruteForce => "brute-force",
        })
    }
}

#[derive(Clone, Debug)]
pub struct CfvsSolution {
    pub vertices: VertexSet,
    pub method: SolveMethod,
    pub stats: SolveStats,
}

/// Every surfaced solution re-passes the three validity predicates; a
/// failure here is a solver bug, not an input error.
fn validated(
    inst: &CfvsInstance,
    vertices: VertexSet,
    method: SolveMethod,
    stats: SolveStats,
) -> CfvsSolution {
    let g = &inst.graph;
    let keep = g.full_vertex_set().difference(&vertices);
    assert!(g.is_forest_within(&keep), "solution is not a feedback vertex set");
    assert!(g.is_connected_subset(&vertices), "solution does not induce a connected subgraph");
    assert!(vertices.len() <= inst.k, "solution exceeds the budget");
    CfvsSolution { vertices, method, stats }
}

/// Compact-representation pipeline: enumerate representations covering all
/// minimal FVSs of size <= k; for each, ask for a tree on <= k vertices
/// meeting every class. Such a tree's vertex set contains a choice from the
/// representation (hence contains an FVS, hence is one by upward closure),
/// induces a connected subgraph, and fits the budget — so it is a solution.
/// Conversely any solution contains a minimal FVS, which some representation
/// realizes, and the solution's spanning tree meets every class.
pub fn cfvs_decide(inst: &CfvsInstance, mode: CountMode) -> Option<CfvsSolution> {
    let g = &inst.graph;
    let start = Instant::now();
    let mut stats = SolveStats::default();
    if g.is_forest() {
        stats.elapsed = start.elapsed();
        return Some(validated(inst, VertexSet::empty(g.n()), SolveMethod::CompactGst, stats));
    }
    if inst.k == 0 {
        return None;
    }
    let reps = enumerate_compact_representations(g, inst.k);
    for rep in reps {
        debug_assert!(!rep.is_empty(), "a cyclic graph admits no empty representation");
        stats.reps_tried += 1;
        let gst = GstInstance::new(g.clone(), rep.classes().to_vec(), inst.k)
            .expect("representation classes are disjoint and non-empty");
        if gst_decide(&gst, mode, &mut stats) {
            let witness = gst_extract_tree(&gst, mode, &mut stats)
                .expect("a yes-instance always yields a witness");
            stats.elapsed = start.elapsed();
            return Some(validated(inst, witness, SolveMethod::CompactGst, stats));
        }
    }
    None
}

/// Exhaustive search by increasing size, lexicographic within a size.
/// Intended for n <= 16 (oracle role).
pub fn cfvs_bruteforce(inst: &CfvsInstance) -> Option<CfvsSolution> {
    let g = &inst.graph;
    let start = Instant::now();
    let all = g.full_vertex_set();
    let mut stats = SolveStats::default();
    for size in 0..=inst.k.min(g.n()) {
        for combo in (0..g.n()).combinations(size) {
            let f = VertexSet::from_iter(g.n(), combo);
            stats.subsets_evaluated += 1;
            if g.is_forest_within(&all.difference(&f)) && g.is_connected_subset(&f) {
                stats.elapsed = start.elapsed();
                return Some(validated(inst, f, SolveMethod::BruteForce, stats));
            }
        }
    }
    None
}

/// Tree-decomposition dynamic program. Uses the supplied decomposition or a
/// greedy one; rejects invalid decompositions.
pub fn cfvs_decide_dp(
    inst: &CfvsInstance,
    td: Option<&TreeDecomposition>,
) -> Result<Option<CfvsSolution>, TdError> {
    let g = &inst.graph;
    let start = Instant::now();
    let owned;
    let td = match td {
        Some(td) => td,
        None => {
            owned = greedy_td(g);
            &owned
        }
    };
    td.validate(g)?;
    let nice = nicify(td);
    let mut stats = SolveStats::default();
    let solved = dp::dp_solve(g, &nice, inst.k, &mut stats);
    stats.elapsed = start.elapsed();
    Ok(solved.map(|(size, vertices)| {
        debug_assert_eq!(size, vertices.len());
        validated(inst, vertices, SolveMethod::TreewidthDp, stats)
    }))
}

/// Builds the triangle gadget: one new vertex per edge {u, v}, adjacent to
/// both endpoints. The result has n + m vertices and 3m edges, and its
/// minimum connected FVS size equals the minimum connected vertex cover
/// size of the input.
pub fn cvc_to_cfvs(g: &Graph) -> Result<Graph, GraphError> {
    if !g.is_simple() {
        return Err(GraphError::NotSimple("gadget construction requires a simple graph".into()));
    }
    let n = g.n();
    let m = g.m();
    let mut edges = Vec::with_capacity(3 * m);
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        edges.push((u, v));
        edges.push((u, n + i));
        edges.push((n + i, v));
    }
    Graph::new(n + m, edges)
}
