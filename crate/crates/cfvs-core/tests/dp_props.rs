//! Row-by-row validation of the partition-table dynamic program against a
//! subset-enumeration oracle: at every node of the nice decomposition, the
//! table must hold exactly the feasible (S, P, Y) keys with their minimum
//! witness sizes.

mod common;

use cfvs_core::dp::{dp_tables, row_bound, RowKey};
use cfvs_core::graph::Graph;
use cfvs_core::set::VertexSet;
use cfvs_core::stats::SolveStats;
use cfvs_core::td::{greedy_td, nicify, NiceTreeDecomposition};
use std::collections::BTreeMap;

fn canon_pieces(mut pieces: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    pieces.retain(|p| !p.is_empty());
    for p in &mut pieces {
        p.sort_unstable();
    }
    pieces.sort();
    pieces
}

/// Every feasible row at a node with subtree vertices `vi` and bag `bag`:
/// choose F inside vi with G[vi] - F a forest; S = F in the bag; if S is
/// empty F must be finished (empty or one component), otherwise every
/// F-component must reach the bag and P records how they partition S; Y
/// records how the forest components touching the bag partition it.
fn oracle_table(g: &Graph, vi: &VertexSet, bag: &VertexSet) -> BTreeMap<RowKey, usize> {
    let members: Vec<usize> = vi.to_vec();
    let mut out: BTreeMap<RowKey, usize> = BTreeMap::new();
    for mask in 0u64..(1 << members.len()) {
        let mut f = VertexSet::empty(g.n());
        for (i, &v) in members.iter().enumerate() {
            if mask >> i & 1 == 1 {
                f.insert(v);
            }
        }
        let keep = vi.difference(&f);
        if !g.is_forest_within(&keep) {
            continue;
        }
        let s: Vec<usize> = f.intersection(bag).to_vec();
        let fcomps = g.connected_components(&f);
        let p: Vec<Vec<usize>> = if s.is_empty() {
            if !(f.is_empty() || fcomps.len() == 1) {
                continue;
            }
            Vec::new()
        } else {
            if !fcomps.pieces().iter().all(|c| !c.intersection(bag).is_empty()) {
                continue;
            }
            canon_pieces(
                fcomps.pieces().iter().map(|c| c.intersection(bag).to_vec()).collect(),
            )
        };
        let y = canon_pieces(
            g.connected_components(&keep)
                .pieces()
                .iter()
                .map(|c| c.intersection(bag).to_vec())
                .collect(),
        );
        let entry = out.entry(RowKey { s, p, y }).or_insert(usize::MAX);
        *entry = (*entry).min(f.len());
    }
    out
}

fn subtree_vertices(ntd: &NiceTreeDecomposition, n: usize) -> Vec<VertexSet> {
    let mut vis = vec![VertexSet::empty(n); ntd.nodes.len()];
    for i in ntd.post_order() {
        let mut v = ntd.nodes[i].bag.clone();
        for &c in &ntd.nodes[i].children {
            v = v.union(&vis[c]);
        }
        vis[i] = v;
    }
    vis
}

fn check_all_tables(g: &Graph) {
    let td = greedy_td(g);
    let ntd = nicify(&td);
    ntd.validate(g).expect("nicified decomposition is valid");
    assert_eq!(ntd.width(), td.width(), "nicification must not widen bags");
    let mut stats = SolveStats::default();
    let tables = dp_tables(g, &ntd, &mut stats);
    let vis = subtree_vertices(&ntd, g.n());
    let bound = row_bound(ntd.width());
    for i in ntd.post_order() {
        assert!(tables[i].len() as u128 <= bound);
        let got: BTreeMap<RowKey, usize> =
            tables[i].iter().map(|(k, e)| (k.clone(), e.val)).collect();
        let expect = oracle_table(g, &vis[i], &ntd.nodes[i].bag);
        assert_eq!(
            got,
            expect,
            "node {} ({:?}) bag {:?} of graph {:?}",
            i,
            ntd.nodes[i].kind,
            ntd.nodes[i].bag.to_vec(),
            g.edges()
        );
    }
}

#[test]
fn tables_match_oracle_on_connected_simple_graphs() {
    for g in common::connected_simple_graphs(5) {
        check_all_tables(&g);
    }
}

#[test]
fn tables_match_oracle_on_random_multigraphs() {
    for g in common::random_multigraphs(60, 7, 0xd9) {
        check_all_tables(&g);
    }
}

#[test]
fn tables_match_oracle_on_structured_families() {
    use cfvs_core::gen::{cycle_graph, disjoint_cycles, grid, path_graph};
    let families = vec![
        path_graph(6),
        cycle_graph(7),
        grid(2, 3),
        disjoint_cycles(2, 3),
        Graph::new(4, vec![(0, 0), (0, 1), (1, 2), (1, 2), (2, 3)]).expect("valid edges"),
    ];
    for g in families {
        check_all_tables(&g);
    }
}
