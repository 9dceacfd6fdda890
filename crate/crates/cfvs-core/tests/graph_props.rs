//! Structural graph predicates against independent checks, and
//! parse/serialize round trips.

mod common;

use cfvs_core::graph::Graph;
use cfvs_core::io::{
    parse_digraph, parse_graph, parse_td, serialize_dgr, serialize_gr, serialize_td, GraphFormat,
};
use cfvs_core::set::VertexSet;
use cfvs_core::steiner::Digraph;
use cfvs_core::td::greedy_td;
use proptest::prelude::*;

/// Arbitrary multigraph: n vertices, up to 24 edges with loops and
/// parallels.
fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=9).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..=24)
            .prop_map(move |edges| Graph::new(n, edges).expect("edges are in range"))
    })
}

fn arb_digraph() -> impl Strategy<Value = Digraph> {
    (1usize..=9).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..=24)
            .prop_map(move |arcs| Digraph::new(n, arcs).expect("arcs are in range"))
    })
}

/// m = n - #components characterizes multigraph forests (loops and parallel
/// edges both break it).
fn forest_by_edge_count(g: &Graph) -> bool {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = g.n();
    for &(u, v) in g.edges() {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent[ru] = rv;
            components -= 1;
        }
    }
    g.m() == g.n() - components
}

proptest! {
    #[test]
    fn is_forest_matches_edge_count_characterization(g in arb_graph()) {
        prop_assert_eq!(g.is_forest(), forest_by_edge_count(&g));
    }

    #[test]
    fn forest_within_matches_deletion(g in arb_graph(), mask in any::<u64>()) {
        let keep = VertexSet::from_iter(g.n(), (0..g.n()).filter(|v| mask >> v & 1 == 1));
        let deleted = g.delete_vertices(&keep.complement()).0;
        prop_assert_eq!(g.is_forest_within(&keep), deleted.is_forest());
    }

    #[test]
    fn gr_roundtrip(g in arb_graph()) {
        let parsed = parse_graph(&serialize_gr(&g), Some(GraphFormat::PaceGr)).expect("serialized form parses");
        prop_assert_eq!(g.n(), parsed.n());
        prop_assert_eq!(g.edges(), parsed.edges());
    }

    #[test]
    fn gr_roundtrip_with_autodetect(g in arb_graph()) {
        let parsed = parse_graph(&serialize_gr(&g), None).expect("serialized form parses");
        prop_assert_eq!(g.edges(), parsed.edges());
    }

    #[test]
    fn dgr_roundtrip(d in arb_digraph()) {
        let parsed = parse_digraph(&serialize_dgr(&d)).expect("serialized form parses");
        prop_assert_eq!(d.n(), parsed.n());
        prop_assert_eq!(d.arcs(), parsed.arcs());
    }

    #[test]
    fn td_roundtrip(g in arb_graph()) {
        let td = greedy_td(&g);
        let parsed = parse_td(&serialize_td(&td, g.n()), g.n()).expect("serialized form parses");
        prop_assert_eq!(td.bags.len(), parsed.bags.len());
        for (a, b) in td.bags.iter().zip(&parsed.bags) {
            prop_assert_eq!(a.to_vec(), b.to_vec());
        }
        prop_assert_eq!(td.edges.len(), parsed.edges.len());
        prop_assert!(parsed.validate(&g).is_ok());
    }

    #[test]
    fn connected_components_partition_the_subset(g in arb_graph(), mask in any::<u64>()) {
        let s = VertexSet::from_iter(g.n(), (0..g.n()).filter(|v| mask >> v & 1 == 1));
        let comps = g.connected_components(&s);
        let mut union = VertexSet::empty(g.n());
        for c in comps.pieces() {
            prop_assert!(!c.is_empty());
            prop_assert!(union.is_disjoint(c));
            union = union.union(c);
        }
        prop_assert_eq!(union, s.clone());
        // Each piece is internally connected and sealed off from the rest.
        for c in comps.pieces() {
            prop_assert!(g.is_connected_subset(c));
            for &(u, v) in g.edges() {
                if s.contains(u) && s.contains(v) && c.contains(u) {
                    prop_assert!(c.contains(v));
                }
            }
        }
    }
}
