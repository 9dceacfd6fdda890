//! Inclusion-exclusion counting and Steiner deciders against explicit
//! enumeration oracles.

mod common;

use cfvs_core::gen::rng_from_seed;
use cfvs_core::set::VertexSet;
use cfvs_core::stats::SolveStats;
use cfvs_core::steiner::{
    covering_walk_counts_exact, dsot_decide, dsot_extract_tree, gst_decide, gst_extract_tree,
    random_prime_62, CountMode, DsotInstance, GstInstance,
};
use num_bigint::BigInt;
use rand::Rng;

/// Random pairwise-disjoint nonempty groups over 0..n.
fn random_disjoint_groups(
    rng: &mut rand_chacha::ChaCha8Rng,
    n: usize,
    max_groups: usize,
) -> Vec<VertexSet> {
    let mut unused: Vec<usize> = (0..n).collect();
    let l = rng.gen_range(0..=max_groups);
    let mut groups = Vec::new();
    for _ in 0..l {
        if unused.is_empty() {
            break;
        }
        let size = rng.gen_range(1..=2.min(unused.len()));
        let mut g = VertexSet::empty(n);
        for _ in 0..size {
            g.insert(unused.swap_remove(rng.gen_range(0..unused.len())));
        }
        groups.push(g);
    }
    groups
}

#[test]
fn signed_sums_equal_walk_enumeration() {
    let mut rng = rng_from_seed(0x1e_c0de);
    for _ in 0..200 {
        let d = common::random_digraph(&mut rng, 6);
        let terminals = common::random_subset(&mut rng, d.n(), 3);
        let counts = covering_walk_counts_exact(&d, &terminals, 5);
        for (root, row) in counts.iter().enumerate() {
            for (j, got) in row.iter().enumerate() {
                let expected = common::covering_walk_count_oracle(&d, root, &terminals, j);
                assert_eq!(
                    *got,
                    BigInt::from(expected),
                    "root {} length {} arcs {:?} terminals {:?}",
                    root,
                    j,
                    d.arcs(),
                    terminals.to_vec()
                );
            }
        }
    }
}

#[test]
fn dsot_matches_brute_force() {
    let mut rng = rng_from_seed(0xd_507);
    for _ in 0..150 {
        let d = common::random_digraph(&mut rng, 6);
        let root = rng.gen_range(0..d.n());
        let terminals = common::random_subset(&mut rng, d.n(), 3);
        for p in 1..=d.n() {
            let inst = DsotInstance::new(d.clone(), root, terminals.clone(), p);
            let mut stats = SolveStats::default();
            let got = dsot_decide(&inst, CountMode::Exact, &mut stats);
            let want = common::brute_dsot(&d, root, &terminals, p);
            assert_eq!(got, want, "root {} p {} arcs {:?}", root, p, d.arcs());
            if got {
                let tree = dsot_extract_tree(&inst, CountMode::Exact, &mut stats)
                    .expect("yes-instances yield a witness");
                assert!(tree.len() <= p);
                assert!(tree.contains(root));
                assert!(terminals.is_subset_of(&tree));
                assert_eq!(common::reachable_within(&d, root, &tree), tree);
            }
        }
    }
}

#[test]
fn gst_matches_brute_force() {
    let mut rng = rng_from_seed(0x6_57);
    for _ in 0..150 {
        let g = common::random_multigraphs(1, 7, rng.gen())
            .pop()
            .expect("one graph requested");
        let groups = random_disjoint_groups(&mut rng, g.n(), 3);
        for p in 0..=g.n() + 1 {
            let inst = GstInstance::new(g.clone(), groups.clone(), p).expect("groups disjoint");
            let mut stats = SolveStats::default();
            let got = gst_decide(&inst, CountMode::Exact, &mut stats);
            let want = common::brute_gst(&g, &groups, p);
            assert_eq!(
                got,
                want,
                "p {} edges {:?} groups {:?}",
                p,
                g.edges(),
                groups.iter().map(|s| s.to_vec()).collect::<Vec<_>>()
            );
            if got {
                let tree = gst_extract_tree(&inst, CountMode::Exact, &mut stats)
                    .expect("yes-instances yield a witness");
                assert!(tree.len() <= p && !tree.is_empty());
                assert!(g.is_connected_subset(&tree));
                assert!(groups.iter().all(|grp| !grp.is_disjoint(&tree)));
            }
        }
    }
}

/// Modular counting has one-sided error: a nonzero residue certifies a
/// nonzero count, so modular-yes must imply exact-yes. The reverse direction
/// (no false negatives) holds up to a < 1e-13 per-query prime-collision
/// probability, negligible across this corpus.
#[test]
fn modular_counting_agrees_with_exact() {
    let mut rng = rng_from_seed(0x30d);
    let prime = random_prime_62(&mut rng);
    for _ in 0..120 {
        let g = common::random_multigraphs(1, 6, rng.gen())
            .pop()
            .expect("one graph requested");
        let groups = random_disjoint_groups(&mut rng, g.n(), 3);
        for p in 0..=g.n() {
            let inst = GstInstance::new(g.clone(), groups.clone(), p).expect("groups disjoint");
            let mut stats = SolveStats::default();
            let exact = gst_decide(&inst, CountMode::Exact, &mut stats);
            let modular = gst_decide(&inst, CountMode::Modular { prime }, &mut stats);
            if modular {
                assert!(exact, "modular yes must certify an exact yes");
            }
            assert_eq!(exact, modular, "false negative beyond tolerated probability");
        }
    }
}
