//! Deterministic instance generators (seeded ChaCha8).

use crate::cfvs::cvc_to_cfvs;
use crate::graph::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn path_graph(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i)).collect()).expect("path edges are in range")
}

pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 1);
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).expect("cycle edges are in range")
}

/// `count` vertex-disjoint cycles of length `len` (len 1 is a loop, len 2 a
/// parallel pair).
pub fn disjoint_cycles(count: usize, len: usize) -> Graph {
    assert!(len >= 1);
    let mut edges = Vec::new();
    for c in 0..count {
        let base = c * len;
        if len == 1 {
            edges.push((base, base));
        } else {
            for i in 0..len {
                edges.push((base + i, base + (i + 1) % len));
            }
        }
    }
    Graph::new(count * len, edges).expect("cycle edges are in range")
}

/// rows x cols grid graph.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let idx = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((idx(r, c), idx(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((idx(r, c), idx(r + 1, c)));
            }
        }
    }
    Graph::new(rows * cols, edges).expect("grid edges are in range")
}

/// Uniform simple graph with exactly m edges.
pub fn gnm_random_simple(n: usize, m: usize, seed: u64) -> Graph {
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    assert!(m <= pairs.len(), "too many edges for a simple graph on {} vertices", n);
    let mut rng = rng_from_seed(seed);
    let edges: Vec<(usize, usize)> = pairs.choose_multiple(&mut rng, m).copied().collect();
    Graph::new(n, edges).expect("sampled edges are in range")
}

/// m edges drawn with replacement from all pairs including loops —
/// multigraph territory.
pub fn gnm_random_multigraph(n: usize, m: usize, seed: u64) -> Graph {
    assert!(n >= 1 || m == 0);
    let mut rng = rng_from_seed(seed);
    let edges: Vec<(usize, usize)> =
        (0..m).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
    Graph::new(n, edges).expect("sampled edges are in range")
}

/// Connected simple graph: a random recursive tree plus random extra edges.
pub fn random_connected_simple(n: usize, m: usize, seed: u64) -> Graph {
    assert!(n >= 1);
    assert!(m + 1 >= n, "a connected graph needs at least n - 1 edges");
    assert!(m <= n * (n - 1) / 2, "too many edges for a simple graph");
    let mut rng = rng_from_seed(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut edges = Vec::with_capacity(m);
    for i in 1..n {
        let j = rng.gen_range(0..i);
        edges.push((order[i].min(order[j]), order[i].max(order[j])));
    }
    let tree: std::collections::BTreeSet<(usize, usize)> = edges.iter().copied().collect();
    let mut rest: Vec<(usize, usize)> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.contains(&(u, v)) {
                rest.push((u, v));
            }
        }
    }
    let extra = m - edges.len();
    edges.extend(rest.choose_multiple(&mut rng, extra).copied());
    Graph::new(n, edges).expect("edges are in range")
}

/// Triangle gadget applied to a random connected simple graph.
pub fn cvc_gadget_random(n: usize, m: usize, seed: u64) -> Graph {
    cvc_to_cfvs(&random_connected_simple(n, m, seed)).expect("generated graph is simple")
}

/// A k-tree on n vertices with each edge kept with probability `keep`
/// (keep = 1.0 gives the full k-tree, treewidth exactly k for n > k).
pub fn random_partial_ktree(n: usize, k: usize, keep: f64, seed: u64) -> Graph {
    assert!(k >= 1 && n > k);
    let mut rng = rng_from_seed(seed);
    let mut edges = Vec::new();
    for u in 0..=k {
        for v in u + 1..=k {
            edges.push((u, v));
        }
    }
    // Maintain the k-cliques a new vertex may attach to.
    let mut cliques: Vec<Vec<usize>> = (0..=k)
        .map(|skip| (0..=k).filter(|&v| v != skip).collect())
        .collect();
    for v in k + 1..n {
        let pick = rng.gen_range(0..cliques.len());
        let clique = cliques[pick].clone();
        for &u in &clique {
            edges.push((u.min(v), u.max(v)));
        }
        for &skip in &clique {
            let mut fresh: Vec<usize> =
                clique.iter().copied().filter(|&u| u != skip).collect();
            fresh.push(v);
            fresh.sort_unstable();
            cliques.push(fresh);
        }
    }
    if keep < 1.0 {
        edges.retain(|_| rng.gen_bool(keep));
    }
    Graph::new(n, edges).expect("edges are in range")
}
