//! Scaling measurements for the two solver routes.

use crate::dp;
use crate::gen;
use crate::set::VertexSet;
use crate::stats::SolveStats;
use crate::steiner::{gst_decide, CountMode, GstInstance};
use crate::td::{greedy_td, nicify};
use std::time::Instant;

#[derive(Debug, Clone)]
pub struct ScalingPoint {
    /// Parameter that was scaled (number of groups, or decomposition width).
    pub param: usize,
    pub median_seconds: f64,
    pub answer: bool,
    pub dp_rows: u64,
}

/// Group Steiner scaling on a fixed 40-cycle: `l` singleton groups spread
/// around the cycle, budget 20 (always a no-instance: covering l spread-out
/// terminals needs a path through more than 20 vertices once l >= 4).
pub fn gst_scaling_series(ls: impl Iterator<Item = usize>, repeats: usize) -> Vec<ScalingPoint> {
    let n = 40;
    let g = gen::cycle_graph(n);
    let mut out = Vec::new();
    for l in ls {
        let groups: Vec<VertexSet> =
            (0..l).map(|i| VertexSet::singleton(n, n * i / l)).collect();
        let inst = GstInstance::new(g.clone(), groups, 20).expect("groups are valid");
        let mut times = Vec::with_capacity(repeats);
        let mut answer = true;
        for _ in 0..repeats.max(1) {
            let mut stats = SolveStats::default();
            let t = Instant::now();
            answer = gst_decide(&inst, CountMode::Exact, &mut stats);
            times.push(t.elapsed().as_secs_f64());
        }
        out.push(ScalingPoint { param: l, median_seconds: median(times), answer, dp_rows: 0 });
    }
    out
}

/// Treewidth DP scaling on full k-trees (greedy decomposition finds width
/// exactly k there), measuring an optimization run per width.
pub fn dp_scaling_series(
    widths: impl Iterator<Item = usize>,
    n: usize,
    repeats: usize,
) -> Vec<ScalingPoint> {
    let mut out = Vec::new();
    for w in widths {
        let g = gen::random_partial_ktree(n, w, 1.0, 1000 + w as u64);
        let td = greedy_td(&g);
        assert_eq!(td.width(), w);
        let ntd = nicify(&td);
        let mut times = Vec::with_capacity(repeats);
        let mut rows = 0;
        let mut answer = false;
        for _ in 0..repeats.max(1) {
            let mut stats = SolveStats::default();
            let t = Instant::now();
            answer = dp::dp_optimum(&g, &ntd, &mut stats).is_some();
            times.push(t.elapsed().as_secs_f64());
            rows = stats.dp_rows;
        }
        out.push(ScalingPoint { param: w, median_seconds: median(times), answer, dp_rows: rows });
    }
    out
}

pub fn median(mut xs: Vec<f64>) -> f64 {
    assert!(!xs.is_empty());
    xs.sort_by(|a, b| a.partial_cmp(b).expect("times are finite"));
    let mid = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[mid]
    } else {
        (xs[mid - 1] + xs[mid]) / 2.0
    }
}

/// Ratio of each measurement to its predecessor (first entry has none).
pub fn consecutive_ratios(points: &[ScalingPoint]) -> Vec<Option<f64>> {
    let mut out = vec![None];
    for w in points.windows(2) {
        out.push(Some(w[1].median_seconds / w[0].median_seconds.max(1e-12)));
    }
    out
}

/// Least-squares slope of y against x.
pub fn least_squares_slope(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let num: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    num / den
}
