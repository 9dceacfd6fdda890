//! cfvs: connected feedback vertex set toolkit on the command line.
//!
//! Decision subcommands exit 0 on yes, 1 on no, 2 on any error; results go
//! to stdout, diagnostics and counters to stderr.

use anyhow::{anyhow, bail, Context, Result};
use cfvs_core::bench::{consecutive_ratios, dp_scaling_series, gst_scaling_series, ScalingPoint};
use cfvs_core::cfvs::{cfvs_bruteforce, cfvs_decide, cfvs_decide_dp, CfvsInstance, SolveMethod};
use cfvs_core::enumerate::{enumerate_compact_representations, verify_compact_rep};
use cfvs_core::gen;
use cfvs_core::io::{
    detect_format, parse_digraph, parse_graph, parse_groups, parse_td, serialize_gr, serialize_td,
    GraphFormat,
};
use cfvs_core::set::VertexSet;
use cfvs_core::stats::SolveStats;
use cfvs_core::steiner::{
    dsot_decide, dsot_extract_tree, gst_decide, gst_extract_tree, random_prime_62, CountMode,
    DsotInstance, GstInstance,
};
use cfvs_core::td::{greedy_td, nicify, NodeKind, TreeDecomposition};
use cfvs_core::Graph;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::fmt::Write as _;
use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "cfvs", version, about = "Connected feedback vertex set toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide / optimize connected feedback vertex set on a graph.
    Solve(SolveArgs),
    /// Group Steiner tree: a tree on <= budget vertices meeting every group.
    Gst(GstArgs),
    /// Directed Steiner out-tree: an out-tree on <= budget vertices covering
    /// all terminals.
    Dsot(DsotArgs),
    /// Enumerate compact representations of the minimal feedback vertex sets
    /// of size <= k.
    Enum(EnumArgs),
    /// Generate instance families as .gr files.
    Gen(GenArgs),
    /// Check a tree decomposition against a graph.
    TdValidate(TdValidateArgs),
    /// Turn a decomposition (given or greedy) into a nice one.
    TdNicify(TdNicifyArgs),
    /// Benchmark a corpus directory and/or the built-in scaling series (CSV
    /// on stdout, readable table on stderr).
    Bench(BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    /// treewidth-dp when the greedy decomposition is narrow, else compact-gst.
    Auto,
    #[value(alias = "gst")]
    CompactGst,
    #[value(alias = "treewidth")]
    TreewidthDp,
    #[value(alias = "brute")]
    BruteForce,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Gr,
    Dimacs,
    EdgeList,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> GraphFormat {
        match f {
            FormatArg::Gr => GraphFormat::PaceGr,
            FormatArg::Dimacs => GraphFormat::DimacsEdge,
            FormatArg::EdgeList => GraphFormat::EdgeList,
        }
    }
}

#[derive(Args)]
struct CountingArgs {
    /// Count branching walks modulo a random 62-bit prime instead of exactly
    /// (faster, one-sided error: a yes answer is always right).
    #[arg(long)]
    modular: bool,
    /// Seed for the modular prime (and nothing else).
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl CountingArgs {
    fn mode(&self) -> CountMode {
        if self.modular {
            CountMode::Modular { prime: random_prime_62(&mut gen::rng_from_seed(self.seed)) }
        } else {
            CountMode::Exact
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    /// Input graph (.gr / DIMACS / edge list), or - for stdin.
    graph: PathBuf,
    /// Budget (required unless --optimize).
    #[arg(short, long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
    /// Tree decomposition file for the DP route (.td); implies treewidth-dp
    /// under --method auto.
    #[arg(long)]
    td: Option<PathBuf>,
    /// Abort (exit 2) if the decomposition width exceeds this.
    #[arg(long)]
    max_width: Option<usize>,
    /// Find the minimum size instead of deciding at --k.
    #[arg(long)]
    optimize: bool,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    #[command(flatten)]
    counting: CountingArgs,
    #[arg(long)]
    json: bool,
    /// Worker threads (1 reproduces single-threaded output exactly).
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct GstArgs {
    /// Input graph, or - for stdin.
    graph: PathBuf,
    /// Groups file: one group per line, space-separated 1-indexed vertices.
    #[arg(long)]
    groups: PathBuf,
    /// Maximum number of tree vertices.
    #[arg(short = 'p', long)]
    budget: usize,
    /// Also extract a witness tree (slower: repeated self-reduction).
    #[arg(long)]
    witness: bool,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    #[command(flatten)]
    counting: CountingArgs,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct DsotArgs {
    /// Input digraph (.dgr), or - for stdin.
    digraph: PathBuf,
    /// Root vertex, 1-indexed.
    #[arg(long)]
    root: usize,
    /// Terminal vertices, 1-indexed, comma-separated.
    #[arg(long, value_delimiter = ',', required = true)]
    terminals: Vec<usize>,
    /// Maximum number of out-tree vertices.
    #[arg(short = 'p', long)]
    budget: usize,
    /// Also extract a witness vertex set.
    #[arg(long)]
    witness: bool,
    #[command(flatten)]
    counting: CountingArgs,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct EnumArgs {
    /// Input graph, or - for stdin.
    graph: PathBuf,
    #[arg(short, long)]
    k: usize,
    /// Re-check every emitted representation against its definition
    /// (disjoint sets, every choice a minimal feedback vertex set).
    #[arg(long)]
    verify: bool,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

#[derive(Args)]
struct GenArgs {
    #[command(subcommand)]
    family: GenFamily,
    /// Output file (default stdout).
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum GenFamily {
    /// count vertex-disjoint cycles of the given length.
    DisjointCycles { count: usize, len: usize },
    /// rows x cols grid.
    Grid { rows: usize, cols: usize },
    /// Uniform random graph with n vertices and m edges.
    RandomGnm {
        n: usize,
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Sample edges with replacement (loops and parallels allowed).
        #[arg(long)]
        multigraph: bool,
    },
    /// Triangle gadget applied to a random connected simple graph; its
    /// minimum connected FVS equals that graph's minimum connected vertex
    /// cover.
    CvcGadget {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct TdValidateArgs {
    /// Input graph, or - for stdin.
    graph: PathBuf,
    #[arg(long)]
    td: PathBuf,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

#[derive(Args)]
struct TdNicifyArgs {
    /// Input graph, or - for stdin.
    graph: PathBuf,
    /// Decomposition to nicify (default: greedy min-fill).
    #[arg(long)]
    td: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

#[derive(Args)]
struct BenchArgs {
    /// Directory of .gr instances to solve (each at its optimum).
    corpus: Option<PathBuf>,
    /// Run the group Steiner scaling series (groups 4..=9 on a 40-cycle).
    #[arg(long)]
    gst_scaling: bool,
    /// Run the treewidth DP scaling series (widths 1..=4 on 60-vertex
    /// k-trees).
    #[arg(long)]
    dp_scaling: bool,
    #[arg(long, default_value_t = 3)]
    repeats: usize,
    #[arg(long)]
    threads: Option<usize>,
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<u8> {
    match Cli::parse().cmd {
        Cmd::Solve(a) => cmd_solve(a),
        Cmd::Gst(a) => cmd_gst(a),
        Cmd::Dsot(a) => cmd_dsot(a),
        Cmd::Enum(a) => cmd_enum(a),
        Cmd::Gen(a) => cmd_gen(a),
        Cmd::TdValidate(a) => cmd_td_validate(a),
        Cmd::TdNicify(a) => cmd_td_nicify(a),
        Cmd::Bench(a) => cmd_bench(a),
    }
}

// ---------------------------------------------------------------------------
// Shared plumbing.

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).context("reading stdin")?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn load_graph(path: &Path, format: Option<FormatArg>) -> Result<Graph> {
    let text = read_input(path)?;
    parse_graph(&text, format.map(Into::into))
        .with_context(|| format!("parsing {}", path.display()))
}

fn setup_threads(n: Option<usize>) {
    if let Some(n) = n {
        // Ignore "already initialized" (tests may share a process).
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

/// 0-indexed internal set -> sorted 1-indexed user-facing list.
fn one_indexed(vs: &VertexSet) -> Vec<usize> {
    vs.iter().map(|v| v + 1).collect()
}

struct ResultDoc {
    yes: bool,
    size: Option<usize>,
    vertices: Option<Vec<usize>>,
    method: String,
    counting: &'static str,
    stats: SolveStats,
    elapsed_ms: u64,
}

impl ResultDoc {
    fn emit(&self, as_json: bool) -> u8 {
        if as_json {
            let doc = json!({
                "status": if self.yes { "yes" } else { "no" },
                "size": self.size,
                "vertices": self.vertices,
                "method": self.method,
                "counting": self.counting,
                "stats": {
                    "reps_tried": self.stats.reps_tried,
                    "subsets_evaluated": self.stats.subsets_evaluated,
                    "dp_rows": self.stats.dp_rows,
                    "elapsed_ms": self.elapsed_ms,
                },
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        } else {
            println!("status: {}", if self.yes { "yes" } else { "no" });
            if let Some(s) = self.size {
                println!("size: {}", s);
            }
            if let Some(vs) = &self.vertices {
                if vs.is_empty() {
                    println!("vertices:");
                } else {
                    let joined: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
                    println!("vertices: {}", joined.join(" "));
                }
            }
            println!("method: {}", self.method);
            eprintln!(
                "stats: reps_tried={} subsets_evaluated={} dp_rows={} elapsed_ms={}",
                self.stats.reps_tried,
                self.stats.subsets_evaluated,
                self.stats.dp_rows,
                self.elapsed_ms
            );
        }
        if self.yes {
            0
        } else {
            1
        }
    }
}

fn counting_label(mode: CountMode) -> &'static str {
    match mode {
        CountMode::Exact => "exact",
        CountMode::Modular { .. } => "modular",
    }
}

// ---------------------------------------------------------------------------
// solve

fn cmd_solve(a: SolveArgs) -> Result<u8> {
    setup_threads(a.threads);
    let g = load_graph(&a.graph, a.format)?;
    let td = match &a.td {
        Some(p) => {
            let text = read_input(p)?;
            let td = parse_td(&text, g.n()).with_context(|| format!("parsing {}", p.display()))?;
            td.validate(&g).map_err(|e| anyhow!("invalid tree decomposition: {}", e))?;
            Some(td)
        }
        None => None,
    };
    let greedy_width = || greedy_td(&g).width();
    let width_in_use = match &td {
        Some(td) => td.width(),
        None => greedy_width(),
    };
    if let Some(mw) = a.max_width {
        if width_in_use > mw {
            bail!("decomposition width {} exceeds --max-width {}", width_in_use, mw);
        }
    }
    let method = match a.method {
        MethodArg::CompactGst => SolveMethod::CompactGst,
        MethodArg::TreewidthDp => SolveMethod::TreewidthDp,
        MethodArg::BruteForce => SolveMethod::BruteForce,
        MethodArg::Auto => {
            if a.td.is_some() || width_in_use <= 4 {
                SolveMethod::TreewidthDp
            } else {
                SolveMethod::CompactGst
            }
        }
    };
    let mode = a.counting.mode();
    let k = match (a.optimize, a.k) {
        (false, None) => bail!("--k is required unless --optimize is given"),
        (false, Some(k)) => k,
        (true, _) => g.n(),
    };
    let start = Instant::now();
    let sol = match method {
        SolveMethod::BruteForce => cfvs_bruteforce(&CfvsInstance { graph: g.clone(), k }),
        SolveMethod::TreewidthDp => cfvs_decide_dp(&CfvsInstance { graph: g.clone(), k }, td.as_ref())
            .map_err(|e| anyhow!("invalid tree decomposition: {}", e))?,
        SolveMethod::CompactGst => {
            if a.optimize {
                // The compact route decides at a fixed budget; step it up.
                let mut found = None;
                for k in 0..=g.n() {
                    if let Some(s) = cfvs_decide(&CfvsInstance { graph: g.clone(), k }, mode) {
                        found = Some(s);
                        break;
                    }
                }
                found
            } else {
                cfvs_decide(&CfvsInstance { graph: g.clone(), k }, mode)
            }
        }
    };
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let doc = match sol {
        Some(sol) => ResultDoc {
            yes: true,
            size: Some(sol.vertices.len()),
            vertices: Some(one_indexed(&sol.vertices)),
            method: sol.method.to_string(),
            counting: counting_label(mode),
            stats: sol.stats.clone(),
            elapsed_ms,
        },
        None => ResultDoc {
            yes: false,
            size: None,
            vertices: None,
            method: method.to_string(),
            counting: counting_label(mode),
            stats: SolveStats::default(),
            elapsed_ms,
        },
    };
    Ok(doc.emit(a.json))
}

// ---------------------------------------------------------------------------
// gst / dsot

fn cmd_gst(a: GstArgs) -> Result<u8> {
    setup_threads(a.threads);
    let g = load_graph(&a.graph, a.format)?;
    let text = read_input(&a.groups)?;
    let groups =
        parse_groups(&text, g.n()).with_context(|| format!("parsing {}", a.groups.display()))?;
    let inst = GstInstance::new(g, groups, a.budget).map_err(|e| anyhow!("{}", e))?;
    let mode = a.counting.mode();
    let mut stats = SolveStats::default();
    let start = Instant::now();
    let (yes, tree) = if a.witness {
        let tree = gst_extract_tree(&inst, mode, &mut stats);
        (tree.is_some(), tree)
    } else {
        (gst_decide(&inst, mode, &mut stats), None)
    };
    let doc = ResultDoc {
        yes,
        size: tree.as_ref().map(|t| t.len()),
        vertices: tree.as_ref().map(one_indexed),
        method: "gst-ie".into(),
        counting: counting_label(mode),
        stats,
        elapsed_ms: start.elapsed().as_millis() as u64,
    };
    Ok(doc.emit(a.json))
}

fn cmd_dsot(a: DsotArgs) -> Result<u8> {
    setup_threads(a.threads);
    let text = read_input(&a.digraph)?;
    let d = parse_digraph(&text).with_context(|| format!("parsing {}", a.digraph.display()))?;
    let n = d.n();
    let to_zero = |v: usize, what: &str| -> Result<usize> {
        if v == 0 || v > n {
            bail!("{} {} out of range 1..={}", what, v, n);
        }
        Ok(v - 1)
    };
    let root = to_zero(a.root, "root")?;
    let mut terminals = VertexSet::empty(n);
    for &t in &a.terminals {
        terminals.insert(to_zero(t, "terminal")?);
    }
    if a.budget == 0 {
        bail!("budget must be at least 1 (an out-tree has a root)");
    }
    let inst = DsotInstance::new(d, root, terminals, a.budget);
    let mode = a.counting.mode();
    let mut stats = SolveStats::default();
    let start = Instant::now();
    let (yes, tree) = if a.witness {
        let tree = dsot_extract_tree(&inst, mode, &mut stats);
        (tree.is_some(), tree)
    } else {
        (dsot_decide(&inst, mode, &mut stats), None)
    };
    let doc = ResultDoc {
        yes,
        size: tree.as_ref().map(|t| t.len()),
        vertices: tree.as_ref().map(one_indexed),
        method: "dsot-ie".into(),
        counting: counting_label(mode),
        stats,
        elapsed_ms: start.elapsed().as_millis() as u64,
    };
    Ok(doc.emit(a.json))
}

// ---------------------------------------------------------------------------
// enum

fn cmd_enum(a: EnumArgs) -> Result<u8> {
    let g = load_graph(&a.graph, a.format)?;
    let reps = enumerate_compact_representations(&g, a.k);
    if a.verify {
        for rep in &reps {
            if !verify_compact_rep(&g, rep, a.k, true) {
                bail!("emitted representation failed verification: {:?}", rep);
            }
        }
        eprintln!("verified {} representations", reps.len());
    }
    let mut out = String::new();
    for (i, rep) in reps.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        if rep.is_empty() {
            // An empty family: its single choice is the empty set.
            out.push_str("c empty\n");
        } else {
            for class in rep.classes() {
                let line: Vec<String> = class.iter().map(|v| (v + 1).to_string()).collect();
                let _ = writeln!(out, "{}", line.join(" "));
            }
        }
    }
    print!("{}", out);
    eprintln!("{} representations", reps.len());
    Ok(0)
}

// ---------------------------------------------------------------------------
// gen

fn cmd_gen(a: GenArgs) -> Result<u8> {
    let g = match a.family {
        GenFamily::DisjointCycles { count, len } => {
            if len == 0 {
                bail!("cycle length must be at least 1");
            }
            gen::disjoint_cycles(count, len)
        }
        GenFamily::Grid { rows, cols } => gen::grid(rows, cols),
        GenFamily::RandomGnm { n, m, seed, multigraph } => {
            if multigraph {
                gen::gnm_random_multigraph(n, m, seed)
            } else {
                if m > n.saturating_sub(1) * n / 2 {
                    bail!("{} edges do not fit in a simple graph on {} vertices", m, n);
                }
                gen::gnm_random_simple(n, m, seed)
            }
        }
        GenFamily::CvcGadget { n, m, seed } => {
            if n == 0 || m + 1 < n || m > n * (n - 1) / 2 {
                bail!("need a connected simple graph: 1 <= n, n-1 <= m <= n(n-1)/2");
            }
            gen::cvc_gadget_random(n, m, seed)
        }
    };
    let text = serialize_gr(&g);
    match &a.output {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{}", text),
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// td utilities

fn cmd_td_validate(a: TdValidateArgs) -> Result<u8> {
    let g = load_graph(&a.graph, a.format)?;
    let text = read_input(&a.td)?;
    let td = parse_td(&text, g.n()).with_context(|| format!("parsing {}", a.td.display()))?;
    match td.validate(&g) {
        Ok(()) => {
            println!("valid: {} bags, width {}", td.bags.len(), td.width());
            Ok(0)
        }
        Err(e) => {
            println!("invalid: {}", e);
            Ok(1)
        }
    }
}

fn cmd_td_nicify(a: TdNicifyArgs) -> Result<u8> {
    let g = load_graph(&a.graph, a.format)?;
    let td = match &a.td {
        Some(p) => {
            let text = read_input(p)?;
            let td = parse_td(&text, g.n()).with_context(|| format!("parsing {}", p.display()))?;
            td.validate(&g).map_err(|e| anyhow!("invalid tree decomposition: {}", e))?;
            td
        }
        None => greedy_td(&g),
    };
    let nice = nicify(&td);
    nice.validate(&g).map_err(|e| anyhow!("nicification produced an invalid result: {}", e))?;
    let plain = TreeDecomposition {
        bags: nice.nodes.iter().map(|nd| nd.bag.clone()).collect(),
        edges: nice
            .nodes
            .iter()
            .enumerate()
            .flat_map(|(i, nd)| nd.children.iter().map(move |&c| (i, c)))
            .collect(),
    };
    print!("{}", serialize_td(&plain, g.n()));
    let mut counts = [0usize; 4];
    for nd in &nice.nodes {
        counts[match nd.kind {
            NodeKind::Leaf => 0,
            NodeKind::Introduce(_) => 1,
            NodeKind::Forget(_) => 2,
            NodeKind::Join => 3,
        }] += 1;
    }
    eprintln!(
        "{} nodes (leaf {}, introduce {}, forget {}, join {}), width {}",
        nice.nodes.len(),
        counts[0],
        counts[1],
        counts[2],
        counts[3],
        nice.width()
    );
    Ok(0)
}

// ---------------------------------------------------------------------------
// bench

struct BenchRow {
    series: &'static str,
    instance: String,
    method: String,
    param: Option<usize>,
    size: Option<usize>,
    seconds: f64,
    ratio: Option<f64>,
    stats: SolveStats,
}

fn scaling_rows(
    series: &'static str,
    instance: &str,
    method: &str,
    points: &[ScalingPoint],
) -> Vec<BenchRow> {
    let ratios = consecutive_ratios(points);
    points
        .iter()
        .zip(ratios)
        .map(|(p, ratio)| BenchRow {
            series,
            instance: instance.into(),
            method: method.into(),
            param: Some(p.param),
            size: None,
            seconds: p.median_seconds,
            ratio,
            stats: SolveStats { dp_rows: p.dp_rows, ..SolveStats::default() },
        })
        .collect()
}

fn cmd_bench(a: BenchArgs) -> Result<u8> {
    setup_threads(a.threads);
    let mut rows: Vec<BenchRow> = Vec::new();
    if let Some(dir) = &a.corpus {
        let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
            .with_context(|| format!("reading {}", dir.display()))?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| {
                p.is_file()
                    && matches!(
                        p.extension().and_then(|e| e.to_str()),
                        Some("gr") | Some("dimacs") | Some("col") | Some("edges")
                    )
            })
            .collect();
        files.sort();
        for path in files {
            let text = read_input(&path)?;
            let g = parse_graph(&text, Some(detect_format(&text)))
                .with_context(|| format!("parsing {}", path.display()))?;
            let method = if greedy_td(&g).width() <= 4 {
                SolveMethod::TreewidthDp
            } else {
                SolveMethod::CompactGst
            };
            let start = Instant::now();
            let sol = match method {
                SolveMethod::TreewidthDp => {
                    cfvs_decide_dp(&CfvsInstance { graph: g.clone(), k: g.n() }, None)
                        .map_err(|e| anyhow!("invalid tree decomposition: {}", e))?
                }
                _ => (0..=g.n()).find_map(|k| {
                    cfvs_decide(&CfvsInstance { graph: g.clone(), k }, CountMode::Exact)
                }),
            };
            let seconds = start.elapsed().as_secs_f64();
            let name = path.file_name().map(|s| s.to_string_lossy().into_owned());
            rows.push(BenchRow {
                series: "corpus",
                instance: name.unwrap_or_else(|| path.display().to_string()),
                method: method.to_string(),
                param: None,
                size: sol.as_ref().map(|s| s.vertices.len()),
                seconds,
                ratio: None,
                stats: sol.map(|s| s.stats).unwrap_or_default(),
            });
        }
    }
    if a.gst_scaling {
        let pts = gst_scaling_series(4..=9, a.repeats);
        rows.extend(scaling_rows("gst-scaling", "cycle-40", "gst-ie", &pts));
    }
    if a.dp_scaling {
        let pts = dp_scaling_series(1..=4, 60, a.repeats);
        rows.extend(scaling_rows("dp-scaling", "ktree-60", "treewidth-dp", &pts));
    }

    let fmt_opt = |o: Option<usize>| o.map(|v| v.to_string()).unwrap_or_default();
    println!("series,instance,method,param,size,median_seconds,ratio,reps_tried,subsets_evaluated,dp_rows");
    for r in &rows {
        println!(
            "{},{},{},{},{},{:.6},{},{},{},{}",
            r.series,
            r.instance,
            r.method,
            fmt_opt(r.param),
            fmt_opt(r.size),
            r.seconds,
            r.ratio.map(|x| format!("{:.3}", x)).unwrap_or_default(),
            r.stats.reps_tried,
            r.stats.subsets_evaluated,
            r.stats.dp_rows
        );
    }
    if !rows.is_empty() {
        eprintln!(
            "{:<12} {:<14} {:<13} {:>5} {:>5} {:>12} {:>7} {:>9}",
            "series", "instance", "method", "param", "size", "seconds", "ratio", "dp_rows"
        );
        for r in &rows {
            eprintln!(
                "{:<12} {:<14} {:<13} {:>5} {:>5} {:>12.6} {:>7} {:>9}",
                r.series,
                r.instance,
                r.method,
                fmt_opt(r.param),
                fmt_opt(r.size),
                r.seconds,
                r.ratio.map(|x| format!("{:.2}", x)).unwrap_or_default(),
                r.stats.dp_rows
            );
        }
    }
    Ok(0)
}
