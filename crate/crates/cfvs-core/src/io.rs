//! Text formats: PACE-style `.gr` graphs, DIMACS `edge` graphs, bare edge
//! lists, PACE `.td` tree decompositions, `.dgr` digraphs, and group files.
//! All formats are 1-indexed on disk; vertices are 0-indexed in memory.

use crate::graph::{Graph, GraphError};
use crate::set::VertexSet;
use crate::steiner::Digraph;
use crate::td::TreeDecomposition;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {0}: {1}")]
    Syntax(usize, String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    /// `c` comments, `p tw <n> <m>` header, then `u v` lines.
    PaceGr,
    /// `c` comments, `p edge <n> <m>` header, then `e u v` lines.
    DimacsEdge,
    /// No header: `u v` lines; n is the largest endpoint mentioned.
    EdgeList,
}

fn syntax(line_no: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax(line_no, msg.into())
}

fn is_comment(line: &str) -> bool {
    let t = line.trim_start();
    t.is_empty() || t.starts_with('c') || t.starts_with('#')
}

/// Numbered, non-comment lines (1-based numbering of the original text).
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        if is_comment(l) {
            None
        } else {
            Some((i + 1, l.trim()))
        }
    })
}

fn parse_usize(tok: &str, line_no: usize) -> Result<usize, ParseError> {
    tok.parse().map_err(|_| syntax(line_no, format!("expected a number, got {:?}", tok)))
}

/// 1-indexed endpoint into 0-indexed vertex, range-checked when n is known.
fn vertex(tok: &str, n: Option<usize>, line_no: usize) -> Result<usize, ParseError> {
    let v = parse_usize(tok, line_no)?;
    if v == 0 {
        return Err(syntax(line_no, "vertices are 1-indexed"));
    }
    if let Some(n) = n {
        if v > n {
            return Err(syntax(line_no, format!("vertex {} exceeds n = {}", v, n)));
        }
    }
    Ok(v - 1)
}

/// Detects a format from the first non-comment line.
pub fn detect_format(text: &str) -> GraphFormat {
    match content_lines(text).next() {
        Some((_, l)) if l.starts_with("p tw") => GraphFormat::PaceGr,
        Some((_, l)) if l.starts_with("p edge") => GraphFormat::DimacsEdge,
        _ => GraphFormat::EdgeList,
    }
}

/// Parses a (multi)graph, auto-detecting the format when none is given.
pub fn parse_graph(text: &str, format: Option<GraphFormat>) -> Result<Graph, ParseError> {
    let format = format.unwrap_or_else(|| detect_format(text));
    let mut lines = content_lines(text);
    match format {
        GraphFormat::PaceGr | GraphFormat::DimacsEdge => {
            let (hdr_no, hdr) = lines
                .next()
                .ok_or_else(|| syntax(0, "missing header line"))?;
            let toks: Vec<&str> = hdr.split_whitespace().collect();
            let tag = if format == GraphFormat::PaceGr { "tw" } else { "edge" };
            if toks.len() != 4 || toks[0] != "p" || toks[1] != tag {
                return Err(syntax(hdr_no, format!("expected header `p {} <n> <m>`", tag)));
            }
            let n = parse_usize(toks[2], hdr_no)?;
            let m = parse_usize(toks[3], hdr_no)?;
            let mut edges = Vec::with_capacity(m);
            for (line_no, l) in lines {
                let toks: Vec<&str> = l.split_whitespace().collect();
                let (u_tok, v_tok) = match format {
                    GraphFormat::DimacsEdge => {
                        if toks.len() != 3 || toks[0] != "e" {
                            return Err(syntax(line_no, "expected `e <u> <v>`"));
                        }
                        (toks[1], toks[2])
                    }
                    _ => {
                        if toks.len() != 2 {
                            return Err(syntax(line_no, "expected `<u> <v>`"));
                        }
                        (toks[0], toks[1])
                    }
                };
                let u = vertex(u_tok, Some(n), line_no)?;
                let v = vertex(v_tok, Some(n), line_no)?;
                edges.push((u, v));
            }
            if edges.len() != m {
                return Err(syntax(0, format!("header announces {} edges, found {}", m, edges.len())));
            }
            Ok(Graph::new(n, edges)?)
        }
        GraphFormat::EdgeList => {
            let mut edges = Vec::new();
            let mut n = 0;
            for (line_no, l) in lines {
                let toks: Vec<&str> = l.split_whitespace().collect();
                if toks.len() != 2 {
                    return Err(syntax(line_no, "expected `<u> <v>`"));
                }
                let u = vertex(toks[0], None, line_no)?;
                let v = vertex(toks[1], None, line_no)?;
                n = n.max(u + 1).max(v + 1);
                edges.push((u, v));
            }
            Ok(Graph::new(n, edges)?)
        }
    }
}

pub fn serialize_gr(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p tw {} {}", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

/// PACE `.td`: `s td <#bags> <width+1> <n>`, `b <id> <vertices...>` lines,
/// then tree edges between 1-indexed bag ids.
pub fn parse_td(text: &str, n: usize) -> Result<TreeDecomposition, ParseError> {
    let mut lines = content_lines(text);
    let (hdr_no, hdr) = lines.next().ok_or_else(|| syntax(0, "missing `s td` header"))?;
    let toks: Vec<&str> = hdr.split_whitespace().collect();
    if toks.len() != 5 || toks[0] != "s" || toks[1] != "td" {
        return Err(syntax(hdr_no, "expected header `s td <#bags> <width+1> <n>`"));
    }
    let num_bags = parse_usize(toks[2], hdr_no)?;
    let stated_n = parse_usize(toks[4], hdr_no)?;
    if stated_n != n {
        return Err(syntax(hdr_no, format!("decomposition is for n = {}, graph has n = {}", stated_n, n)));
    }
    let mut bags: Vec<Option<VertexSet>> = vec![None; num_bags];
    let mut edges = Vec::new();
    for (line_no, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.first() == Some(&"b") {
            if toks.len() < 2 {
                return Err(syntax(line_no, "expected `b <id> <vertices...>`"));
            }
            let id = parse_usize(toks[1], line_no)?;
            if id == 0 || id > num_bags {
                return Err(syntax(line_no, format!("bag id {} out of range", id)));
            }
            let mut bag = VertexSet::empty(n);
            for tok in &toks[2..] {
                bag.insert(vertex(tok, Some(n), line_no)?);
            }
            if bags[id - 1].replace(bag).is_some() {
                return Err(syntax(line_no, format!("bag {} defined twice", id)));
            }
        } else {
            if toks.len() != 2 {
                return Err(syntax(line_no, "expected `<bag> <bag>` tree edge"));
            }
            let a = parse_usize(toks[0], line_no)?;
            let b = parse_usize(toks[1], line_no)?;
            if a == 0 || a > num_bags || b == 0 || b > num_bags {
                return Err(syntax(line_no, "tree edge endpoint out of range"));
            }
            edges.push((a - 1, b - 1));
        }
    }
    let bags: Vec<VertexSet> = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| syntax(0, format!("bag {} never defined", i + 1))))
        .collect::<Result<_, _>>()?;
    Ok(TreeDecomposition { bags, edges })
}

pub fn serialize_td(td: &TreeDecomposition, n: usize) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "s td {} {} {}", td.bags.len(), td.width() + 1, n);
    for (i, bag) in td.bags.iter().enumerate() {
        let _ = write!(out, "b {}", i + 1);
        for v in bag.iter() {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    for &(a, b) in &td.edges {
        let _ = writeln!(out, "{} {}", a + 1, b + 1);
    }
    out
}

/// `.dgr` digraphs: `c` comments, `p dg <n> <m>` header, then `u v` lines
/// meaning an arc u -> v.
pub fn parse_digraph(text: &str) -> Result<Digraph, ParseError> {
    let mut lines = content_lines(text);
    let (hdr_no, hdr) = lines.next().ok_or_else(|| syntax(0, "missing `p dg` header"))?;
    let toks: Vec<&str> = hdr.split_whitespace().collect();
    if toks.len() != 4 || toks[0] != "p" || toks[1] != "dg" {
        return Err(syntax(hdr_no, "expected header `p dg <n> <m>`"));
    }
    let n = parse_usize(toks[2], hdr_no)?;
    let m = parse_usize(toks[3], hdr_no)?;
    let mut arcs = Vec::with_capacity(m);
    for (line_no, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(syntax(line_no, "expected `<u> <v>`"));
        }
        arcs.push((vertex(toks[0], Some(n), line_no)?, vertex(toks[1], Some(n), line_no)?));
    }
    if arcs.len() != m {
        return Err(syntax(0, format!("header announces {} arcs, found {}", m, arcs.len())));
    }
    Ok(Digraph::new(n, arcs)?)
}

pub fn serialize_dgr(d: &Digraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p dg {} {}", d.n(), d.arcs().len());
    for &(u, v) in d.arcs() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

/// Group files: one group per line, vertices separated by whitespace.
pub fn parse_groups(text: &str, n: usize) -> Result<Vec<VertexSet>, ParseError> {
    let mut groups = Vec::new();
    for (line_no, l) in content_lines(text) {
        let mut group = VertexSet::empty(n);
        for tok in l.split_whitespace() {
            group.insert(vertex(tok, Some(n), line_no)?);
        }
        if group.is_empty() {
            return Err(syntax(line_no, "empty group"));
        }
        groups.push(group);
    }
    Ok(groups)
}
