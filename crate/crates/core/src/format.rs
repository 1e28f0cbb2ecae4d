//! Line-oriented text formats for graphs, relations, partitions, maps and
//! squares, plus DOT export.

use std::fmt::Write;

use crate::error::{input, Error, Result};
use crate::graph::{Graph, Square};
use crate::partition::VertexPartition;
use crate::relations::EdgeRelation;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn numbers(no: usize, line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::Input(format!("line {no}: '{t}' is not a vertex id")))
        })
        .collect()
}

/// Parses an edge list: one `u v` per line, `#` comments, and an optional
/// `n <count>` line fixing the vertex count.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header = None;
    let mut edges = Vec::new();
    for (no, line) in content_lines(text) {
        if let Some(rest) = line.strip_prefix("n ") {
            if header.is_some() {
                return input(format!("line {no}: repeated vertex count header"));
            }
            let n = numbers(no, rest)?;
            if n.len() != 1 {
                return input(format!("line {no}: expected 'n <count>'"));
            }
            header = Some(n[0]);
            continue;
        }
        let nums = numbers(no, line)?;
        if nums.len() != 2 {
            return input(format!("line {no}: expected two vertex ids"));
        }
        edges.push((nums[0], nums[1]));
    }
    let needed = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = match header {
        Some(n) if n < needed => return input(format!("header declares {n} vertices but id {} occurs", needed - 1)),
        Some(n) => n,
        None => needed,
    };
    Graph::from_edges(n, edges)
}

/// Writes the `n <count>` header followed by the sorted edge list.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses `u v c` lines; every edge of `g` must be assigned exactly once.
pub fn parse_relation(g: &Graph, text: &str) -> Result<EdgeRelation> {
    let mut labels = vec![None; g.edge_count()];
    for (no, line) in content_lines(text) {
        let nums = numbers(no, line)?;
        if nums.len() != 3 {
            return input(format!("line {no}: expected 'u v class'"));
        }
        let Some(e) = g.edge_id(nums[0], nums[1]) else {
            return input(format!("line {no}: [{},{}] is not an edge", nums[0], nums[1]));
        };
        if labels[e].replace(nums[2]).is_some() {
            return input(format!("line {no}: edge [{},{}] assigned twice", nums[0], nums[1]));
        }
    }
    let labels: Vec<usize> = labels
        .into_iter()
        .enumerate()
        .map(|(e, l)| {
            l.ok_or_else(|| {
                let (u, v) = g.edge(e);
                Error::Input(format!("edge [{u},{v}] has no class"))
            })
        })
        .collect::<Result<_>>()?;
    Ok(EdgeRelation::from_labels(&labels))
}

pub fn write_relation(g: &Graph, r: &EdgeRelation) -> String {
    let mut out = String::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let _ = writeln!(out, "{u} {v} {}", r.class_of(e));
    }
    out
}

pub fn write_partition(p: &VertexPartition) -> String {
    let mut out = String::new();
    for (v, b) in p.labels().iter().enumerate() {
        let _ = writeln!(out, "{v} {b}");
    }
    out
}

/// Parses `v block` lines covering `0..n`.
pub fn parse_partition(text: &str, n: usize) -> Result<VertexPartition> {
    let map = parse_map(text, n)?;
    Ok(VertexPartition::from_labels(&map))
}

/// Writes a vertex map as `i j` lines.
pub fn write_map(map: &[usize]) -> String {
    let mut out = String::new();
    for (i, j) in map.iter().enumerate() {
        let _ = writeln!(out, "{i} {j}");
    }
    out
}

/// Parses `i j` lines defining a map on `0..n`.
pub fn parse_map(text: &str, n: usize) -> Result<Vec<usize>> {
    let mut map = vec![None; n];
    for (no, line) in content_lines(text) {
        let nums = numbers(no, line)?;
        if nums.len() != 2 {
            return input(format!("line {no}: expected two integers"));
        }
        if nums[0] >= n {
            return input(format!("line {no}: {} is outside 0..{n}", nums[0]));
        }
        if map[nums[0]].replace(nums[1]).is_some() {
            return input(format!("line {no}: {} mapped twice", nums[0]));
        }
    }
    map.into_iter()
        .enumerate()
        .map(|(i, m)| m.ok_or_else(|| Error::Input(format!("{i} is not mapped"))))
        .collect()
}

pub fn write_coords(coords: &[Vec<usize>]) -> String {
    let mut out = String::new();
    for (v, c) in coords.iter().enumerate() {
        let parts: Vec<String> = c.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{v}: ({})", parts.join(","));
    }
    out
}

pub fn write_squares(squares: &[Square]) -> String {
    let mut out = String::new();
    for sq in squares {
        let [a, b, c, d] = sq.vertices;
        let _ = writeln!(out, "{a} {b} {c} {d}");
    }
    out
}

const PALETTE: &[&str] = &[
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22",
    "#17becf",
];

/// Undirected DOT with edges colored by class id when a relation is given.
pub fn to_dot(g: &Graph, r: Option<&EdgeRelation>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  {v};");
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        match r {
            Some(r) => {
                let c = r.class_of(e);
                let _ = writeln!(
                    out,
                    "  {u} -- {v} [color=\"{}\", label=\"{c}\"];",
                    PALETTE[c % PALETTE.len()]
                );
            }
            None => {
                let _ = writeln!(out, "  {u} -- {v};");
            }
        }
    }
    out.push_str("}\n");
    out
}
