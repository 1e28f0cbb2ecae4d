//! The queue-based construction of an RSP-relation starting from
//! `(delta1 ∪ tau)*`, with an optional script fixing the processing order.

use std::collections::{BTreeSet, VecDeque};
use std::str::FromStr;

use serde::Serialize;

use crate::error::{input, Error, Result};
use crate::graph::{spanned_squares, EdgeId, Graph, Square};
use crate::relations::{compute_delta1, compute_tau, DisjointSet, EdgeRelation};

/// One forced choice: process the adjacent pair `pair` next and, if it needs
/// repair, use the square through `square` (given in cyclic order).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScriptStep {
    pub pair: ((usize, usize), (usize, usize)),
    pub square: [usize; 4],
}

/// An ordered list of [`ScriptStep`]s. After the script runs out the
/// remaining queue is processed in the default order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ChoiceScript {
    pub steps: Vec<ScriptStep>,
}

impl ChoiceScript {
    pub fn new(steps: Vec<ScriptStep>) -> Self {
        Self { steps }
    }
}

impl FromStr for ChoiceScript {
    type Err = Error;

    /// One step per line: `u1 v1 u2 v2 a b c d`. Blank lines and lines
    /// starting with `#` are skipped.
    fn from_str(text: &str) -> Result<Self> {
        let mut steps = Vec::new();
        for (no, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Input(format!("script line {}: bad integer", no + 1)))?;
            if nums.len() != 8 {
                return input(format!("script line {}: expected 8 integers", no + 1));
            }
            steps.push(ScriptStep {
                pair: ((nums[0], nums[1]), (nums[2], nums[3])),
                square: [nums[4], nums[5], nums[6], nums[7]],
            });
        }
        Ok(Self { steps })
    }
}

fn resolve_step(g: &Graph, step: &ScriptStep) -> Result<(EdgeId, EdgeId, EdgeId, EdgeId)> {
    let ((a, b), (c, d)) = step.pair;
    let (Some(e), Some(f)) = (g.edge_id(a, b), g.edge_id(c, d)) else {
        return input(format!("script pair ([{a},{b}],[{c},{d}]) names a missing edge"));
    };
    if e == f || g.shared_vertex(e, f).is_none() {
        return input(format!("script pair ([{a},{b}],[{c},{d}]) is not adjacent"));
    }
    let sq = Square::from_cycle(g, step.square)
        .map_err(|_| Error::Input(format!("script square {:?} is not a square", step.square)))?;
    match (sq.opposite(e), sq.opposite(f)) {
        (Some(oe), Some(of)) => {
            let (e, f, oe, of) = if e < f { (e, f, oe, of) } else { (f, e, of, oe) };
            Ok((e, f, oe, of))
        }
        _ => input(format!(
            "script square {:?} does not contain both edges of its pair",
            step.square
        )),
    }
}

/// Computes an RSP-relation on the connected graph `g`.
///
/// Starts from `(delta1 ∪ tau)*` and queues every adjacent pair in distinct
/// classes. A pair that already spans a square with same-class opposite
/// edges is dropped; otherwise both edges are merged with their opposites
/// in one spanned square and every queued pair whose edges now share a
/// class is dropped. By default pairs and squares are taken in
/// lexicographic order; `script` overrides the first choices.
pub fn algorithm1(g: &Graph, script: Option<&ChoiceScript>) -> Result<EdgeRelation> {
    if !g.is_connected() {
        return input("graph is not connected");
    }
    let m = g.edge_count();
    let mut ds = DisjointSet::new(m);
    for (e, f) in compute_tau(g).union(&compute_delta1(g)).iter() {
        ds.union(e, f);
    }
    let mut queue = BTreeSet::new();
    for x in 0..g.vertex_count() {
        let inc = g.incident_edges(x);
        for (i, &e) in inc.iter().enumerate() {
            for &f in &inc[i + 1..] {
                if !ds.same(e, f) {
                    queue.insert((e.min(f), e.max(f)));
                }
            }
        }
    }
    let mut steps: VecDeque<(EdgeId, EdgeId, EdgeId, EdgeId)> = match script {
        Some(s) => s.steps.iter().map(|st| resolve_step(g, st)).collect::<Result<_>>()?,
        None => VecDeque::new(),
    };

    while !queue.is_empty() {
        let (e, f, choice) = match steps.pop_front() {
            Some((e, f, oe, of)) => {
                if !queue.contains(&(e, f)) {
                    continue;
                }
                (e, f, Some((oe, of)))
            }
            None => {
                let &(e, f) = queue.iter().next().expect("queue is non-empty");
                (e, f, None)
            }
        };
        let spanned = spanned_squares(g, e, f);
        let satisfied = spanned
            .iter()
            .any(|&(_, oe, of)| ds.same(e, oe) && ds.same(f, of));
        if satisfied {
            queue.remove(&(e, f));
            continue;
        }
        let (oe, of) = match choice {
            Some(c) => c,
            // an adjacent pair with no square is in tau, hence never queued
            None => spanned.first().map(|&(_, oe, of)| (oe, of)).expect("queued pair spans a square"),
        };
        ds.union(e, oe);
        ds.union(f, of);
        queue.retain(|&(a, b)| !ds.same(a, b));
    }
    Ok(EdgeRelation::from_labels(&ds.labels()))
}
