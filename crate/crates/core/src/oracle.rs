//! Exhaustive search for all finest RSP-relations of a small graph.

use crate::error::{input, resource, Result};
use crate::graph::Graph;
use crate::relations::EdgeRelation;
use crate::rsp::RspChecker;

pub const DEFAULT_ORACLE_LIMIT: usize = 12;

/// Every minimal RSP-relation on `E(g)`, sorted by label vector.
///
/// Enumerates all set partitions of the edge set as restricted growth
/// strings with at most `min_degree` blocks (more blocks cannot cover every
/// vertex), keeps the RSP ones, and returns those with no proper RSP
/// refinement among them.
pub fn oracle_finest(g: &Graph, limit: usize) -> Result<Vec<EdgeRelation>> {
    if !g.is_connected() {
        return input("graph is not connected");
    }
    let m = g.edge_count();
    if m > limit {
        return resource(format!("{m} edges exceed the oracle limit of {limit}"));
    }
    if m == 0 {
        return Ok(vec![EdgeRelation::from_labels::<usize>(&[])]);
    }
    let max_blocks = g.min_degree()?.max(1);
    let checker = RspChecker::new(g);
    let mut found: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut labels = vec![0usize; m];
    enumerate(g, &checker, &mut labels, 1, 1, max_blocks, &mut found);

    let minimal: Vec<&Vec<usize>> = found
        .iter()
        .filter(|(k, f)| {
            !found
                .iter()
                .any(|(kg, h)| kg > k && refines(h, f, *kg))
        })
        .map(|(_, f)| f)
        .collect();
    let mut out: Vec<EdgeRelation> = minimal.into_iter().map(|l| EdgeRelation::from_labels(l)).collect();
    out.sort_by(|a, b| a.labels().cmp(b.labels()));
    Ok(out)
}

fn enumerate(
    g: &Graph,
    checker: &RspChecker,
    labels: &mut [usize],
    pos: usize,
    used: usize,
    max_blocks: usize,
    found: &mut Vec<(usize, Vec<usize>)>,
) {
    if pos == labels.len() {
        if covers_all(g, labels, used) && checker.holds(labels) {
            found.push((used, labels.to_vec()));
        }
        return;
    }
    for c in 0..(used + 1).min(max_blocks) {
        let new_used = used.max(c + 1);
        labels[pos] = c;
        enumerate(g, checker, labels, pos + 1, new_used, max_blocks, found);
    }
}

fn covers_all(g: &Graph, labels: &[usize], blocks: usize) -> bool {
    let mut seen = vec![usize::MAX; blocks];
    (0..g.vertex_count()).all(|v| {
        let mut count = 0;
        for &e in g.incident_edges(v) {
            if seen[labels[e]] != v {
                seen[labels[e]] = v;
                count += 1;
            }
        }
        count == blocks
    })
}

/// Whether the partition `fine` (with `fine_blocks` blocks) refines `coarse`.
fn refines(fine: &[usize], coarse: &[usize], fine_blocks: usize) -> bool {
    let mut image = vec![usize::MAX; fine_blocks];
    fine.iter().zip(coarse).all(|(&a, &b)| {
        if image[a] == usize::MAX {
            image[a] = b;
        }
        image[a] == b
    })
}
