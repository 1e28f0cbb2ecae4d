//! The relaxed square property, well-behavedness and finest-ness checks.

use serde::Serialize;

use crate::error::{contract, input, resource, Result};
use crate::graph::{enumerate_squares, spanned_squares, EdgeId, Graph};
use crate::relations::EdgeRelation;

/// Outcome of [`check_rsp`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RspReport {
    pub holds: bool,
    /// Lexicographically smallest adjacent pair `(e, f)`, `e < f`, in distinct
    /// classes that spans no square with same-class opposite edges.
    pub witness: Option<(EdgeId, EdgeId)>,
}

/// Precomputed adjacent-pair table for repeated RSP checks on one graph.
///
/// An adjacent pair `(e, f)` and the opposite-edge pairs of its squares.
pub type SpannedPair = (EdgeId, EdgeId, Vec<(EdgeId, EdgeId)>);

/// Each entry is an adjacent pair `(e, f)` with `e < f` and the list of
/// `(opposite of e, opposite of f)` over all squares the pair spans.
#[derive(Debug, Clone)]
pub struct RspChecker {
    edge_count: usize,
    pairs: Vec<SpannedPair>,
}

impl RspChecker {
    pub fn new(g: &Graph) -> Self {
        let mut pairs = Vec::new();
        for x in 0..g.vertex_count() {
            let inc = g.incident_edges(x);
            for (i, &e) in inc.iter().enumerate() {
                for &f in &inc[i + 1..] {
                    let (e, f) = (e.min(f), e.max(f));
                    let opts = spanned_squares(g, e, f)
                        .into_iter()
                        .map(|(_, oe, of)| (oe, of))
                        .collect();
                    pairs.push((e, f, opts));
                }
            }
        }
        pairs.sort_unstable_by_key(|p| (p.0, p.1));
        Self {
            edge_count: g.edge_count(),
            pairs,
        }
    }

    /// Adjacent pairs in increasing order, with their spanned squares.
    pub fn adjacent_pairs(&self) -> &[SpannedPair] {
        &self.pairs
    }

    /// First failing pair under the class labels, or `None` if RSP holds.
    pub fn first_violation(&self, class_of: &[usize]) -> Option<(EdgeId, EdgeId)> {
        debug_assert_eq!(class_of.len(), self.edge_count);
        self.pairs.iter().find_map(|(e, f, opts)| {
            let (ce, cf) = (class_of[*e], class_of[*f]);
            if ce == cf || opts.iter().any(|&(oe, of)| class_of[oe] == ce && class_of[of] == cf) {
                None
            } else {
                Some((*e, *f))
            }
        })
    }

    pub fn holds(&self, class_of: &[usize]) -> bool {
        self.first_violation(class_of).is_none()
    }
}

fn require_total(g: &Graph, r: &EdgeRelation) -> Result<()> {
    if r.len() != g.edge_count() {
        return contract(format!(
            "relation covers {} edges but the graph has {}",
            r.len(),
            g.edge_count()
        ));
    }
    Ok(())
}

fn require_connected(g: &Graph) -> Result<()> {
    if !g.is_connected() {
        return input("graph is not connected");
    }
    Ok(())
}

/// Checks that any two adjacent edges in distinct classes span a square
/// whose opposite edges are in the same classes.
pub fn check_rsp(g: &Graph, r: &EdgeRelation) -> Result<RspReport> {
    require_connected(g)?;
    require_total(g, r)?;
    let witness = RspChecker::new(g).first_violation(r.labels());
    Ok(RspReport {
        holds: witness.is_none(),
        witness,
    })
}

/// A `K_{2,3}` with parts `{x, y}` and `{a, b, c}` whose edges
/// `[a,x]`, `[x,c]`, `[y,b]` form one class and whose remaining three edges
/// lie outside it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForbiddenColoringWitness {
    pub x: usize,
    pub y: usize,
    pub a: usize,
    pub b: usize,
    pub c: usize,
    /// `([u,v], class)` for `[a,x] [x,c] [y,b] [a,y] [c,y] [x,b]`.
    pub edge_classes: [((usize, usize), usize); 6],
}

fn witness(
    g: &Graph,
    r: &EdgeRelation,
    [x, y, a, b, c]: [usize; 5],
) -> ForbiddenColoringWitness {
    let cls = |u: usize, v: usize| {
        let e = g.edge_id(u, v).expect("witness edge");
        (g.edge(e), r.class_of(e))
    };
    ForbiddenColoringWitness {
        x,
        y,
        a,
        b,
        c,
        edge_classes: [
            cls(a, x),
            cls(x, c),
            cls(y, b),
            cls(a, y),
            cls(c, y),
            cls(x, b),
        ],
    }
}

fn is_forbidden(g: &Graph, r: &EdgeRelation, [x, y, a, b, c]: [usize; 5]) -> bool {
    let class = |u: usize, v: usize| g.edge_id(u, v).map(|e| r.class_of(e));
    let (Some(ax), Some(xc), Some(yb), Some(ay), Some(cy), Some(xb)) = (
        class(a, x),
        class(x, c),
        class(y, b),
        class(a, y),
        class(c, y),
        class(x, b),
    ) else {
        return false;
    };
    ax == xc && xc == yb && ay != ax && cy != ax && xb != ax
}

/// Searches for a forbidden-colored `K_{2,3}`; `None` means well-behaved.
///
/// Every forbidden coloring contains a square `a-x-c-y` with `[a,x]`,
/// `[x,c]` in one class `φ` and `[c,y]`, `[a,y]` outside it, so the search
/// scans squares for that pattern and then looks for the completing vertex
/// `b`.
pub fn check_well_behaved(g: &Graph, r: &EdgeRelation) -> Result<Option<ForbiddenColoringWitness>> {
    require_total(g, r)?;
    let found = well_behaved_by_squares(g, r);
    debug_assert_eq!(found.is_some(), forbidden_coloring_brute(g, r).is_some());
    Ok(found)
}

fn well_behaved_by_squares(g: &Graph, r: &EdgeRelation) -> Option<ForbiddenColoringWitness> {
    for sq in enumerate_squares(g) {
        let v = sq.vertices;
        for i in 0..4 {
            let (x, c, y, a) = (v[i], v[(i + 1) % 4], v[(i + 2) % 4], v[(i + 3) % 4]);
            let phi = r.class_of(sq.edges[(i + 3) % 4]);
            if r.class_of(sq.edges[i]) != phi
                || r.class_of(sq.edges[(i + 1) % 4]) == phi
                || r.class_of(sq.edges[(i + 2) % 4]) == phi
            {
                continue;
            }
            for b in g.common_neighbors(x, y) {
                if b != a && b != c && is_forbidden(g, r, [x, y, a, b, c]) {
                    return Some(witness(g, r, [x, y, a, b, c]));
                }
            }
        }
    }
    None
}

/// Direct scan over all `K_{2,3}` subgraphs and all labelings of their
/// parts. Independent of the square-based search; used as a cross-check.
pub fn forbidden_coloring_brute(g: &Graph, r: &EdgeRelation) -> Option<ForbiddenColoringWitness> {
    let n = g.vertex_count();
    for p in 0..n {
        for q in p + 1..n {
            let common = g.common_neighbors(p, q);
            if common.len() < 3 {
                continue;
            }
            for (x, y) in [(p, q), (q, p)] {
                for &b in &common {
                    for (i, &a) in common.iter().enumerate() {
                        for &c in &common[i + 1..] {
                            if a != b && c != b && is_forbidden(g, r, [x, y, a, b, c]) {
                                return Some(witness(g, r, [x, y, a, b, c]));
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

/// Whether every vertex meets every class. Necessary for RSP on connected
/// graphs, and it bounds the class count by the minimum degree.
pub fn check_class_cover(g: &Graph, r: &EdgeRelation) -> Result<bool> {
    require_total(g, r)?;
    if g.edge_count() == 0 {
        return Ok(true);
    }
    let k = r.class_count();
    let mut seen = vec![usize::MAX; k];
    for v in 0..g.vertex_count() {
        let mut count = 0;
        for &e in g.incident_edges(v) {
            let c = r.class_of(e);
            if seen[c] != v {
                seen[c] = v;
                count += 1;
            }
        }
        if count != k {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Default cap on the number of candidate splits examined by
/// [`finest_counterexample`].
pub const DEFAULT_SPLIT_BUDGET: u64 = 1 << 22;

/// Looks for a proper refinement of the RSP-relation `r` that is itself RSP.
///
/// Any RSP proper refinement can be coarsened (classes of an RSP-relation
/// may always be merged) until exactly one class of `r` is split in two, so
/// it suffices to try every two-block split of every class. The number of
/// splits, `Σ 2^(|φ|-1) - 1`, must stay within `budget`.
pub fn finest_counterexample(
    g: &Graph,
    r: &EdgeRelation,
    budget: u64,
) -> Result<Option<EdgeRelation>> {
    if !check_rsp(g, r)?.holds {
        return contract("relation does not have the relaxed square property");
    }
    let mut total: u64 = 0;
    for class in r.classes() {
        if class.len() > 63 {
            return resource(format!("class of {} edges is too large to split", class.len()));
        }
        total = total.saturating_add((1u64 << (class.len() - 1)) - 1);
    }
    if total > budget {
        return resource(format!("{total} candidate splits exceed the budget of {budget}"));
    }
    let checker = RspChecker::new(g);
    let fresh = r.class_count();
    let mut labels = r.labels().to_vec();
    for class in r.classes() {
        let k = class.len();
        if k < 2 {
            continue;
        }
        // per-vertex mask of incident class members
        let mut masks: Vec<u64> = vec![0; g.vertex_count()];
        for (bit, &e) in class.iter().enumerate() {
            let (u, v) = g.edge(e);
            masks[u] |= 1 << bit;
            masks[v] |= 1 << bit;
        }
        let touched: Vec<u64> = masks.into_iter().filter(|&m| m != 0).collect();
        let all = (1u64 << k) - 1;
        for half in 1..(1u64 << (k - 1)) {
            let b = half << 1;
            if touched.iter().any(|&m| m & b == 0 || m & (all ^ b) == 0) {
                continue;
            }
            for (bit, &e) in class.iter().enumerate() {
                if b >> bit & 1 == 1 {
                    labels[e] = fresh;
                }
            }
            if checker.holds(&labels) {
                return Ok(Some(EdgeRelation::from_labels(&labels)));
            }
            for &e in class {
                labels[e] = r.class_of(e);
            }
        }
    }
    Ok(None)
}

/// Whether the RSP-relation `r` has no proper RSP refinement.
pub fn verify_finest(g: &Graph, r: &EdgeRelation) -> Result<bool> {
    Ok(finest_counterexample(g, r, DEFAULT_SPLIT_BUDGET)?.is_none())
}
