//! Equivalence relations on edge sets and the generating relations
//! `tau`, `delta0` and `delta1`.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{contract, Result};
use crate::graph::{enumerate_squares, spanned_squares, square_in_k23, EdgeId, Graph};

/// Union-find over `0..n` with path halving and union by size.
#[derive(Debug, Clone)]
pub struct DisjointSet {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSet {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true if the two sets were distinct.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    /// Root labels for every element.
    pub fn labels(&mut self) -> Vec<usize> {
        (0..self.parent.len()).map(|x| self.find(x)).collect()
    }
}

/// An equivalence relation on the edge ids `0..len`, stored as a class id
/// per edge.
///
/// Class ids are canonical: class `k` is the `k`-th class in order of its
/// smallest edge id. Equality of relations is therefore array equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct EdgeRelation {
    class_of: Vec<usize>,
    #[serde(skip)]
    classes: Vec<Vec<EdgeId>>,
}

impl EdgeRelation {
    /// Canonicalizes arbitrary per-edge labels.
    pub fn from_labels<L: Copy + Eq + std::hash::Hash>(labels: &[L]) -> Self {
        let mut seen = HashMap::new();
        let mut class_of = Vec::with_capacity(labels.len());
        let mut classes: Vec<Vec<EdgeId>> = Vec::new();
        for (e, &l) in labels.iter().enumerate() {
            let id = *seen.entry(l).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[id].push(e);
            class_of.push(id);
        }
        Self { class_of, classes }
    }

    /// Builds a relation from explicit classes; every edge in `0..edge_count`
    /// must appear in exactly one class.
    pub fn from_classes(edge_count: usize, classes: &[Vec<EdgeId>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; edge_count];
        for (c, class) in classes.iter().enumerate() {
            for &e in class {
                if e >= edge_count {
                    return contract(format!("edge id {e} out of range"));
                }
                if labels[e] != usize::MAX {
                    return contract(format!("edge id {e} appears in two classes"));
                }
                labels[e] = c;
            }
        }
        if let Some(e) = labels.iter().position(|&l| l == usize::MAX) {
            return contract(format!("edge id {e} is not assigned to a class"));
        }
        Ok(Self::from_labels(&labels))
    }

    /// The one-class relation.
    pub fn trivial(edge_count: usize) -> Self {
        Self::from_labels(&vec![0u8; edge_count])
    }

    /// The identity relation (every edge its own class).
    pub fn singletons(edge_count: usize) -> Self {
        Self::from_labels(&(0..edge_count).collect::<Vec<_>>())
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, e: EdgeId) -> usize {
        self.class_of[e]
    }

    pub fn labels(&self) -> &[usize] {
        &self.class_of
    }

    pub fn classes(&self) -> &[Vec<EdgeId>] {
        &self.classes
    }

    pub fn class(&self, c: usize) -> &[EdgeId] {
        &self.classes[c]
    }

    pub fn same_class(&self, e: EdgeId, f: EdgeId) -> bool {
        self.class_of[e] == self.class_of[f]
    }

    /// Sorted class sizes, used as a cheap isomorphism invariant.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.classes.iter().map(Vec::len).collect();
        s.sort_unstable();
        s
    }

    /// The coarsening obtained by uniting classes `a` and `b`.
    pub fn merge_classes(&self, a: usize, b: usize) -> Self {
        let labels: Vec<usize> = self
            .class_of
            .iter()
            .map(|&c| if c == b { a } else { c })
            .collect();
        Self::from_labels(&labels)
    }

    /// The relation induced on a subset of edges, where `edge_map[new] = old`.
    pub fn restrict(&self, edge_map: &[EdgeId]) -> Self {
        let labels: Vec<usize> = edge_map.iter().map(|&e| self.class_of[e]).collect();
        Self::from_labels(&labels)
    }

    /// All pairs `(e, f)`, `e < f`, in the same class. Quadratic; meant for
    /// small relations and tests.
    pub fn pairs(&self) -> PairSet {
        let mut p = PairSet::new(self.len());
        for class in &self.classes {
            for (i, &e) in class.iter().enumerate() {
                for &f in &class[i + 1..] {
                    p.insert(e, f);
                }
            }
        }
        p
    }
}

/// A symmetric set of unordered edge pairs, stored as `(min, max)`.
/// Reflexive pairs are implicit and never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct PairSet {
    edge_count: usize,
    pairs: BTreeSet<(EdgeId, EdgeId)>,
}

impl PairSet {
    pub fn new(edge_count: usize) -> Self {
        Self {
            edge_count,
            pairs: BTreeSet::new(),
        }
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Inserts `{e, f}`; reflexive pairs are ignored.
    ///
    /// # Panics
    /// If either id is out of range.
    pub fn insert(&mut self, e: EdgeId, f: EdgeId) {
        assert!(e < self.edge_count && f < self.edge_count, "edge id out of range");
        if e != f {
            self.pairs.insert((e.min(f), e.max(f)));
        }
    }

    pub fn contains(&self, e: EdgeId, f: EdgeId) -> bool {
        e == f || self.pairs.contains(&(e.min(f), e.max(f)))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (EdgeId, EdgeId)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn union(&self, other: &PairSet) -> PairSet {
        let mut out = self.clone();
        out.edge_count = out.edge_count.max(other.edge_count);
        out.pairs.extend(other.pairs.iter().copied());
        out
    }

    pub fn is_subset(&self, other: &PairSet) -> bool {
        self.pairs.is_subset(&other.pairs)
    }
}

/// Adjacent edge pairs `[x,z],[z,y]` whose shared vertex `z` is the only
/// common neighbor of `x` and `y`, i.e. pairs on no common square.
pub fn compute_tau(g: &Graph) -> PairSet {
    let mut p = PairSet::new(g.edge_count());
    for z in 0..g.vertex_count() {
        let inc = g.incident_edges(z);
        for (i, &e) in inc.iter().enumerate() {
            for &f in &inc[i + 1..] {
                if spanned_squares(g, e, f).is_empty() {
                    p.insert(e, f);
                }
            }
        }
    }
    p
}

/// Opposite edges of every square, together with `tau`.
pub fn compute_delta0(g: &Graph) -> PairSet {
    let mut p = compute_tau(g);
    for sq in enumerate_squares(g) {
        for (e, f) in sq.opposite_pairs() {
            p.insert(e, f);
        }
    }
    p
}

/// Opposite edges of squares that lie in no `K_{2,3}` subgraph.
pub fn compute_delta1(g: &Graph) -> PairSet {
    let mut p = PairSet::new(g.edge_count());
    for sq in enumerate_squares(g) {
        if !square_in_k23(g, &sq).expect("enumerated square") {
            for (e, f) in sq.opposite_pairs() {
                p.insert(e, f);
            }
        }
    }
    p
}

/// The finest equivalence relation on `0..edge_count` containing `pairs`.
pub fn transitive_closure(pairs: &PairSet, edge_count: usize) -> EdgeRelation {
    let mut ds = DisjointSet::new(edge_count);
    for (e, f) in pairs.iter() {
        ds.union(e, f);
    }
    EdgeRelation::from_labels(&ds.labels())
}

/// `(tau ∪ delta1)*`, the lower bound shared by every finest RSP-relation.
pub fn lower_bound(g: &Graph) -> EdgeRelation {
    transitive_closure(&compute_tau(g).union(&compute_delta1(g)), g.edge_count())
}

/// `delta0*`, the upper bound of every finest RSP-relation.
pub fn upper_bound(g: &Graph) -> EdgeRelation {
    transitive_closure(&compute_delta0(g), g.edge_count())
}

/// Whether every class of `q` lies inside a class of `r`.
pub fn is_refinement(q: &EdgeRelation, r: &EdgeRelation) -> Result<bool> {
    if q.len() != r.len() {
        return contract(format!(
            "relations over {} and {} edges are not comparable",
            q.len(),
            r.len()
        ));
    }
    Ok(q.classes()
        .iter()
        .all(|class| class.iter().all(|&e| r.class_of(e) == r.class_of(class[0]))))
}

/// The spanning subgraph without class `class_id`, the relation retaining
/// all remaining classes, and the map from new edge ids to old edge ids.
pub fn remove_class(
    g: &Graph,
    r: &EdgeRelation,
    class_id: usize,
) -> Result<(Graph, EdgeRelation, Vec<EdgeId>)> {
    if r.len() != g.edge_count() {
        return contract("relation does not cover the edge set");
    }
    if class_id >= r.class_count() {
        return contract(format!("class {class_id} does not exist"));
    }
    if r.class_count() < 2 {
        return contract("cannot remove the only class of a relation");
    }
    let (h, map) = g.spanning_subgraph(|e| r.class_of(e) != class_id);
    let s = r.restrict(&map);
    Ok((h, s, map))
}
