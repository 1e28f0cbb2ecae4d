//! Exact isomorphism tests for small graphs and for edge-colored graphs.

use std::collections::BTreeMap;

use crate::error::{contract, resource, Result};
use crate::graph::Graph;
use crate::relations::EdgeRelation;

pub const ISO_VERTEX_LIMIT: usize = 24;
pub const RELATION_ISO_VERTEX_LIMIT: usize = 10;

/// A vertex bijection `g -> h` preserving edges, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    let n = g.vertex_count().max(h.vertex_count());
    if n > ISO_VERTEX_LIMIT {
        return resource(format!("isomorphism search is limited to {ISO_VERTEX_LIMIT} vertices"));
    }
    let rg = EdgeRelation::trivial(g.edge_count());
    let rh = EdgeRelation::trivial(h.edge_count());
    Ok(search(g, &rg, h, &rh))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(find_isomorphism(g, h)?.is_some())
}

/// A vertex bijection `g -> h` preserving edges that carries the classes of
/// `r` onto the classes of `s` (class ids may be permuted).
pub fn find_relation_isomorphism(
    g: &Graph,
    r: &EdgeRelation,
    h: &Graph,
    s: &EdgeRelation,
) -> Result<Option<Vec<usize>>> {
    if r.len() != g.edge_count() || s.len() != h.edge_count() {
        return contract("relation does not cover the edge set");
    }
    let n = g.vertex_count().max(h.vertex_count());
    if n > RELATION_ISO_VERTEX_LIMIT {
        return resource(format!(
            "relation equivalence search is limited to {RELATION_ISO_VERTEX_LIMIT} vertices"
        ));
    }
    Ok(search(g, r, h, s))
}

/// Whether some automorphism of `g` maps the classes of `r` onto those of `s`.
pub fn relations_equivalent(g: &Graph, r: &EdgeRelation, s: &EdgeRelation) -> Result<bool> {
    Ok(find_relation_isomorphism(g, r, g, s)?.is_some())
}

/// Color refinement run on both graphs with a shared palette, seeded by the
/// degree and the sizes of the classes met at each vertex.
fn refine_colors(g: &Graph, r: &EdgeRelation, h: &Graph, s: &EdgeRelation) -> (Vec<usize>, Vec<usize>) {
    let seed = |gr: &Graph, rel: &EdgeRelation, v: usize| {
        let mut met: Vec<usize> = gr
            .incident_edges(v)
            .iter()
            .map(|&e| rel.class(rel.class_of(e)).len())
            .collect();
        met.sort_unstable();
        met
    };
    let mut palette: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let intern = |key: Vec<usize>, palette: &mut BTreeMap<Vec<usize>, usize>| {
        let next = palette.len();
        *palette.entry(key).or_insert(next)
    };
    let mut cg: Vec<usize> = (0..g.vertex_count()).map(|v| intern(seed(g, r, v), &mut palette)).collect();
    let mut ch: Vec<usize> = (0..h.vertex_count()).map(|v| intern(seed(h, s, v), &mut palette)).collect();
    let mut count = palette.len();
    loop {
        palette.clear();
        let sig = |gr: &Graph, c: &[usize], v: usize| {
            let mut key: Vec<usize> = gr.neighbors(v).iter().map(|&w| c[w]).collect();
            key.sort_unstable();
            key.insert(0, c[v]);
            key
        };
        let ng: Vec<usize> = (0..g.vertex_count()).map(|v| intern(sig(g, &cg, v), &mut palette)).collect();
        let nh: Vec<usize> = (0..h.vertex_count()).map(|v| intern(sig(h, &ch, v), &mut palette)).collect();
        cg = ng;
        ch = nh;
        if palette.len() == count {
            return (cg, ch);
        }
        count = palette.len();
    }
}

struct Search<'a> {
    g: &'a Graph,
    r: &'a EdgeRelation,
    h: &'a Graph,
    s: &'a EdgeRelation,
    cg: Vec<usize>,
    ch: Vec<usize>,
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
    class_fwd: Vec<usize>,
    class_bwd: Vec<usize>,
}

fn search(g: &Graph, r: &EdgeRelation, h: &Graph, s: &EdgeRelation) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n != h.vertex_count()
        || g.edge_count() != h.edge_count()
        || r.class_sizes() != s.class_sizes()
    {
        return None;
    }
    let (cg, ch) = refine_colors(g, r, h, s);
    let mut hist_g = cg.clone();
    let mut hist_h = ch.clone();
    hist_g.sort_unstable();
    hist_h.sort_unstable();
    if hist_g != hist_h {
        return None;
    }
    let mut class_size = BTreeMap::new();
    for &c in &cg {
        *class_size.entry(c).or_insert(0usize) += 1;
    }
    // greedy order: most already-placed neighbors first, then rarest color
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (std::cmp::Reverse(links[v]), class_size[&cg[v]], v))
            .expect("unplaced vertex");
        placed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            links[w] += 1;
        }
    }
    let mut st = Search {
        g,
        r,
        h,
        s,
        cg,
        ch,
        order,
        map: vec![usize::MAX; n],
        used: vec![false; n],
        class_fwd: vec![usize::MAX; r.class_count()],
        class_bwd: vec![usize::MAX; s.class_count()],
    };
    if st.extend(0) {
        Some(st.map)
    } else {
        None
    }
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for w in 0..self.h.vertex_count() {
            if self.used[w] || self.ch[w] != self.cg[v] {
                continue;
            }
            let Some(bound) = self.try_place(v, w, depth) else {
                continue;
            };
            self.map[v] = w;
            self.used[w] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.map[v] = usize::MAX;
            self.used[w] = false;
            for (a, b) in bound {
                self.class_fwd[a] = usize::MAX;
                self.class_bwd[b] = usize::MAX;
            }
        }
        false
    }

    /// Checks adjacency and class consistency of `v -> w` against every
    /// placed vertex; on success returns the class pairs newly bound.
    fn try_place(&mut self, v: usize, w: usize, depth: usize) -> Option<Vec<(usize, usize)>> {
        let mut bound = Vec::new();
        for i in 0..depth {
            let u = self.order[i];
            let x = self.map[u];
            match (self.g.edge_id(u, v), self.h.edge_id(x, w)) {
                (None, None) => {}
                (Some(e), Some(f)) => {
                    let (a, b) = (self.r.class_of(e), self.s.class_of(f));
                    if self.class_fwd[a] == usize::MAX && self.class_bwd[b] == usize::MAX {
                        self.class_fwd[a] = b;
                        self.class_bwd[b] = a;
                        bound.push((a, b));
                    } else if self.class_fwd[a] != b || self.class_bwd[b] != a {
                        for (a, b) in bound {
                            self.class_fwd[a] = usize::MAX;
                            self.class_bwd[b] = usize::MAX;
                        }
                        return None;
                    }
                }
                _ => {
                    for (a, b) in bound {
                        self.class_fwd[a] = usize::MAX;
                        self.class_bwd[b] = usize::MAX;
                    }
                    return None;
                }
            }
        }
        Some(bound)
    }
}
