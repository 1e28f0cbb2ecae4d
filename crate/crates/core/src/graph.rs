//! Immutable simple undirected graphs with dense edge ids, and 4-cycle listing.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{contract, input, Result};
use crate::partition::VertexPartition;

/// Dense edge identifier in `0..edge_count`.
pub type EdgeId = usize;

/// A finite simple undirected graph.
///
/// Edges are stored as canonical pairs `(u, v)` with `u < v`, sorted
/// lexicographically; the position in that list is the edge id. Adjacency
/// lists are sorted and carry the id of the connecting edge alongside each
/// neighbor, so `edge_id` is a binary search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    #[serde(skip)]
    adjacency: Vec<Vec<usize>>,
    #[serde(skip)]
    incident: Vec<Vec<EdgeId>>,
}

impl Graph {
    /// Builds a graph on `vertex_count` vertices from an edge iterator.
    ///
    /// Pairs may be given in either orientation. Self-loops, duplicates and
    /// out-of-range endpoints are input errors.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return input(format!("self-loop at vertex {u}"));
            }
            if u >= vertex_count || v >= vertex_count {
                return input(format!(
                    "edge [{u},{v}] out of range for {vertex_count} vertices"
                ));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return input(format!("duplicate edge [{},{}]", w[0].0, w[0].1));
        }
        Ok(Self::from_sorted_unchecked(vertex_count, list))
    }

    fn from_sorted_unchecked(vertex_count: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut pairs: Vec<Vec<(usize, EdgeId)>> = vec![Vec::new(); vertex_count];
        for (id, &(u, v)) in edges.iter().enumerate() {
            pairs[u].push((v, id));
            pairs[v].push((u, id));
        }
        let mut adjacency = Vec::with_capacity(vertex_count);
        let mut incident = Vec::with_capacity(vertex_count);
        for mut p in pairs {
            p.sort_unstable();
            adjacency.push(p.iter().map(|&(w, _)| w).collect());
            incident.push(p.iter().map(|&(_, e)| e).collect());
        }
        Self {
            vertex_count,
            edges,
            adjacency,
            incident,
        }
    }

    /// The graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted_unchecked(n, Vec::new())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list, indexed by edge id.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e]
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Edge ids incident to `v`, parallel to [`Graph::neighbors`].
    pub fn incident_edges(&self, v: usize) -> &[EdgeId] {
        &self.incident[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<EdgeId> {
        if u >= self.vertex_count || v >= self.vertex_count {
            return None;
        }
        let nbrs = &self.adjacency[u];
        nbrs.binary_search(&v).ok().map(|i| self.incident[u][i])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// Common neighbors of `u` and `v` (sorted merge of the adjacency lists).
    pub fn common_neighbors(&self, u: usize, v: usize) -> Vec<usize> {
        let (a, b) = (&self.adjacency[u], &self.adjacency[v]);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    /// Returns the vertex shared by two distinct edges, if they are adjacent.
    pub fn shared_vertex(&self, e: EdgeId, f: EdgeId) -> Option<usize> {
        if e == f {
            return None;
        }
        let (a, b) = self.edges[e];
        let (c, d) = self.edges[f];
        if a == c || a == d {
            Some(a)
        } else if b == c || b == d {
            Some(b)
        } else {
            None
        }
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other_end(&self, e: EdgeId, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Spanning subgraph keeping the edges selected by `keep`.
    ///
    /// Returns the subgraph and the map from new edge ids to old edge ids.
    pub fn spanning_subgraph(&self, mut keep: impl FnMut(EdgeId) -> bool) -> (Graph, Vec<EdgeId>) {
        let kept: Vec<EdgeId> = (0..self.edge_count()).filter(|&e| keep(e)).collect();
        let edges = kept.iter().map(|&e| self.edges[e]).collect();
        (Self::from_sorted_unchecked(self.vertex_count, edges), kept)
    }

    /// Subgraph induced on `vertices`, relabeled to `0..vertices.len()` in the
    /// given order. Returns the subgraph and the new-to-old edge id map.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (Graph, Vec<EdgeId>) {
        let mut local = vec![usize::MAX; self.vertex_count];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut pairs: Vec<((usize, usize), EdgeId)> = self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| local[u] != usize::MAX && local[v] != usize::MAX)
            .map(|(e, &(u, v))| {
                let (a, b) = (local[u], local[v]);
                ((a.min(b), a.max(b)), e)
            })
            .collect();
        pairs.sort_unstable();
        let edge_map = pairs.iter().map(|&(_, e)| e).collect();
        let edges = pairs.into_iter().map(|(p, _)| p).collect();
        (Self::from_sorted_unchecked(vertices.len(), edges), edge_map)
    }

    /// Applies a vertex relabeling `perm` (old id -> new id) to produce an
    /// isomorphic copy.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.vertex_count {
            return contract("relabeling must cover every vertex");
        }
        Graph::from_edges(
            self.vertex_count,
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])),
        )
    }

    /// Connected components; blocks are ordered by their smallest vertex.
    pub fn components(&self) -> VertexPartition {
        components_by(self, |_| true)
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count <= 1 || self.components().block_count() == 1
    }

    /// Minimum vertex degree; an input error on the empty graph.
    pub fn min_degree(&self) -> Result<usize> {
        match self.adjacency.iter().map(Vec::len).min() {
            Some(d) => Ok(d),
            None => input("min_degree of a graph without vertices"),
        }
    }
}

/// Components of the spanning subgraph formed by the edges accepted by `keep`.
pub(crate) fn components_by(g: &Graph, keep: impl Fn(EdgeId) -> bool) -> VertexPartition {
    let n = g.vertex_count();
    let mut block_of = vec![usize::MAX; n];
    let mut next = 0;
    let mut queue = VecDeque::new();
    for start in 0..n {
        if block_of[start] != usize::MAX {
            continue;
        }
        block_of[start] = next;
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            for (&w, &e) in g.neighbors(v).iter().zip(g.incident_edges(v)) {
                if block_of[w] == usize::MAX && keep(e) {
                    block_of[w] = next;
                    queue.push_back(w);
                }
            }
        }
        next += 1;
    }
    VertexPartition::from_labels(&block_of)
}

/// A 4-cycle subgraph `a-b-c-d` in canonical form: `a` is the smallest
/// vertex and `b < d`. Chords may be present in the host graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Square {
    pub vertices: [usize; 4],
    /// Ids of `[a,b]`, `[b,c]`, `[c,d]`, `[d,a]`.
    pub edges: [EdgeId; 4],
}

impl Square {
    /// Builds the canonical square through the given cyclic vertex order,
    /// checking that all four cycle edges exist and the vertices are distinct.
    pub fn from_cycle(g: &Graph, cycle: [usize; 4]) -> Result<Square> {
        let mut sorted = cycle;
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return contract(format!("square {cycle:?} repeats a vertex"));
        }
        let start = (0..4).min_by_key(|&i| cycle[i]).unwrap();
        let fwd = [
            cycle[start],
            cycle[(start + 1) % 4],
            cycle[(start + 2) % 4],
            cycle[(start + 3) % 4],
        ];
        let vertices = if fwd[1] < fwd[3] {
            fwd
        } else {
            [fwd[0], fwd[3], fwd[2], fwd[1]]
        };
        let mut edges = [0; 4];
        for i in 0..4 {
            let (u, v) = (vertices[i], vertices[(i + 1) % 4]);
            edges[i] = match g.edge_id(u, v) {
                Some(e) => e,
                None => return contract(format!("[{u},{v}] is not an edge, so {cycle:?} is not a square")),
            };
        }
        Ok(Square { vertices, edges })
    }

    /// The two pairs of opposite edges.
    pub fn opposite_pairs(&self) -> [(EdgeId, EdgeId); 2] {
        [
            (self.edges[0], self.edges[2]),
            (self.edges[1], self.edges[3]),
        ]
    }

    /// The edge of this square opposite to `e`, if `e` is one of its edges.
    pub fn opposite(&self, e: EdgeId) -> Option<EdgeId> {
        self.edges
            .iter()
            .position(|&x| x == e)
            .map(|i| self.edges[(i + 2) % 4])
    }
}

/// Lists every 4-cycle subgraph of `g` exactly once, sorted by vertex tuple.
///
/// For each vertex `a`, every pair of larger neighbors `b < d` is closed by
/// each common neighbor `c > a` of `b` and `d`. Since `a` is forced to be
/// the minimum of the cycle and `b < d`, every 4-cycle has exactly one
/// representative. Work is bounded by `O(|E| * Δ^2)`.
pub fn enumerate_squares(g: &Graph) -> Vec<Square> {
    let mut out = Vec::new();
    for a in 0..g.vertex_count() {
        let nbrs = g.neighbors(a);
        let above: Vec<(usize, EdgeId)> = nbrs
            .iter()
            .zip(g.incident_edges(a))
            .filter(|(&w, _)| w > a)
            .map(|(&w, &e)| (w, e))
            .collect();
        for (i, &(b, ab)) in above.iter().enumerate() {
            for &(d, da) in &above[i + 1..] {
                for c in g.common_neighbors(b, d) {
                    if c <= a {
                        continue;
                    }
                    let bc = g.edge_id(b, c).expect("common neighbor");
                    let cd = g.edge_id(c, d).expect("common neighbor");
                    out.push(Square {
                        vertices: [a, b, c, d],
                        edges: [ab, bc, cd, da],
                    });
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Squares spanned by the adjacent edges `e` and `f`, each reported as the
/// fourth vertex `w` together with the edges opposite to `e` and to `f`.
///
/// With `e = [x,y]` and `f = [x,z]` the squares are `x-y-w-z` for every
/// common neighbor `w != x` of `y` and `z`; the opposite of `e` is `[z,w]`
/// and the opposite of `f` is `[y,w]`.
pub fn spanned_squares(g: &Graph, e: EdgeId, f: EdgeId) -> Vec<(usize, EdgeId, EdgeId)> {
    let Some(x) = g.shared_vertex(e, f) else {
        return Vec::new();
    };
    let y = g.other_end(e, x);
    let z = g.other_end(f, x);
    g.common_neighbors(y, z)
        .into_iter()
        .filter(|&w| w != x)
        .map(|w| {
            let opp_e = g.edge_id(z, w).expect("w adjacent to z");
            let opp_f = g.edge_id(y, w).expect("w adjacent to y");
            (w, opp_e, opp_f)
        })
        .collect()
}

/// Whether the square lies in some `K_{2,3}` subgraph: `a,c` share a
/// neighbor outside `{b,d}` or `b,d` share a neighbor outside `{a,c}`.
pub fn square_in_k23(g: &Graph, sq: &Square) -> Result<bool> {
    let [a, b, c, d] = sq.vertices;
    let valid = sq
        .vertices
        .iter()
        .all(|&v| v < g.vertex_count())
        && (0..4).all(|i| g.edge_id(sq.vertices[i], sq.vertices[(i + 1) % 4]) == Some(sq.edges[i]));
    if !valid {
        return contract(format!("{:?} is not a square of the graph", sq.vertices));
    }
    let outside_ac = g.common_neighbors(a, c).into_iter().any(|w| w != b && w != d);
    let outside_bd = g.common_neighbors(b, d).into_iter().any(|w| w != a && w != c);
    Ok(outside_ac || outside_bd)
}

/// Whether `g` contains a `K_{2,3}` subgraph (two vertices with three
/// common neighbors).
pub fn contains_k23(g: &Graph) -> bool {
    (0..g.vertex_count()).any(|u| {
        (u + 1..g.vertex_count()).any(|v| g.common_neighbors(u, v).len() >= 3)
    })
}
