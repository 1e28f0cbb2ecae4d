//! Cover graphs between layers, homomorphism classification, and the
//! constructions that join two graphs into a two-class RSP-relation.

use serde::Serialize;

use crate::error::{contract, input, Result};
use crate::graph::Graph;
use crate::quotients::layer_partition;
use crate::relations::EdgeRelation;
use crate::rsp::{check_rsp, check_well_behaved};

/// A cover graph together with the graphs its two projections land in.
///
/// `vertices[h]` is the host edge `(a, b)` behind cover vertex `h`;
/// `f1[h]` and `f2[h]` are the local indices of `a` in `source` and of `b`
/// in `target`.
#[derive(Debug, Clone, Serialize)]
pub struct CoverGraph {
    pub graph: Graph,
    pub vertices: Vec<(usize, usize)>,
    pub source: Graph,
    pub source_vertices: Vec<usize>,
    pub target: Graph,
    pub target_vertices: Vec<usize>,
    pub f1: Vec<usize>,
    pub f2: Vec<usize>,
}

impl CoverGraph {
    /// `f1` as host vertex ids.
    pub fn f1_host(&self) -> Vec<usize> {
        self.vertices.iter().map(|&(a, _)| a).collect()
    }

    /// `f2` as host vertex ids.
    pub fn f2_host(&self) -> Vec<usize> {
        self.vertices.iter().map(|&(_, b)| b).collect()
    }
}

/// The `φ`-layer through `x` as a graph on its own vertices (sorted), using
/// only `φ`-edges, with the local-to-host vertex map.
pub fn layer_graph(g: &Graph, r: &EdgeRelation, class_id: usize, x: usize) -> Result<(Graph, Vec<usize>)> {
    if x >= g.vertex_count() {
        return input(format!("vertex {x} is not in the graph"));
    }
    let layers = layer_partition(g, r, class_id, false)?;
    let verts = layers.block(layers.block_of(x)).to_vec();
    let (induced, map) = g.induced_subgraph(&verts);
    let (layer, _) = induced.spanning_subgraph(|e| r.class_of(map[e]) == class_id);
    Ok((layer, verts))
}

fn require_rsp(g: &Graph, r: &EdgeRelation) -> Result<()> {
    if !check_rsp(g, r)?.holds {
        return contract("relation does not have the relaxed square property");
    }
    Ok(())
}

/// Cover-graph edges: `(a1,b1) ~ (a2,b2)` iff `[a1,a2]` and `[b1,b2]` are
/// both `φ`-edges, i.e. the two host edges are opposite in a square.
fn cover_edges(g: &Graph, r: &EdgeRelation, class_id: usize, vertices: &[(usize, usize)]) -> Result<Graph> {
    let in_phi = |u: usize, v: usize| g.edge_id(u, v).is_some_and(|e| r.class_of(e) == class_id);
    let mut edges = Vec::new();
    for (i, &(a1, b1)) in vertices.iter().enumerate() {
        for (j, &(a2, b2)) in vertices.iter().enumerate().skip(i + 1) {
            if in_phi(a1, a2) && in_phi(b1, b2) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(vertices.len(), edges)
}

fn local_index(verts: &[usize], v: usize) -> usize {
    verts.binary_search(&v).expect("vertex lies in the layer")
}

/// `C_{G_φ^x, G_φ^y}`: one vertex per host edge joining the `φ`-layers of
/// `x` and `y`.
pub fn build_cross_cover(g: &Graph, r: &EdgeRelation, class_id: usize, x: usize, y: usize) -> Result<CoverGraph> {
    require_rsp(g, r)?;
    let (lx, vx) = layer_graph(g, r, class_id, x)?;
    let (ly, vy) = layer_graph(g, r, class_id, y)?;
    if vx == vy {
        return input("both vertices lie in one layer; use the self cover");
    }
    let mut vertices = Vec::new();
    for &a in &vx {
        for &b in g.neighbors(a) {
            if vy.binary_search(&b).is_ok() {
                vertices.push((a, b));
            }
        }
    }
    if vertices.is_empty() {
        return input("the two layers are not adjacent");
    }
    vertices.sort_unstable();
    let graph = cover_edges(g, r, class_id, &vertices)?;
    let f1 = vertices.iter().map(|&(a, _)| local_index(&vx, a)).collect();
    let f2 = vertices.iter().map(|&(_, b)| local_index(&vy, b)).collect();
    Ok(CoverGraph {
        graph,
        vertices,
        source: lx,
        source_vertices: vx,
        target: ly,
        target_vertices: vy,
        f1,
        f2,
    })
}

fn self_cover_on(g: &Graph, r: &EdgeRelation, class_id: usize, layer: Graph, verts: Vec<usize>) -> Result<CoverGraph> {
    let mut vertices = Vec::new();
    for &a in &verts {
        for (&b, &e) in g.neighbors(a).iter().zip(g.incident_edges(a)) {
            if r.class_of(e) != class_id && verts.binary_search(&b).is_ok() {
                vertices.push((a, b));
            }
        }
    }
    if vertices.is_empty() {
        return input("no edge outside the class joins two vertices of the layer");
    }
    vertices.sort_unstable();
    let graph = cover_edges(g, r, class_id, &vertices)?;
    let f1: Vec<usize> = vertices.iter().map(|&(a, _)| local_index(&verts, a)).collect();
    let f2: Vec<usize> = vertices.iter().map(|&(_, b)| local_index(&verts, b)).collect();
    Ok(CoverGraph {
        graph,
        vertices,
        source: layer.clone(),
        source_vertices: verts.clone(),
        target: layer,
        target_vertices: verts,
        f1,
        f2,
    })
}

/// `C_{G_φ^x, G_φ^x}`: one vertex per orientation of every non-`φ` edge
/// inside the `φ`-layer of `x`.
pub fn build_self_cover(g: &Graph, r: &EdgeRelation, class_id: usize, x: usize) -> Result<CoverGraph> {
    require_rsp(g, r)?;
    let (layer, verts) = layer_graph(g, r, class_id, x)?;
    self_cover_on(g, r, class_id, layer, verts)
}

/// `C_{H,H}` for the spanning subgraph `H = (V, φ)`, which may be
/// disconnected. No RSP precondition: this is the object used to decide
/// whether `{φ, E ∖ φ}` is RSP.
pub fn build_spanning_self_cover(g: &Graph, r: &EdgeRelation, class_id: usize) -> Result<CoverGraph> {
    if r.len() != g.edge_count() || class_id >= r.class_count() {
        return contract("class does not exist in a relation over this graph");
    }
    let (h, _) = g.spanning_subgraph(|e| r.class_of(e) == class_id);
    self_cover_on(g, r, class_id, h, (0..g.vertex_count()).collect())
}

/// Strength of a vertex map, weakest first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MapClass {
    NotHomomorphism,
    Homomorphism,
    LocallySurjective,
    LocallyBijective,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexMap {
    pub map: Vec<usize>,
    pub classification: MapClass,
    /// `|f⁻¹(u)|` per codomain vertex, reported for covering maps onto a
    /// connected codomain.
    pub fiber_sizes: Option<Vec<usize>>,
}

/// Classifies `f: g -> h`. A locally bijective map restricts to a bijection
/// `N_g(u) -> N_h(f(u))` at every vertex.
pub fn classify_map(f: &[usize], g: &Graph, h: &Graph) -> Result<VertexMap> {
    if f.len() != g.vertex_count() {
        return contract("map must be defined on every vertex of the domain");
    }
    if f.iter().any(|&v| v >= h.vertex_count()) {
        return contract("map leaves the codomain");
    }
    let homomorphism = g.edges().iter().all(|&(u, v)| h.has_edge(f[u], f[v]));
    let mut classification = if homomorphism {
        MapClass::LocallyBijective
    } else {
        MapClass::NotHomomorphism
    };
    if homomorphism {
        for u in 0..g.vertex_count() {
            let mut image: Vec<usize> = g.neighbors(u).iter().map(|&w| f[w]).collect();
            image.sort_unstable();
            let injective = image.windows(2).all(|p| p[0] != p[1]);
            image.dedup();
            if image != h.neighbors(f[u]) {
                classification = MapClass::Homomorphism;
                break;
            }
            if !injective {
                classification = MapClass::LocallySurjective;
            }
        }
    }
    let fiber_sizes = (classification == MapClass::LocallyBijective && h.is_connected()).then(|| {
        let mut sizes = vec![0; h.vertex_count()];
        for &v in f {
            sizes[v] += 1;
        }
        sizes
    });
    Ok(VertexMap {
        map: f.to_vec(),
        classification,
        fiber_sizes,
    })
}

/// A graph on `V(g1) ∪ V(g2)`, where `g2`'s vertex `v` becomes `offset + v`,
/// with the relation `{E(g1) ∪ E(g2), connecting edges}`.
#[derive(Debug, Clone, Serialize)]
pub struct Connection {
    pub graph: Graph,
    pub relation: EdgeRelation,
    pub offset: usize,
    /// Class id of `E(g1) ∪ E(g2)`, absent when both sides are edgeless.
    pub phi_class: Option<usize>,
}

fn join(g1: &Graph, g2: &Graph, cross: impl IntoIterator<Item = (usize, usize)>) -> Result<Connection> {
    let offset = g1.vertex_count();
    let mut edges: Vec<(usize, usize)> = g1.edges().to_vec();
    edges.extend(g2.edges().iter().map(|&(u, v)| (u + offset, v + offset)));
    let mut links: Vec<(usize, usize)> = cross.into_iter().map(|(a, b)| (a, b + offset)).collect();
    links.sort_unstable();
    links.dedup();
    edges.extend(links);
    let graph = Graph::from_edges(offset + g2.vertex_count(), edges)?;
    let side = |v: usize| v >= offset;
    let labels: Vec<usize> = graph
        .edges()
        .iter()
        .map(|&(u, v)| usize::from(side(u) != side(v)))
        .collect();
    let relation = EdgeRelation::from_labels(&labels);
    let phi_class = labels.iter().position(|&l| l == 0).map(|e| relation.class_of(e));
    Ok(Connection {
        graph,
        relation,
        offset,
        phi_class,
    })
}

/// Joins `x ∈ V(g1)` to `y ∈ V(g2)` whenever some `w ∈ V(g)` has
/// `f1(w) = x` and `f2(w) = y`. Both maps must be locally surjective.
pub fn connect_quasicover(g1: &Graph, g2: &Graph, g: &Graph, f1: &[usize], f2: &[usize]) -> Result<Connection> {
    for (name, f, target) in [("f1", f1, g1), ("f2", f2, g2)] {
        if classify_map(f, g, target)?.classification < MapClass::LocallySurjective {
            return contract(format!("{name} is not locally surjective"));
        }
    }
    join(g1, g2, (0..g.vertex_count()).map(|w| (f1[w], f2[w])))
}

/// Joins a graph to a graph it covers: `v` to `p(v)`.
pub fn connect_cover(g: &Graph, g_prime: &Graph, p: &[usize]) -> Result<Connection> {
    if classify_map(p, g, g_prime)?.classification != MapClass::LocallyBijective {
        return contract("map is not a covering map");
    }
    let id: Vec<usize> = (0..g.vertex_count()).collect();
    connect_quasicover(g, g_prime, g, &id, p)
}

/// Given covering maps `p12: h12 -> g2` and `p23: h23 -> g2`, joins
/// `h ∈ V(h12)` to `h' ∈ V(h23)` whenever `p12(h) = p23(h')`.
pub fn compose_common_cover(
    h12: &Graph,
    g2: &Graph,
    h23: &Graph,
    p12: &[usize],
    p23: &[usize],
) -> Result<Connection> {
    for (name, f, dom) in [("first", p12, h12), ("second", p23, h23)] {
        if classify_map(f, dom, g2)?.classification != MapClass::LocallyBijective {
            return contract(format!("{name} map is not a covering map"));
        }
    }
    let cross: Vec<(usize, usize)> = (0..h12.vertex_count())
        .flat_map(|a| {
            (0..h23.vertex_count())
                .filter(move |&b| p12[a] == p23[b])
                .map(move |b| (a, b))
        })
        .collect();
    join(h12, h23, cross)
}

/// Whether the number of non-`φ` neighbors a vertex has in any fixed
/// `φ`-layer depends only on the vertex's own layer.
pub fn check_layer_regularity(g: &Graph, r: &EdgeRelation, class_id: usize) -> Result<bool> {
    require_rsp(g, r)?;
    if check_well_behaved(g, r)?.is_some() {
        return contract("relation is not well-behaved");
    }
    let layers = layer_partition(g, r, class_id, false)?;
    let k = layers.block_count();
    for block in layers.blocks() {
        let mut expected: Option<Vec<usize>> = None;
        for &v in block {
            let mut counts = vec![0; k];
            for (&w, &e) in g.neighbors(v).iter().zip(g.incident_edges(v)) {
                if r.class_of(e) != class_id {
                    counts[layers.block_of(w)] += 1;
                }
            }
            match &expected {
                None => expected = Some(counts),
                Some(c) if *c != counts => return Ok(false),
                Some(_) => {}
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn classify_examples() {
        let c6 = cycle(6);
        let id: Vec<usize> = (0..6).collect();
        let m = classify_map(&id, &c6, &c6).unwrap();
        assert_eq!(m.classification, MapClass::LocallyBijective);
        assert_eq!(m.fiber_sizes, Some(vec![1; 6]));

        let c18 = cycle(18);
        let f: Vec<usize> = (0..18).map(|k| k % 6).collect();
        let m = classify_map(&f, &c18, &c6).unwrap();
        assert_eq!(m.fiber_sizes, Some(vec![3; 6]));

        let k2 = path(2);
        let fold = classify_map(&[0, 1, 0], &path(3), &k2).unwrap();
        assert_eq!(fold.classification, MapClass::LocallySurjective);
        assert_eq!(fold.fiber_sizes, None);

        let bad = classify_map(&[0, 0, 1], &path(3), &k2).unwrap();
        assert_eq!(bad.classification, MapClass::NotHomomorphism);
        assert!(classify_map(&[0, 5, 0], &path(3), &k2).is_err());
    }

    #[test]
    fn identity_cover_is_prism() {
        let c4 = cycle(4);
        let id: Vec<usize> = (0..4).collect();
        let conn = connect_cover(&c4, &c4, &id).unwrap();
        assert_eq!(conn.graph.edge_count(), 12);
        assert_eq!(conn.relation.class_count(), 2);
        assert!(check_rsp(&conn.graph, &conn.relation).unwrap().holds);
    }

    #[test]
    fn self_cover_requires_inner_edges() {
        let c4 = cycle(4);
        let r = EdgeRelation::trivial(4);
        assert!(matches!(build_self_cover(&c4, &r, 0, 0), Err(crate::Error::Input(_))));
    }

    #[test]
    fn non_covering_map_is_rejected() {
        let k2 = path(2);
        assert!(connect_cover(&path(3), &k2, &[0, 1, 0]).is_err());
    }
}
