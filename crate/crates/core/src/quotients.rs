//! Layer partitions, quotient graphs and equitable partitions.

use serde::Serialize;

use crate::error::{contract, Result};
use crate::graph::{components_by, Graph};
use crate::iso::is_isomorphic;
use crate::partition::VertexPartition;
use crate::products::{build_product, ProductKind};
use crate::relations::EdgeRelation;

fn require_class(g: &Graph, r: &EdgeRelation, class_id: usize) -> Result<()> {
    if r.len() != g.edge_count() {
        return contract("relation does not cover the edge set");
    }
    if class_id >= r.class_count() {
        return contract(format!("class {class_id} does not exist"));
    }
    Ok(())
}

/// Components of `(V, φ)`, or of `(V, E ∖ φ)` when `complement` is set.
pub fn layer_partition(
    g: &Graph,
    r: &EdgeRelation,
    class_id: usize,
    complement: bool,
) -> Result<VertexPartition> {
    require_class(g, r, class_id)?;
    Ok(components_by(g, |e| (r.class_of(e) == class_id) != complement))
}

/// Blocks are the non-empty intersections of one block from each input.
pub fn common_refinement(parts: &[VertexPartition]) -> Result<VertexPartition> {
    let Some(first) = parts.first() else {
        return contract("common refinement of no partitions");
    };
    let n = first.len();
    if parts.iter().any(|p| p.len() != n) {
        return contract("partitions are over different vertex counts");
    }
    let keys: Vec<Vec<usize>> = (0..n)
        .map(|v| parts.iter().map(|p| p.block_of(v)).collect())
        .collect();
    let mut ids = std::collections::HashMap::new();
    let labels: Vec<usize> = keys
        .into_iter()
        .map(|k| {
            let next = ids.len();
            *ids.entry(k).or_insert(next)
        })
        .collect();
    Ok(VertexPartition::from_labels(&labels))
}

/// `𝒫^R`: the common refinement of the complement layer partitions over
/// all classes.
pub fn relation_partition(g: &Graph, r: &EdgeRelation) -> Result<VertexPartition> {
    if r.len() != g.edge_count() {
        return contract("relation does not cover the edge set");
    }
    if r.class_count() == 0 {
        return Ok(VertexPartition::singletons(g.vertex_count()));
    }
    let parts = (0..r.class_count())
        .map(|c| layer_partition(g, r, c, true))
        .collect::<Result<Vec<_>>>()?;
    common_refinement(&parts)
}

/// The simple quotient: one vertex per block, an edge between distinct
/// blocks joined by some edge of `g`.
pub fn quotient_graph(g: &Graph, p: &VertexPartition) -> Result<Graph> {
    if p.len() != g.vertex_count() {
        return contract("partition does not match the vertex count");
    }
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (p.block_of(u), p.block_of(v)))
        .filter(|(a, b)| a != b)
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(p.block_count(), edges)
}

/// `matrix[A][B]` is the number of neighbors in block `B` of any vertex of
/// block `A`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquitableCertificate {
    pub matrix: Vec<Vec<usize>>,
}

/// The neighbor-count matrix if it is constant on every block.
pub fn is_equitable(g: &Graph, p: &VertexPartition) -> Result<Option<EquitableCertificate>> {
    if p.len() != g.vertex_count() {
        return contract("partition does not match the vertex count");
    }
    let k = p.block_count();
    let mut matrix = vec![vec![0; k]; k];
    for (a, block) in p.blocks().iter().enumerate() {
        for (i, &v) in block.iter().enumerate() {
            let mut row = vec![0; k];
            for &w in g.neighbors(v) {
                row[p.block_of(w)] += 1;
            }
            if i == 0 {
                matrix[a] = row;
            } else if matrix[a] != row {
                return Ok(None);
            }
        }
    }
    Ok(Some(EquitableCertificate { matrix }))
}

/// Both sides of `G/𝒫^R ≅ □_φ G_φ/𝒫^R_φ̄`.
#[derive(Debug, Clone, Serialize)]
pub struct QuotientProductReport {
    pub partition: VertexPartition,
    pub quotient: Graph,
    pub factors: Vec<Graph>,
    pub product: Graph,
    pub isomorphic: bool,
}

/// Computes `G/𝒫^R`, the per-class quotients `G_φ/𝒫^R_φ̄` and their
/// Cartesian product, and compares the two sides.
pub fn quotient_product_check(g: &Graph, r: &EdgeRelation) -> Result<QuotientProductReport> {
    let partition = relation_partition(g, r)?;
    let quotient = quotient_graph(g, &partition)?;
    let mut factors = Vec::with_capacity(r.class_count());
    for c in 0..r.class_count() {
        let (g_phi, _) = g.spanning_subgraph(|e| r.class_of(e) == c);
        let p_bar = layer_partition(g, r, c, true)?;
        factors.push(quotient_graph(&g_phi, &p_bar)?);
    }
    let product = match factors.len() {
        0 => Graph::empty(1),
        1 => factors[0].clone(),
        _ => build_product(ProductKind::Cartesian, &factors)?.graph,
    };
    let isomorphic = quotient.vertex_count() == product.vertex_count()
        && quotient.edge_count() == product.edge_count()
        && is_isomorphic(&quotient, &product)?;
    Ok(QuotientProductReport {
        partition,
        quotient,
        factors,
        product,
        isomorphic,
    })
}
