//! Cartesian, strong and direct products with coordinate-labeled vertices,
//! and the product relation built from factor relations.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{contract, input, Result};
use crate::graph::{EdgeId, Graph};
use crate::relations::EdgeRelation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductKind {
    Cartesian,
    Strong,
    Direct,
}

impl std::str::FromStr for ProductKind {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cartesian" => Ok(Self::Cartesian),
            "strong" => Ok(Self::Strong),
            "direct" => Ok(Self::Direct),
            other => input(format!("unknown product kind '{other}'")),
        }
    }
}

/// A product graph whose vertex `v` has coordinates `coords[v]`, one per
/// factor, in row-major order.
#[derive(Debug, Clone, Serialize)]
pub struct LabeledProduct {
    pub kind: ProductKind,
    #[serde(skip)]
    pub factors: Vec<Graph>,
    pub graph: Graph,
    pub coords: Vec<Vec<usize>>,
}

impl LabeledProduct {
    /// `p_i(v)`.
    pub fn project_vertex(&self, v: usize, i: usize) -> usize {
        self.coords[v][i]
    }

    /// `p_i(e)` when it is an edge of factor `i`; `None` when it collapses
    /// to a vertex.
    pub fn project_edge(&self, e: EdgeId, i: usize) -> Option<EdgeId> {
        let (u, v) = self.graph.edge(e);
        self.factors[i].edge_id(self.coords[u][i], self.coords[v][i])
    }

    /// The support `I_e`: coordinates in which `e` projects to an edge.
    pub fn support(&self, e: EdgeId) -> Vec<usize> {
        (0..self.factors.len())
            .filter(|&i| self.project_edge(e, i).is_some())
            .collect()
    }

    /// Row-major index of a coordinate tuple.
    pub fn vertex_of(&self, coords: &[usize]) -> usize {
        coords
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&c, f)| acc * f.vertex_count() + c)
    }
}

fn adjacent(kind: ProductKind, factors: &[Graph], a: &[usize], b: &[usize]) -> bool {
    let mut equal = 0;
    let mut adj = 0;
    for ((f, &x), &y) in factors.iter().zip(a).zip(b) {
        if x == y {
            equal += 1;
        } else if f.has_edge(x, y) {
            adj += 1;
        } else {
            return false;
        }
    }
    match kind {
        ProductKind::Cartesian => adj == 1,
        ProductKind::Strong => adj >= 1,
        ProductKind::Direct => equal == 0,
    }
}

/// Builds the product of two or more non-empty factors.
pub fn build_product(kind: ProductKind, factors: &[Graph]) -> Result<LabeledProduct> {
    if factors.len() < 2 {
        return input("a product needs at least two factors");
    }
    if factors.iter().any(|f| f.vertex_count() == 0) {
        return input("product factors must be non-empty");
    }
    let total: usize = factors.iter().map(Graph::vertex_count).product();
    let coords: Vec<Vec<usize>> = (0..total)
        .map(|mut v| {
            let mut c = vec![0; factors.len()];
            for i in (0..factors.len()).rev() {
                let n = factors[i].vertex_count();
                c[i] = v % n;
                v /= n;
            }
            c
        })
        .collect();
    let mut edges = Vec::new();
    for u in 0..total {
        for v in u + 1..total {
            if adjacent(kind, factors, &coords[u], &coords[v]) {
                edges.push((u, v));
            }
        }
    }
    Ok(LabeledProduct {
        kind,
        factors: factors.to_vec(),
        graph: Graph::from_edges(total, edges)?,
        coords,
    })
}

/// Edges `e, f` are related iff `I_e = I_f` and their projections are
/// related in every factor of the support.
pub fn product_relation(p: &LabeledProduct, factor_relations: &[EdgeRelation]) -> Result<EdgeRelation> {
    if factor_relations.len() != p.factors.len() {
        return contract(format!(
            "{} factor relations given for {} factors",
            factor_relations.len(),
            p.factors.len()
        ));
    }
    for (i, (f, r)) in p.factors.iter().zip(factor_relations).enumerate() {
        if f.edge_count() != r.len() {
            return contract(format!("relation {i} does not cover the edges of factor {i}"));
        }
    }
    let mut ids: HashMap<Vec<(usize, usize)>, usize> = HashMap::new();
    let labels: Vec<usize> = (0..p.graph.edge_count())
        .map(|e| {
            let key: Vec<(usize, usize)> = (0..p.factors.len())
                .filter_map(|i| p.project_edge(e, i).map(|fe| (i, factor_relations[i].class_of(fe))))
                .collect();
            let next = ids.len();
            *ids.entry(key).or_insert(next)
        })
        .collect();
    Ok(EdgeRelation::from_labels(&labels))
}
