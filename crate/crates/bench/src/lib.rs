//! Shared inputs for the benchmarks.

use rsp_core::generators::{c6c9_chords, complete, complete_bipartite, hypercube};
use rsp_core::{build_product, EdgeRelation, Graph, ProductKind};

/// Named graphs of growing size used across benchmark groups.
pub fn graphs() -> Vec<(&'static str, Graph)> {
    let q = |d| hypercube(d).expect("hypercube");
    let grid = build_product(
        ProductKind::Cartesian,
        &[complete(4).expect("k4"), complete(4).expect("k4"), complete(3).expect("k3")],
    )
    .expect("product")
    .graph;
    vec![
        ("q4", q(4)),
        ("q6", q(6)),
        ("k9", complete(9).expect("k9")),
        ("k4_6", complete_bipartite(4, 6).expect("k4,6")),
        ("k4k4k3", grid),
        ("c6c9", c6c9_chords().0),
    ]
}

/// A relation with many classes on a mid-sized graph.
pub fn relation_input() -> (Graph, EdgeRelation) {
    rsp_core::km_relation(9).expect("km9")
}

/// Small graphs within the oracle's edge limit.
pub fn oracle_graphs() -> Vec<(&'static str, Graph)> {
    vec![
        ("k5", complete(5).expect("k5")),
        ("k2_3", complete_bipartite(2, 3).expect("k2,3")),
        ("q3", hypercube(3).expect("q3")),
    ]
}
