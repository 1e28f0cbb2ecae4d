//! Equivalence relations with the relaxed square property on finite simple
//! graphs, together with the product, quotient and cover constructions
//! built on them.

pub mod algorithm;
pub mod covers;
pub mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod iso;
pub mod oracle;
pub mod partition;
pub mod products;
pub mod quotients;
pub mod relations;
pub mod rsp;

pub use algorithm::{algorithm1, ChoiceScript, ScriptStep};
pub use covers::{
    build_cross_cover, build_self_cover, build_spanning_self_cover, check_layer_regularity,
    classify_map, compose_common_cover, connect_cover, connect_quasicover, layer_graph,
    Connection, CoverGraph, MapClass, VertexMap,
};
pub use error::{Error, Result};
pub use generators::{
    another_km_relation, k5_choice_scripts, km_relation, kmm_relation, kmn_relation, named_fixture,
    Fixture, FixtureSpec,
};
pub use graph::{contains_k23, enumerate_squares, square_in_k23, EdgeId, Graph, Square};
pub use iso::{find_isomorphism, find_relation_isomorphism, is_isomorphic, relations_equivalent};
pub use oracle::{oracle_finest, DEFAULT_ORACLE_LIMIT};
pub use partition::VertexPartition;
pub use products::{build_product, product_relation, LabeledProduct, ProductKind};
pub use quotients::{
    common_refinement, is_equitable, layer_partition, quotient_graph, quotient_product_check,
    relation_partition, EquitableCertificate, QuotientProductReport,
};
pub use relations::{
    compute_delta0, compute_delta1, compute_tau, is_refinement, lower_bound, remove_class,
    transitive_closure, upper_bound, DisjointSet, EdgeRelation, PairSet,
};
pub use rsp::{
    check_class_cover, check_rsp, check_well_behaved, finest_counterexample, verify_finest,
    ForbiddenColoringWitness, RspChecker, RspReport,
};
