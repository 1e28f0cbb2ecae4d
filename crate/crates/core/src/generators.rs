//! RSP-relations on complete and complete bipartite graphs, and the named
//! fixture catalog.

use serde::Serialize;

use crate::algorithm::{ChoiceScript, ScriptStep};
use crate::error::{contract, input, Result};
use crate::graph::Graph;
use crate::relations::EdgeRelation;
use crate::rsp::check_rsp;

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return input("a cycle needs at least 3 vertices");
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// The path on `n` vertices.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return input("a path needs at least 1 vertex");
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn complete(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{m,n}` with parts `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    Graph::from_edges(m + n, (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v))))
}

pub fn hypercube(d: usize) -> Result<Graph> {
    if d > 16 {
        return input("hypercube dimension is limited to 16");
    }
    let n = 1usize << d;
    Graph::from_edges(
        n,
        (0..n).flat_map(|v| (0..d).map(move |b| (v, v ^ (1 << b))).filter(|(u, w)| u < w)),
    )
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("petersen graph")
}

/// `K_m` on `ℤ_m` with one class per difference `min(|u-v|, m-|u-v|)`;
/// class `i-1` holds the difference-`i` edges.
pub fn km_relation(m: usize) -> Result<(Graph, EdgeRelation)> {
    if m < 3 {
        return input("km_relation needs m >= 3");
    }
    let g = complete(m)?;
    let labels: Vec<usize> = g
        .edges()
        .iter()
        .map(|&(u, v)| (v - u).min(m - (v - u)))
        .collect();
    Ok((g, EdgeRelation::from_labels(&labels)))
}

/// `K_{m,m}` on vertices `p*m + j` (`p ∈ {0,1}`, `j ∈ ℤ_m`): the edges with
/// equal second coordinate form one class, every other edge takes the class
/// of its projection `[i,j]` under `s`.
pub fn kmm_relation(m: usize, s: &EdgeRelation) -> Result<(Graph, EdgeRelation)> {
    if m < 2 {
        return input("kmm_relation needs m >= 2");
    }
    let km = complete(m)?;
    if s.len() != km.edge_count() {
        return contract(format!("seed relation must cover the {} edges of K_{m}", km.edge_count()));
    }
    if !check_rsp(&km, s)?.holds {
        return contract("seed relation is not RSP on K_m");
    }
    let g = complete_bipartite(m, m)?;
    let labels: Vec<usize> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (i, j) = (u, v - m);
            if i == j {
                0
            } else {
                1 + s.class_of(km.edge_id(i, j).expect("edge of K_m"))
            }
        })
        .collect();
    Ok((g, EdgeRelation::from_labels(&labels)))
}

/// `K_{m,n}` extending an RSP-relation `s` on `K_{m,m}` (vertex layout of
/// [`kmm_relation`]): the extra column `y_{m+i}` repeats the class pattern
/// of column `y_{k_i}` (1-based). `k` defaults to `k_i = ((i-1) mod m) + 1`.
pub fn kmn_relation(m: usize, n: usize, s: &EdgeRelation, k: Option<&[usize]>) -> Result<(Graph, EdgeRelation)> {
    if m == 0 || m >= n {
        return input("kmn_relation needs 0 < m < n");
    }
    let kmm = complete_bipartite(m, m)?;
    if s.len() != kmm.edge_count() {
        return contract(format!("seed relation must cover the {} edges of K_{{{m},{m}}}", kmm.edge_count()));
    }
    if !check_rsp(&kmm, s)?.holds {
        return contract("seed relation is not RSP on K_{m,m}");
    }
    let default: Vec<usize> = (1..=n - m).map(|i| (i - 1) % m + 1).collect();
    let k = k.unwrap_or(&default);
    if k.len() != n - m {
        return input(format!("k must list {} columns", n - m));
    }
    if k.iter().any(|&c| c == 0 || c > m) {
        return input(format!("k entries must lie in 1..={m}"));
    }
    let g = complete_bipartite(m, n)?;
    let labels: Vec<usize> = g
        .edges()
        .iter()
        .map(|&(x, y)| {
            let col = y - m;
            let col = if col < m { col } else { k[col - m] - 1 };
            s.class_of(kmm.edge_id(x, m + col).expect("edge of K_{m,m}"))
        })
        .collect();
    Ok((g, EdgeRelation::from_labels(&labels)))
}

/// `K_n` with `φ = {[0,1]} ∪ E(K_{{2..n-1}})` and its complement.
pub fn another_km_relation(n: usize) -> Result<(Graph, EdgeRelation)> {
    if n < 5 {
        return input("another_km_relation needs n >= 5");
    }
    let g = complete(n)?;
    let labels: Vec<usize> = g
        .edges()
        .iter()
        .map(|&(u, v)| usize::from(!((u, v) == (0, 1) || u >= 2)))
        .collect();
    Ok((g, EdgeRelation::from_labels(&labels)))
}

fn two_class(g: &Graph, first: impl Fn(usize, usize) -> bool) -> EdgeRelation {
    let labels: Vec<usize> = g.edges().iter().map(|&(u, v)| usize::from(!first(u, v))).collect();
    EdgeRelation::from_labels(&labels)
}

/// `C_6` on `0..6` and `C_9` on `6..15` (vertex `6+k`), with `6+k` joined
/// to `k mod 6` and `(k+3) mod 6`; the cycle edges form one class.
pub fn c6c9_chords() -> (Graph, EdgeRelation) {
    let c6 = (0..6).map(|i| (i, (i + 1) % 6));
    let c9 = (0..9).map(|k| (6 + k, 6 + (k + 1) % 9));
    let chords = (0..9).flat_map(|k| [(6 + k, k % 6), (6 + k, (k + 3) % 6)]);
    let g = Graph::from_edges(15, c6.chain(c9).chain(chords)).expect("c6c9 fixture");
    let r = two_class(&g, |u, v| (u < 6) == (v < 6));
    (g, r)
}

/// `C_6` plus the long diagonals `[0,3]`, `[1,4]`, `[2,5]`; the cycle edges
/// form one class.
pub fn c6_long_chords() -> (Graph, EdgeRelation) {
    let g = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6)).chain([(1, 4), (2, 5), (0, 3)]))
        .expect("c6 fixture");
    let r = two_class(&g, |u, v| v - u != 3);
    (g, r)
}

fn step(e: (usize, usize), f: (usize, usize), square: [usize; 4]) -> ScriptStep {
    ScriptStep { pair: (e, f), square }
}

/// Two processing orders for Algorithm 1 on `K_5`: the first ends with two
/// classes, the second with one.
pub fn k5_choice_scripts() -> [ChoiceScript; 2] {
    [
        ChoiceScript::new(vec![
            step((0, 1), (1, 4), [0, 1, 4, 3]),
            step((0, 1), (1, 2), [0, 1, 2, 3]),
            step((0, 1), (0, 4), [0, 1, 2, 4]),
            step((0, 1), (0, 2), [0, 1, 4, 2]),
            step((0, 1), (1, 3), [0, 1, 3, 4]),
        ]),
        ChoiceScript::new(vec![
            step((0, 1), (0, 4), [0, 1, 3, 4]),
            step((1, 2), (1, 3), [1, 2, 4, 3]),
            step((1, 4), (3, 4), [1, 2, 3, 4]),
            step((0, 1), (0, 3), [0, 1, 2, 3]),
            step((0, 2), (2, 3), [0, 2, 3, 4]),
        ]),
    ]
}

/// Name and integer parameters of a catalog fixture.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixtureSpec {
    pub name: String,
    pub params: Vec<usize>,
}

impl FixtureSpec {
    pub fn new(name: &str, params: &[usize]) -> Self {
        Self {
            name: name.to_string(),
            params: params.to_vec(),
        }
    }
}

/// Properties a fixture is known to have, when the catalog records them.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ExpectedProperties {
    pub class_count: Option<usize>,
    pub finest: Option<bool>,
    pub well_behaved: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Fixture {
    pub graph: Graph,
    pub relation: Option<EdgeRelation>,
    pub expected: ExpectedProperties,
}

pub const FIXTURE_NAMES: &[&str] = &[
    "cycle",
    "path",
    "complete",
    "complete_bipartite",
    "hypercube",
    "petersen",
    "cube_minus_edge",
    "c6c9_chords",
    "c6_long_chords",
    "k5_paper_orderings",
    "km",
    "another_km",
    "kmm",
    "kmn",
];

fn param(spec: &FixtureSpec, i: usize) -> Result<usize> {
    match spec.params.get(i) {
        Some(&p) => Ok(p),
        None => input(format!("fixture '{}' needs parameter {}", spec.name, i + 1)),
    }
}

fn plain(graph: Graph) -> Fixture {
    Fixture {
        graph,
        relation: None,
        expected: ExpectedProperties::default(),
    }
}

fn with_relation((graph, r): (Graph, EdgeRelation), expected: ExpectedProperties) -> Fixture {
    Fixture {
        graph,
        relation: Some(r),
        expected,
    }
}

fn kmm_seed(m: usize) -> Result<EdgeRelation> {
    if m == 2 {
        Ok(EdgeRelation::trivial(1))
    } else {
        Ok(km_relation(m)?.1)
    }
}

/// Resolves a catalog entry. Relations are attached where the fixture
/// carries one: `km`, `another_km`, `kmm` (seeded by `km`), `kmn` (seeded
/// by `kmm`, default column assignment), `c6c9_chords` and
/// `c6_long_chords`.
pub fn named_fixture(spec: &FixtureSpec) -> Result<Fixture> {
    let known = |class_count, finest, well_behaved| ExpectedProperties {
        class_count,
        finest,
        well_behaved,
    };
    Ok(match spec.name.as_str() {
        "cycle" => plain(cycle(param(spec, 0)?)?),
        "path" => plain(path(param(spec, 0)?)?),
        "complete" => plain(complete(param(spec, 0)?)?),
        "complete_bipartite" => plain(complete_bipartite(param(spec, 0)?, param(spec, 1)?)?),
        "hypercube" => plain(hypercube(param(spec, 0)?)?),
        "petersen" => plain(petersen()),
        "cube_minus_edge" => {
            let q3 = hypercube(3)?;
            plain(q3.spanning_subgraph(|e| e != 0).0)
        }
        "k5_paper_orderings" => plain(complete(5)?),
        "c6c9_chords" => with_relation(c6c9_chords(), known(Some(2), None, Some(true))),
        "c6_long_chords" => with_relation(c6_long_chords(), known(Some(2), None, None)),
        "km" => {
            let m = param(spec, 0)?;
            let finest = match m {
                4 => Some(false),
                5..=7 => Some(true),
                _ => None,
            };
            with_relation(km_relation(m)?, known(Some(m / 2), finest, None))
        }
        "another_km" => with_relation(another_km_relation(param(spec, 0)?)?, known(Some(2), None, None)),
        "kmm" => {
            let m = param(spec, 0)?;
            with_relation(kmm_relation(m, &kmm_seed(m)?)?, ExpectedProperties::default())
        }
        "kmn" => {
            let (m, n) = (param(spec, 0)?, param(spec, 1)?);
            let seed = kmm_relation(m, &kmm_seed(m)?)?.1;
            let k: Vec<usize> = spec.params[2..].to_vec();
            let k = (!k.is_empty()).then_some(k.as_slice());
            with_relation(kmn_relation(m, n, &seed, k)?, ExpectedProperties::default())
        }
        other => return input(format!("unknown fixture '{other}'")),
    })
}
