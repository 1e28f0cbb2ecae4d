//! Acceptance suite: one line per criterion, `[PASS]` or `[FAIL]`.
//!
//! Criteria listed in `UNATTAINABLE` are run in full and reported honestly;
//! their failure alone does not fail the process. Any other failure, or an
//! unattainable criterion that unexpectedly passes, exits non-zero.

use std::process::ExitCode;

use rsp_core::generators::{
    c6_long_chords, c6c9_chords, complete, complete_bipartite, cycle, hypercube, path, petersen,
};
use rsp_core::*;

type Outcome = std::result::Result<String, String>;
type Named = (String, Graph, EdgeRelation);
type Criterion = (usize, &'static str, fn() -> Outcome);

const UNATTAINABLE: &[(usize, &str)] = &[(
    8,
    "km_relation(9) has exactly one class made of disjoint triangles, while the strong-product \
     relation needs two such classes, so no merge of two km classes can match",
)];

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err(e: Error) -> String {
    e.to_string()
}

fn cube_minus_edge() -> Graph {
    hypercube(3).unwrap().spanning_subgraph(|e| e != 0).0
}

fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
}

fn spider() -> Graph {
    Graph::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap()
}

fn forbidden_k23() -> (Graph, EdgeRelation) {
    // x=0, y=1, a=2, b=3, c=4
    let g = complete_bipartite(2, 3).unwrap();
    let phi = [g.edge_id(2, 0).unwrap(), g.edge_id(0, 4).unwrap(), g.edge_id(1, 3).unwrap()];
    let labels: Vec<usize> = (0..g.edge_count()).map(|e| usize::from(!phi.contains(&e))).collect();
    (g, EdgeRelation::from_labels(&labels))
}

fn kmn_k23() -> (Graph, EdgeRelation) {
    let seed = kmm_relation(2, &EdgeRelation::trivial(1)).unwrap().1;
    kmn_relation(2, 3, &seed, Some(&[1])).unwrap()
}

fn mod_map(n: usize, m: usize) -> Vec<usize> {
    (0..n).map(|k| k % m).collect()
}

fn product_fixture(kind: ProductKind, a: &Graph, b: &Graph) -> (Graph, EdgeRelation) {
    let p = build_product(kind, &[a.clone(), b.clone()]).unwrap();
    let r = product_relation(
        &p,
        &[EdgeRelation::trivial(a.edge_count()), EdgeRelation::trivial(b.edge_count())],
    )
    .unwrap();
    (p.graph, r)
}

/// Well-behaved two-class relations built by the cover constructions.
fn cover_fixtures() -> Vec<(String, Graph, EdgeRelation)> {
    let mut out = Vec::new();
    let c3 = cycle(3).unwrap();
    let c4 = cycle(4).unwrap();
    let c6 = cycle(6).unwrap();
    let c9 = cycle(9).unwrap();
    let c18 = cycle(18).unwrap();
    let conn = connect_cover(&c6, &c3, &mod_map(6, 3)).unwrap();
    out.push(("connect C6->C3".into(), conn.graph, conn.relation));
    let conn = connect_cover(&c18, &c6, &mod_map(18, 6)).unwrap();
    out.push(("connect C18->C6".into(), conn.graph, conn.relation));
    let id: Vec<usize> = (0..4).collect();
    let conn = connect_cover(&c4, &c4, &id).unwrap();
    out.push(("connect C4->C4".into(), conn.graph, conn.relation));
    let conn = compose_common_cover(&c6, &c3, &c9, &mod_map(6, 3), &mod_map(9, 3)).unwrap();
    out.push(("compose C6,C9 over C3".into(), conn.graph, conn.relation));
    out
}

/// Every (graph, RSP relation) pair used by the quotient and coarsening
/// checks.
fn rsp_fixtures() -> Vec<(String, Graph, EdgeRelation)> {
    let mut out: Vec<(String, Graph, EdgeRelation)> = Vec::new();
    for n in 4..=8 {
        let g = cycle(n).unwrap();
        let r = upper_bound(&g);
        out.push((format!("C{n} upper"), g, r));
    }
    let q3 = hypercube(3).unwrap();
    out.push(("Q3 lower".into(), q3.clone(), lower_bound(&q3)));
    for m in [4, 5, 6, 7, 9] {
        let (g, r) = km_relation(m).unwrap();
        out.push((format!("K{m} km"), g, r));
    }
    let (g, r) = another_km_relation(5).unwrap();
    out.push(("K5 another".into(), g, r));
    let (g, r) = another_km_relation(6).unwrap();
    out.push(("K6 another".into(), g, r));
    let (g, r) = c6c9_chords();
    out.push(("c6c9_chords".into(), g, r));
    let (g, r) = c6_long_chords();
    out.push(("c6_long_chords".into(), g, r));
    let (g, r) = kmn_k23();
    out.push(("K23 kmn".into(), g, r));
    let (g, r) = kmm_relation(3, &km_relation(3).unwrap().1).unwrap();
    out.push(("K33 kmm".into(), g, r));
    let (g, r) = forbidden_k23();
    out.push(("K23 forbidden".into(), g, r));
    let k2 = complete(2).unwrap();
    let k3 = complete(3).unwrap();
    let p3 = path(3).unwrap();
    let c4 = cycle(4).unwrap();
    for (name, kind, a, b) in [
        ("P3 box K2", ProductKind::Cartesian, &p3, &k2),
        ("C4 box K2", ProductKind::Cartesian, &c4, &k2),
        ("K3 box K3", ProductKind::Cartesian, &k3, &k3),
        ("K3 strong K3", ProductKind::Strong, &k3, &k3),
        ("K2 strong P3", ProductKind::Strong, &k2, &p3),
        ("K3 direct C4", ProductKind::Direct, &k3, &c4),
    ] {
        let (g, r) = product_fixture(kind, a, b);
        out.push((name.into(), g, r));
    }
    out.extend(cover_fixtures());
    out
}

fn ac1() -> Outcome {
    let mut fixtures: Vec<(String, Graph)> = Vec::new();
    for n in 4..=8 {
        fixtures.push((format!("C{n}"), cycle(n).unwrap()));
    }
    for n in 2..=5 {
        fixtures.push((format!("P{n}"), path(n).unwrap()));
    }
    fixtures.push(("K4".into(), complete(4).unwrap()));
    fixtures.push(("K5".into(), complete(5).unwrap()));
    fixtures.push(("K23".into(), complete_bipartite(2, 3).unwrap()));
    fixtures.push(("K24".into(), complete_bipartite(2, 4).unwrap()));
    fixtures.push(("Q3-e".into(), cube_minus_edge()));
    let mut total = 0;
    for (name, g) in &fixtures {
        ensure!(g.edge_count() <= 12, "{name} has too many edges");
        let lo = lower_bound(g);
        let hi = upper_bound(g);
        let finest = oracle_finest(g, 12).map_err(err)?;
        ensure!(!finest.is_empty(), "{name}: oracle returned nothing");
        for f in &finest {
            ensure!(is_refinement(&lo, f).map_err(err)?, "{name}: lower bound does not refine {:?}", f.labels());
            ensure!(is_refinement(f, &hi).map_err(err)?, "{name}: {:?} does not refine the upper bound", f.labels());
        }
        total += finest.len();
    }
    Ok(format!("{} graphs, {total} finest relations inside the bounds", fixtures.len()))
}

fn ac2() -> Outcome {
    let mut fixtures: Vec<(String, Graph)> = Vec::new();
    for n in 4..=8 {
        fixtures.push((format!("C{n}"), cycle(n).unwrap()));
    }
    for n in 2..=5 {
        fixtures.push((format!("P{n}"), path(n).unwrap()));
    }
    fixtures.push(("star K1,3".into(), star(3)));
    fixtures.push(("spider".into(), spider()));
    fixtures.push(("Q3".into(), hypercube(3).unwrap()));
    fixtures.push(("Petersen".into(), petersen()));
    let mut oracle_runs = 0;
    for (name, g) in &fixtures {
        ensure!(!contains_k23(g), "{name} contains a K23");
        let lo = lower_bound(g);
        let hi = upper_bound(g);
        let alg = algorithm1(g, None).map_err(err)?;
        ensure!(lo == hi, "{name}: lower and upper bounds differ");
        ensure!(alg == lo, "{name}: algorithm output differs from the bounds");
        if g.edge_count() <= DEFAULT_ORACLE_LIMIT {
            let finest = oracle_finest(g, DEFAULT_ORACLE_LIMIT).map_err(err)?;
            ensure!(finest == vec![lo.clone()], "{name}: oracle found {} finest relations", finest.len());
            oracle_runs += 1;
        }
    }
    Ok(format!("{} graphs agree, oracle confirmed on {oracle_runs}", fixtures.len()))
}

fn ac3() -> Outcome {
    for m in 3..=12 {
        let (g, r) = km_relation(m).map_err(err)?;
        ensure!(check_rsp(&g, &r).map_err(err)?.holds, "km_relation({m}) is not RSP");
        ensure!(r.class_count() == m / 2, "km_relation({m}) has {} classes", r.class_count());
    }
    for m in 5..=7 {
        let (g, r) = km_relation(m).map_err(err)?;
        ensure!(verify_finest(&g, &r).map_err(err)?, "km_relation({m}) is not finest");
    }
    let (k4, r4) = km_relation(4).map_err(err)?;
    let k2 = complete(2).unwrap();
    let strong = build_product(ProductKind::Strong, &[k2.clone(), k2]).map_err(err)?;
    ensure!(strong.graph == k4, "K2 strong K2 is not K4 with the same labels");
    let refinement = product_relation(&strong, &[EdgeRelation::trivial(1), EdgeRelation::trivial(1)]).map_err(err)?;
    ensure!(refinement.class_count() == 3, "strong-product relation has {} classes", refinement.class_count());
    let counter = finest_counterexample(&k4, &r4, rsp::DEFAULT_SPLIT_BUDGET).map_err(err)?;
    ensure!(counter.as_ref() == Some(&refinement), "counterexample for m=4 is {counter:?}");
    ensure!(check_rsp(&k4, &refinement).map_err(err)?.holds, "refinement is not RSP");
    ensure!(is_refinement(&refinement, &r4).map_err(err)?, "counterexample does not refine km(4)");
    Ok("RSP for m=3..12, finest for m=5..7, m=4 refined by the 3-class strong-product relation".into())
}

fn ac4() -> Outcome {
    let g = complete(5).unwrap();
    let [first, second] = k5_choice_scripts();
    let r1 = algorithm1(&g, Some(&first)).map_err(err)?;
    let phi1: Vec<EdgeId> = [(0, 1), (2, 3), (3, 4), (2, 4)]
        .iter()
        .map(|&(u, v)| g.edge_id(u, v).unwrap())
        .collect();
    let mut phi1_sorted = phi1.clone();
    phi1_sorted.sort_unstable();
    let rest: Vec<EdgeId> = (0..g.edge_count()).filter(|e| !phi1.contains(e)).collect();
    let mut expected = vec![phi1_sorted, rest];
    expected.sort();
    let mut got = r1.classes().to_vec();
    got.sort();
    ensure!(got == expected, "first script gave classes {got:?}");
    ensure!(check_rsp(&g, &r1).map_err(err)?.holds, "first script result is not RSP");
    let r2 = algorithm1(&g, Some(&second)).map_err(err)?;
    ensure!(r2.class_count() == 1, "second script gave {} classes", r2.class_count());
    Ok("first script: 2 classes with the expected 4-edge class, second script: 1 class".into())
}

/// Every two-block split of one class of `r` that breaks RSP on `g`.
fn non_rsp_splits(g: &Graph, r: &EdgeRelation) -> Vec<EdgeRelation> {
    let checker = RspChecker::new(g);
    let mut out = Vec::new();
    for class in r.classes() {
        let k = class.len();
        for half in 1..(1u64 << (k - 1)) {
            let mut labels = r.labels().to_vec();
            for (bit, &e) in class.iter().enumerate().skip(1) {
                if half >> (bit - 1) & 1 == 1 {
                    labels[e] = r.class_count();
                }
            }
            if !checker.holds(&labels) {
                out.push(EdgeRelation::from_labels(&labels));
            }
        }
    }
    out
}

fn ac5() -> Outcome {
    let factors = [
        ("K2", complete(2).unwrap()),
        ("K3", complete(3).unwrap()),
        ("P3", path(3).unwrap()),
        ("C4", cycle(4).unwrap()),
    ];
    let finest: Vec<Vec<EdgeRelation>> = factors
        .iter()
        .map(|(_, g)| oracle_finest(g, 12).unwrap())
        .collect();
    let (mut positive, mut negative, mut skipped) = (0, 0, 0);
    for kind in [ProductKind::Cartesian, ProductKind::Strong, ProductKind::Direct] {
        for (i, (na, a)) in factors.iter().enumerate() {
            for (j, (nb, b)) in factors.iter().enumerate() {
                let p = build_product(kind, &[a.clone(), b.clone()]).map_err(err)?;
                if !p.graph.is_connected() {
                    skipped += 1;
                    continue;
                }
                for ra in &finest[i] {
                    for rb in &finest[j] {
                        let r = product_relation(&p, &[ra.clone(), rb.clone()]).map_err(err)?;
                        ensure!(
                            check_rsp(&p.graph, &r).map_err(err)?.holds,
                            "{kind:?} {na} x {nb}: product of finest relations is not RSP"
                        );
                        positive += 1;
                        for bad in non_rsp_splits(a, ra) {
                            let r = product_relation(&p, &[bad.clone(), rb.clone()]).map_err(err)?;
                            ensure!(
                                !check_rsp(&p.graph, &r).map_err(err)?.holds,
                                "{kind:?} {na} x {nb}: corrupted first factor {:?} still RSP",
                                bad.labels()
                            );
                            negative += 1;
                        }
                        for bad in non_rsp_splits(b, rb) {
                            let r = product_relation(&p, &[ra.clone(), bad.clone()]).map_err(err)?;
                            ensure!(
                                !check_rsp(&p.graph, &r).map_err(err)?.holds,
                                "{kind:?} {na} x {nb}: corrupted second factor {:?} still RSP",
                                bad.labels()
                            );
                            negative += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(format!(
        "{positive} product relations RSP, {negative} corruptions rejected, {skipped} disconnected products skipped"
    ))
}

fn ac6() -> Outcome {
    let k2 = complete(2).unwrap();
    let mut report = Vec::new();
    for (name, a) in [("P3 box K2", path(3).unwrap()), ("C4 box K2", cycle(4).unwrap())] {
        let p = build_product(ProductKind::Cartesian, &[a.clone(), k2.clone()]).map_err(err)?;
        let mut expected = Vec::new();
        for ra in oracle_finest(&a, 12).map_err(err)? {
            for rb in oracle_finest(&k2, 12).map_err(err)? {
                expected.push(product_relation(&p, &[ra.clone(), rb]).map_err(err)?);
            }
        }
        expected.sort_by(|x, y| x.labels().cmp(y.labels()));
        expected.dedup();
        let got = oracle_finest(&p.graph, 12).map_err(err)?;
        ensure!(got == expected, "{name}: oracle found {} relations, expected {}", got.len(), expected.len());
        report.push(format!("{name}: {} relation(s) with {} classes", got.len(), got[0].class_count()));
    }
    Ok(report.join("; "))
}

fn ac7() -> Outcome {
    let mut checked = 0;
    for (name, g, r) in rsp_fixtures() {
        if !check_rsp(&g, &r).map_err(err)?.holds {
            continue;
        }
        let rep = quotients::quotient_product_check(&g, &r).map_err(err)?;
        ensure!(rep.isomorphic, "{name}: quotient and product of class quotients differ");
        checked += 1;
    }
    let k2 = complete(2).unwrap();
    let k3 = complete(3).unwrap();
    let p3 = path(3).unwrap();
    let c4 = cycle(4).unwrap();
    for (a, b) in [(&k3, &k3), (&k2, &p3), (&k2, &k3), (&p3, &c4), (&k3, &c4)] {
        let p = build_product(ProductKind::Strong, &[a.clone(), b.clone()]).map_err(err)?;
        for ra in oracle_finest(a, 12).map_err(err)? {
            for rb in oracle_finest(b, 12).map_err(err)? {
                let r = product_relation(&p, &[ra.clone(), rb]).map_err(err)?;
                let q = quotient_graph(&p.graph, &relation_partition(&p.graph, &r).map_err(err)?).map_err(err)?;
                ensure!(q.vertex_count() == 1, "strong product quotient has {} vertices", q.vertex_count());
            }
        }
    }
    let (k9, km9) = km_relation(9).map_err(err)?;
    let strong = product_fixture(ProductKind::Strong, &k3, &k3);
    // relations coming from the strong-product structure of K9
    let mut k9_relations = vec![km9.clone(), affine_plane_relation(&strong.0), strong.1.clone()];
    for a in 0..km9.class_count() {
        for b in a + 1..km9.class_count() {
            k9_relations.push(km9.merge_classes(a, b));
        }
    }
    for r in &k9_relations {
        ensure!(check_rsp(&k9, r).map_err(err)?.holds, "tested K9 relation is not RSP");
        let q = quotient_graph(&k9, &relation_partition(&k9, r).map_err(err)?).map_err(err)?;
        ensure!(q.vertex_count() == 1, "K9 quotient has {} vertices", q.vertex_count());
    }
    // the default algorithm run finds a two-class relation of another kind
    let alg = algorithm1(&k9, None).map_err(err)?;
    let alg_rep = quotients::quotient_product_check(&k9, &alg).map_err(err)?;
    ensure!(alg_rep.isomorphic, "K9 algorithm relation: quotient identity fails");
    Ok(format!(
        "{checked} fixtures match the product of class quotients; strong products and {} product-type K9 relations \
         quotient to K1 (the default algorithm relation on K9 has classes {:?} and quotient K{})",
        k9_relations.len(),
        alg.class_sizes(),
        alg_rep.quotient.vertex_count()
    ))
}

fn affine_plane_relation(g: &Graph) -> EdgeRelation {
    let labels: Vec<usize> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (d0, d1) = ((v / 3 + 3 - u / 3) % 3, (v % 3 + 3 - u % 3) % 3);
            match (d0, d1) {
                (0, _) => 0,
                (_, 0) => 1,
                (a, b) if a == b => 2,
                _ => 3,
            }
        })
        .collect();
    EdgeRelation::from_labels(&labels)
}

fn ac8() -> Outcome {
    let (k9, km9) = km_relation(9).map_err(err)?;
    ensure!(km9.class_count() == 4, "km_relation(9) has {} classes", km9.class_count());
    ensure!(check_rsp(&k9, &km9).map_err(err)?.holds, "km_relation(9) is not RSP");
    let k3 = complete(3).unwrap();
    let (sg, target) = product_fixture(ProductKind::Strong, &k3, &k3);
    ensure!(is_isomorphic(&sg, &k9).map_err(err)?, "K3 strong K3 is not K9");

    // the extra observation: the affine-plane relation does merge onto the target
    let affine = affine_plane_relation(&sg);
    let affine_ok = check_rsp(&sg, &affine).map_err(err)?.holds
        && affine.class_count() == 4
        && affine.merge_classes(2, 3) == target;
    let note = if affine_ok {
        "affine-plane relation with diagonals merged equals it exactly"
    } else {
        "affine-plane check also failed"
    };

    // classes phi_3 and phi_4 are the difference-3 and difference-4 classes
    let merged = km9.merge_classes(2, 3);
    let found = find_relation_isomorphism(&k9, &merged, &sg, &target).map_err(err)?;
    let any_pair = (0..4)
        .flat_map(|a| (a + 1..4).map(move |b| (a, b)))
        .filter(|&(a, b)| {
            find_relation_isomorphism(&k9, &km9.merge_classes(a, b), &sg, &target)
                .ok()
                .flatten()
                .is_some()
        })
        .count();
    let triangle_classes = (0..4)
        .filter(|&c| k9.spanning_subgraph(|e| km9.class_of(e) == c).0.components().block_count() == 3)
        .count();
    match found {
        Some(_) => Ok(format!("merged km(9) classes match the strong-product relation; {note}")),
        None => Err(format!(
            "no vertex bijection maps merged km(9) onto the strong-product relation \
             ({any_pair} of 6 class merges match; km(9) has {triangle_classes} triangle class, the target needs 2); {note}"
        )),
    }
}

fn ac9() -> Outcome {
    let (g, r) = c6c9_chords();
    let phi = r.class_of(g.edge_id(0, 1).unwrap());
    let cover = build_cross_cover(&g, &r, phi, 0, 6).map_err(err)?;
    ensure!(is_isomorphic(&cover.graph, &cycle(18).unwrap()).map_err(err)?, "cross cover is not C18");
    ensure!(is_isomorphic(&cover.source, &cycle(6).unwrap()).map_err(err)?, "first layer is not C6");
    ensure!(is_isomorphic(&cover.target, &cycle(9).unwrap()).map_err(err)?, "second layer is not C9");
    let f1 = classify_map(&cover.f1, &cover.graph, &cover.source).map_err(err)?;
    let f2 = classify_map(&cover.f2, &cover.graph, &cover.target).map_err(err)?;
    ensure!(f1.classification == MapClass::LocallyBijective, "f1 is {:?}", f1.classification);
    ensure!(f2.classification == MapClass::LocallyBijective, "f2 is {:?}", f2.classification);
    ensure!(f1.fiber_sizes == Some(vec![3; 6]), "f1 fibers {:?}", f1.fiber_sizes);
    ensure!(f2.fiber_sizes == Some(vec![2; 9]), "f2 fibers {:?}", f2.fiber_sizes);
    Ok("cross cover is C18, covering C6 with fibers of 3 and C9 with fibers of 2".into())
}

fn ac10() -> Outcome {
    let (g, r) = c6_long_chords();
    let phi = r.class_of(g.edge_id(0, 1).unwrap());
    let cover = build_self_cover(&g, &r, phi, 0).map_err(err)?;
    ensure!(is_isomorphic(&cover.graph, &cycle(6).unwrap()).map_err(err)?, "self cover is not C6");
    let f1 = classify_map(&cover.f1, &cover.graph, &cover.source).map_err(err)?;
    ensure!(f1.fiber_sizes == Some(vec![1; 6]), "f1 is not a bijective covering map");
    let f1h = cover.f1_host();
    let f2h = cover.f2_host();
    let mut induced = vec![usize::MAX; 6];
    for (a, b) in f1h.into_iter().zip(f2h) {
        induced[a] = b;
    }
    let expected: Vec<usize> = (0..6).map(|k| (k + 3) % 6).collect();
    ensure!(induced == expected, "induced map is {induced:?}");
    Ok("self cover is C6 and induces k -> k+3 mod 6".into())
}

fn well_behaved_fixtures() -> std::result::Result<(Vec<Named>, Vec<String>), String> {
    let mut candidates = Vec::new();
    let (g, r) = c6c9_chords();
    candidates.push(("c6c9_chords".to_string(), g, r));
    candidates.extend(cover_fixtures());
    let (g, r) = kmn_k23();
    candidates.push(("K23 kmn".to_string(), g, r));
    let mut kept = Vec::new();
    let mut excluded = Vec::new();
    for (name, g, r) in candidates {
        ensure!(check_rsp(&g, &r).map_err(err)?.holds, "{name} is not RSP");
        if check_well_behaved(&g, &r).map_err(err)?.is_some() {
            excluded.push(name);
        } else {
            kept.push((name, g, r));
        }
    }
    Ok((kept, excluded))
}

fn ac11() -> Outcome {
    let (fixtures, excluded) = well_behaved_fixtures()?;
    for (name, g, r) in &fixtures {
        for c in 0..r.class_count() {
            let (g_phi, _) = g.spanning_subgraph(|e| r.class_of(e) == c);
            let p_bar = layer_partition(g, r, c, true).map_err(err)?;
            ensure!(is_equitable(&g_phi, &p_bar).map_err(err)?.is_some(), "{name}: class {c} layer partition not equitable");
        }
        let p = relation_partition(g, r).map_err(err)?;
        ensure!(is_equitable(g, &p).map_err(err)?.is_some(), "{name}: relation partition not equitable");
    }
    ensure!(!fixtures.is_empty(), "no well-behaved fixtures");
    Ok(format!(
        "{} well-behaved fixtures equitable; excluded as not well-behaved: {}",
        fixtures.len(),
        if excluded.is_empty() { "none".to_string() } else { excluded.join(", ") }
    ))
}

fn ac12() -> Outcome {
    let (fixtures, _) = well_behaved_fixtures()?;
    let mut checks = 0;
    for (name, g, r) in &fixtures {
        for c in 0..r.class_count() {
            ensure!(check_layer_regularity(g, r, c).map_err(err)?, "{name}: class {c} is not layer-regular");
            checks += 1;
        }
    }
    let (g, r) = forbidden_k23();
    ensure!(check_rsp(&g, &r).map_err(err)?.holds, "forbidden-colored K23 relation should be RSP");
    ensure!(check_well_behaved(&g, &r).map_err(err)?.is_some(), "forbidden coloring not detected");
    match check_layer_regularity(&g, &r, 0) {
        Err(Error::Contract(_)) => {}
        other => return Err(format!("forbidden-colored K23 not rejected: {other:?}")),
    }
    Ok(format!("{checks} class checks regular; forbidden-colored K23 rejected"))
}

fn ac13() -> Outcome {
    let c3 = cycle(3).unwrap();
    let c6 = cycle(6).unwrap();
    let c9 = cycle(9).unwrap();
    let conn = connect_cover(&c6, &c3, &mod_map(6, 3)).map_err(err)?;
    for (name, c) in [
        ("connect", conn),
        ("compose", compose_common_cover(&c6, &c3, &c9, &mod_map(6, 3), &mod_map(9, 3)).map_err(err)?),
    ] {
        ensure!(c.relation.class_count() == 2, "{name}: {} classes", c.relation.class_count());
        ensure!(check_rsp(&c.graph, &c.relation).map_err(err)?.holds, "{name}: not RSP");
        ensure!(check_well_behaved(&c.graph, &c.relation).map_err(err)?.is_none(), "{name}: not well-behaved");
        if name == "compose" {
            let phi = c.phi_class.ok_or("compose: no layer class")?;
            let cover = build_cross_cover(&c.graph, &c.relation, phi, 0, c.offset).map_err(err)?;
            ensure!(is_isomorphic(&cover.source, &c6).map_err(err)?, "compose: first layer is not C6");
            ensure!(is_isomorphic(&cover.target, &c9).map_err(err)?, "compose: second layer is not C9");
            let f1 = classify_map(&cover.f1, &cover.graph, &cover.source).map_err(err)?;
            let f2 = classify_map(&cover.f2, &cover.graph, &cover.target).map_err(err)?;
            ensure!(f1.classification == MapClass::LocallyBijective, "compose: f1 is {:?}", f1.classification);
            ensure!(f2.classification == MapClass::LocallyBijective, "compose: f2 is {:?}", f2.classification);
            ensure!(is_isomorphic(&cover.graph, &cycle(18).unwrap()).map_err(err)?, "compose: common cover is not C18");
        }
    }
    Ok("both constructions well-behaved; the composed cross cover (C18) covers C6 and C9".into())
}

fn ac14() -> Outcome {
    let mut fixtures = rsp_fixtures();
    for (name, g) in [
        ("K23", complete_bipartite(2, 3).unwrap()),
        ("K5", complete(5).unwrap()),
        ("Q3-e", cube_minus_edge()),
    ] {
        for (i, f) in oracle_finest(&g, 12).map_err(err)?.into_iter().enumerate() {
            fixtures.push((format!("{name} finest #{i}"), g.clone(), f));
        }
    }
    let (mut merges, mut components) = (0, 0);
    let mut checked = 0;
    for (name, g, r) in &fixtures {
        if !check_rsp(g, r).map_err(err)?.holds {
            continue;
        }
        checked += 1;
        let k = r.class_count();
        ensure!(k <= g.min_degree().map_err(err)?, "{name}: {k} classes exceed the minimum degree");
        ensure!(check_class_cover(g, r).map_err(err)?, "{name}: a vertex misses a class");
        for a in 0..k {
            for b in a + 1..k {
                ensure!(check_rsp(g, &r.merge_classes(a, b)).map_err(err)?.holds, "{name}: merging {a},{b} breaks RSP");
                merges += 1;
            }
        }
        if k < 2 {
            continue;
        }
        for c in 0..k {
            let (h, s, _) = remove_class(g, r, c).map_err(err)?;
            for block in h.components().blocks() {
                let (comp, map) = h.induced_subgraph(block);
                if comp.edge_count() == 0 {
                    continue;
                }
                let sub = s.restrict(&map);
                ensure!(check_rsp(&comp, &sub).map_err(err)?.holds, "{name}: removing class {c} breaks RSP on a component");
                components += 1;
            }
        }
    }
    Ok(format!("{checked} RSP fixtures: {merges} merges and {components} components after removal stay RSP"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 14] = [
        (1, "finest relations lie between (tau+delta1)* and delta0*", ac1),
        (2, "K23-free graphs: algorithm, both bounds and oracle coincide", ac2),
        (3, "km relations: RSP, finest for m=5..7, refinable for m=4", ac3),
        (4, "K5 choice scripts reproduce both outcomes", ac4),
        (5, "product relations are RSP exactly when factors are", ac5),
        (6, "finest relations of Cartesian products are product relations", ac6),
        (7, "quotient by the relation partition is the product of class quotients", ac7),
        (8, "merged km(9) is equivalent to the K3 strong K3 product relation", ac8),
        (9, "C6/C9 cross cover is C18 covering both cycles", ac9),
        (10, "C6 long-chord self cover is C6 with shift by 3", ac10),
        (11, "well-behaved relations give equitable partitions", ac11),
        (12, "layer regularity holds and forbidden colorings are rejected", ac12),
        (13, "cover connections and common-cover composition", ac13),
        (14, "merging classes, class bound and class removal preserve RSP", ac14),
    ];
    let mut unexpected = 0;
    let mut passed = 0;
    for (id, title, run) in criteria {
        let start = std::time::Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let known = UNATTAINABLE.iter().find(|(n, _)| *n == id);
        match (&outcome, known) {
            (Ok(detail), None) => {
                passed += 1;
                println!("[PASS] AC-{id} {title}: {detail} ({secs:.2}s)");
            }
            (Ok(detail), Some(_)) => {
                passed += 1;
                unexpected += 1;
                println!("[PASS] AC-{id} {title}: {detail} ({secs:.2}s) [listed as unattainable, update the list]");
            }
            (Err(why), None) => {
                unexpected += 1;
                println!("[FAIL] AC-{id} {title}: {why} ({secs:.2}s)");
            }
            (Err(why), Some((_, analysis))) => {
                println!("[FAIL] AC-{id} {title}: {why} ({secs:.2}s)");
                println!("       known unattainable: {analysis}");
            }
        }
    }
    println!("acceptance: {passed}/14 passed");
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
