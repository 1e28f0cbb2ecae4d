use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rsp_core::format::{
    parse_graph, parse_map, parse_partition, parse_relation, to_dot, write_coords, write_graph, write_map,
    write_partition, write_relation, write_squares,
};
use rsp_core::generators::FIXTURE_NAMES;
use rsp_core::rsp::DEFAULT_SPLIT_BUDGET;
use rsp_core::*;

#[derive(Parser)]
#[command(name = "rsp", version, about = "Relaxed-square-property relations on finite graphs")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write file artifacts to `<prefix>.<ext>` instead of stdout.
    #[arg(long, global = true, value_name = "PREFIX")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List the squares (4-cycles) of a graph.
    Squares { graph: PathBuf },
    /// Compute a bounding or generated relation.
    Relation {
        #[arg(long, value_enum)]
        kind: RelationKind,
        graph: PathBuf,
        /// Choice script for `alg1`.
        #[arg(long)]
        script: Option<PathBuf>,
        /// Also emit a DOT drawing colored by class.
        #[arg(long)]
        dot: bool,
    },
    /// Test a property of a relation.
    Check {
        #[arg(long, value_enum)]
        what: CheckKind,
        graph: PathBuf,
        relation: Option<PathBuf>,
        /// Partition file for `equitable`; defaults to the relation partition.
        #[arg(long)]
        partition: Option<PathBuf>,
        /// Restrict `regularity` to one class.
        #[arg(long)]
        class: Option<usize>,
        /// Split budget for `finest`.
        #[arg(long, default_value_t = DEFAULT_SPLIT_BUDGET)]
        budget: u64,
    },
    /// Finest RSP-relations: exhaustive with `--oracle`, otherwise the
    /// default run of the merge algorithm checked for finestness.
    Finest {
        graph: PathBuf,
        #[arg(long)]
        oracle: bool,
        /// Edge limit for the oracle.
        #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
        limit: usize,
    },
    /// Relation partition, quotient graph and the product comparison.
    Quotient { graph: PathBuf, relation: PathBuf },
    /// Cover constructions.
    Cover(CoverArgs),
    /// Emit a catalog fixture or a product.
    Gen(GenArgs),
    /// Build a product of factor graphs.
    Product(ProductArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum RelationKind {
    Tau,
    Delta0,
    Delta1,
    Alg1,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Rsp,
    Wellbehaved,
    Finest,
    Equitable,
    Regularity,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoverMode {
    Cross,
    #[value(name = "self")]
    SelfCover,
    Connect,
    Compose,
}

#[derive(Args)]
struct CoverArgs {
    #[arg(long, value_enum)]
    mode: CoverMode,
    /// `cross`/`self`: GRAPH RELATION. `connect`: G G' with `--map`, or
    /// G1 G2 G with `--f1 --f2`. `compose`: H12 G2 H23 with `--f1 --f2`.
    #[arg(required = true)]
    inputs: Vec<PathBuf>,
    #[arg(long)]
    class: Option<usize>,
    #[arg(long)]
    x: Option<usize>,
    #[arg(long)]
    y: Option<usize>,
    #[arg(long)]
    map: Option<PathBuf>,
    #[arg(long)]
    f1: Option<PathBuf>,
    #[arg(long)]
    f2: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, required_unless_present = "product")]
    name: Option<String>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// Extra integer parameters, comma separated.
    #[arg(long, value_delimiter = ',')]
    k: Vec<usize>,
    #[arg(long, value_enum, conflicts_with = "name")]
    product: Option<KindArg>,
    /// Factor graphs for `--product`.
    factors: Vec<PathBuf>,
}

#[derive(Args)]
struct ProductArgs {
    #[arg(long, value_enum, default_value = "cartesian")]
    kind: KindArg,
    #[arg(required = true, num_args = 2..)]
    factors: Vec<PathBuf>,
    /// One relation file per factor; emits the product relation.
    #[arg(long, num_args = 1..)]
    relations: Vec<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Cartesian,
    Strong,
    Direct,
}

impl From<KindArg> for ProductKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Cartesian => ProductKind::Cartesian,
            KindArg::Strong => ProductKind::Strong,
            KindArg::Direct => ProductKind::Direct,
        }
    }
}

/// What a verb produced: a report, file artifacts and whether the tested
/// property held.
struct Outcome {
    holds: bool,
    text: String,
    report: Value,
    artifacts: Vec<(&'static str, String)>,
}

impl Outcome {
    fn new(text: String, report: Value) -> Self {
        Self {
            holds: true,
            text,
            report,
            artifacts: Vec::new(),
        }
    }

    fn verdict(mut self, holds: bool) -> Self {
        self.holds = holds;
        self
    }

    fn artifact(mut self, ext: &'static str, content: String) -> Self {
        self.artifacts.push((ext, content));
        self
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph> {
    parse_graph(&read(path)?).map_err(|e| match e {
        Error::Input(m) => Error::Input(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn load_relation(g: &Graph, path: &Path) -> Result<EdgeRelation> {
    parse_relation(g, &read(path)?)
}

fn load_map(path: &Path, n: usize) -> Result<Vec<usize>> {
    parse_map(&read(path)?, n)
}

fn need<T>(value: Option<T>, what: &str) -> Result<T> {
    value.ok_or_else(|| Error::Input(format!("missing {what}")))
}

fn edge_json(g: &Graph, e: EdgeId) -> Value {
    let (u, v) = g.edge(e);
    json!([u, v])
}

fn relation_json(g: &Graph, r: &EdgeRelation) -> Value {
    let classes: Vec<Vec<Value>> = r
        .classes()
        .iter()
        .map(|c| c.iter().map(|&e| edge_json(g, e)).collect())
        .collect();
    json!({ "class_count": r.class_count(), "labels": r.labels(), "classes": classes })
}

fn graph_json(g: &Graph) -> Value {
    json!({ "vertices": g.vertex_count(), "edges": g.edges() })
}

fn class_summary(g: &Graph, r: &EdgeRelation) -> String {
    let mut out = String::new();
    for (i, c) in r.classes().iter().enumerate() {
        let edges: Vec<String> = c
            .iter()
            .map(|&e| {
                let (u, v) = g.edge(e);
                format!("[{u},{v}]")
            })
            .collect();
        out.push_str(&format!("class {i}: {}\n", edges.join(" ")));
    }
    out
}

fn squares(path: &Path) -> Result<Outcome> {
    let g = load_graph(path)?;
    let sq = enumerate_squares(&g);
    let list: Vec<[usize; 4]> = sq.iter().map(|s| s.vertices).collect();
    let text = format!("{}squares: {}\n", write_squares(&sq), sq.len());
    Ok(Outcome::new(text, json!({ "count": sq.len(), "squares": list })).artifact("squares", write_squares(&sq)))
}

fn relation(kind: RelationKind, path: &Path, script: Option<&Path>, dot: bool) -> Result<Outcome> {
    let g = load_graph(path)?;
    let m = g.edge_count();
    let (name, r) = match kind {
        RelationKind::Tau => ("tau", transitive_closure(&compute_tau(&g), m)),
        RelationKind::Delta0 => ("delta0", upper_bound(&g)),
        RelationKind::Delta1 => ("delta1", transitive_closure(&compute_delta1(&g), m)),
        RelationKind::Alg1 => {
            let script = match script {
                Some(p) => Some(read(p)?.parse::<ChoiceScript>()?),
                None => None,
            };
            ("alg1", algorithm1(&g, script.as_ref())?)
        }
    };
    if script.is_some() && !matches!(kind, RelationKind::Alg1) {
        return Err(Error::Input("--script applies only to --kind alg1".into()));
    }
    let mut report = relation_json(&g, &r);
    report["kind"] = json!(name);
    let mut out = Outcome::new(write_relation(&g, &r), report).artifact("rel", write_relation(&g, &r));
    if dot {
        out.text.push_str(&to_dot(&g, Some(&r)));
        out = out.artifact("dot", to_dot(&g, Some(&r)));
    }
    Ok(out)
}

fn check(
    what: CheckKind,
    graph: &Path,
    rel: Option<&Path>,
    partition: Option<&Path>,
    class: Option<usize>,
    budget: u64,
) -> Result<Outcome> {
    let g = load_graph(graph)?;
    let r = match rel {
        Some(p) => Some(load_relation(&g, p)?),
        None => None,
    };
    let need_r = || need(r.clone(), "relation file");
    Ok(match what {
        CheckKind::Rsp => {
            let r = need_r()?;
            let rep = check_rsp(&g, &r)?;
            let (text, witness) = match rep.witness {
                None => ("rsp: holds\n".to_string(), Value::Null),
                Some((e, f)) => {
                    let (a, b) = (g.edge(e), g.edge(f));
                    (
                        format!("rsp: fails\nwitness: [{},{}] [{},{}]\n", a.0, a.1, b.0, b.1),
                        json!([edge_json(&g, e), edge_json(&g, f)]),
                    )
                }
            };
            Outcome::new(text, json!({ "check": "rsp", "holds": rep.holds, "witness": witness })).verdict(rep.holds)
        }
        CheckKind::Wellbehaved => {
            let r = need_r()?;
            match check_well_behaved(&g, &r)? {
                None => Outcome::new(
                    "well-behaved: holds\n".into(),
                    json!({ "check": "wellbehaved", "holds": true, "witness": null }),
                ),
                Some(w) => {
                    let mut text = format!(
                        "well-behaved: fails\nwitness: K2,3 x={} y={} a={} b={} c={}\n",
                        w.x, w.y, w.a, w.b, w.c
                    );
                    for ((u, v), c) in w.edge_classes {
                        text.push_str(&format!("  [{u},{v}] class {c}\n"));
                    }
                    Outcome::new(text, json!({ "check": "wellbehaved", "holds": false, "witness": w })).verdict(false)
                }
            }
        }
        CheckKind::Finest => {
            let r = need_r()?;
            match finest_counterexample(&g, &r, budget)? {
                None => Outcome::new("finest: holds\n".into(), json!({ "check": "finest", "holds": true, "witness": null })),
                Some(s) => Outcome::new(
                    format!("finest: fails\nwitness: finer RSP-relation\n{}", class_summary(&g, &s)),
                    json!({ "check": "finest", "holds": false, "witness": relation_json(&g, &s) }),
                )
                .verdict(false)
                .artifact("rel", write_relation(&g, &s)),
            }
        }
        CheckKind::Equitable => {
            let p = match (partition, &r) {
                (Some(p), _) => parse_partition(&read(p)?, g.vertex_count())?,
                (None, Some(r)) => relation_partition(&g, r)?,
                (None, None) => return Err(Error::Input("equitable needs --partition or a relation file".into())),
            };
            match is_equitable(&g, &p)? {
                Some(cert) => {
                    let rows: Vec<String> = cert
                        .matrix
                        .iter()
                        .map(|row| row.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
                        .collect();
                    Outcome::new(
                        format!("equitable: holds\n{}\n", rows.join("\n")),
                        json!({ "check": "equitable", "holds": true, "matrix": cert.matrix }),
                    )
                }
                None => Outcome::new(
                    "equitable: fails\n".into(),
                    json!({ "check": "equitable", "holds": false, "matrix": null }),
                )
                .verdict(false),
            }
        }
        CheckKind::Regularity => {
            let r = need_r()?;
            let classes: Vec<usize> = match class {
                Some(c) if c >= r.class_count() => {
                    return Err(Error::Input(format!("class {c} does not exist")))
                }
                Some(c) => vec![c],
                None => (0..r.class_count()).collect(),
            };
            let mut text = String::new();
            let mut per = Vec::new();
            for c in classes {
                let ok = check_layer_regularity(&g, &r, c)?;
                text.push_str(&format!("class {c}: {}\n", if ok { "regular" } else { "irregular" }));
                per.push(json!({ "class": c, "holds": ok }));
            }
            let holds = per.iter().all(|v| v["holds"] == json!(true));
            text.push_str(&format!("regularity: {}\n", if holds { "holds" } else { "fails" }));
            Outcome::new(text, json!({ "check": "regularity", "holds": holds, "classes": per })).verdict(holds)
        }
    })
}

fn finest(path: &Path, oracle: bool, limit: usize) -> Result<Outcome> {
    let g = load_graph(path)?;
    if oracle {
        let all = oracle_finest(&g, limit)?;
        let mut counts: Vec<usize> = all.iter().map(EdgeRelation::class_count).collect();
        counts.sort_unstable();
        counts.dedup();
        let mut text = format!("finest relations: {}\n", all.len());
        if let [c] = counts[..] {
            text.push_str(&format!("all finest relations have {c} classes\n"));
        } else {
            let list: Vec<String> = counts.iter().map(usize::to_string).collect();
            text.push_str(&format!("class counts: {}\n", list.join(" ")));
        }
        for (i, r) in all.iter().enumerate() {
            text.push_str(&format!("relation {i}:\n{}", class_summary(&g, r)));
        }
        let rels: Vec<Value> = all.iter().map(|r| relation_json(&g, r)).collect();
        let files: Vec<String> = all.iter().map(|r| write_relation(&g, r)).collect();
        return Ok(Outcome::new(
            text,
            json!({ "count": all.len(), "class_counts": counts, "relations": rels }),
        )
        .artifact("finest", files.join("---\n")));
    }
    let r = algorithm1(&g, None)?;
    let holds = verify_finest(&g, &r)?;
    let text = format!(
        "{}finest: {}\n",
        class_summary(&g, &r),
        if holds { "holds" } else { "fails" }
    );
    let mut report = relation_json(&g, &r);
    report["finest"] = json!(holds);
    Ok(Outcome::new(text, report).verdict(holds).artifact("rel", write_relation(&g, &r)))
}

fn quotient(graph: &Path, rel: &Path) -> Result<Outcome> {
    let g = load_graph(graph)?;
    let r = load_relation(&g, rel)?;
    let rep = quotient_product_check(&g, &r)?;
    let text = format!(
        "partition blocks: {}\nquotient: {} vertices, {} edges\nproduct of class quotients: {} vertices, {} edges\nisomorphic: {}\n",
        rep.partition.block_count(),
        rep.quotient.vertex_count(),
        rep.quotient.edge_count(),
        rep.product.vertex_count(),
        rep.product.edge_count(),
        rep.isomorphic
    );
    let factors: Vec<Value> = rep.factors.iter().map(graph_json).collect();
    let report = json!({
        "partition": rep.partition.labels(),
        "quotient": graph_json(&rep.quotient),
        "factors": factors,
        "product": graph_json(&rep.product),
        "isomorphic": rep.isomorphic,
    });
    Ok(Outcome::new(text, report)
        .verdict(rep.isomorphic)
        .artifact("part", write_partition(&rep.partition))
        .artifact("quotient.edges", write_graph(&rep.quotient)))
}

fn map_json(m: &VertexMap) -> Value {
    json!({ "classification": m.classification, "fiber_sizes": m.fiber_sizes })
}

fn cover(a: &CoverArgs) -> Result<Outcome> {
    match a.mode {
        CoverMode::Cross | CoverMode::SelfCover => {
            let [gp, rp] = &a.inputs[..] else {
                return Err(Error::Input("expected GRAPH RELATION".into()));
            };
            let g = load_graph(gp)?;
            let r = load_relation(&g, rp)?;
            let class = need(a.class, "--class")?;
            let x = need(a.x, "--x")?;
            let cover = match a.mode {
                CoverMode::Cross => build_cross_cover(&g, &r, class, x, need(a.y, "--y")?)?,
                _ => build_self_cover(&g, &r, class, x)?,
            };
            let f1 = classify_map(&cover.f1, &cover.graph, &cover.source)?;
            let f2 = classify_map(&cover.f2, &cover.graph, &cover.target)?;
            let mut text = format!(
                "cover: {} vertices, {} edges\nf1: {:?}\nf2: {:?}\n",
                cover.graph.vertex_count(),
                cover.graph.edge_count(),
                f1.classification,
                f2.classification
            );
            for (h, &(u, v)) in cover.vertices.iter().enumerate() {
                text.push_str(&format!("{h}: [{u},{v}]\n"));
            }
            let host_map = |f: Vec<usize>| write_map(&f);
            let report = json!({
                "graph": graph_json(&cover.graph),
                "vertices": cover.vertices,
                "source_vertices": cover.source_vertices,
                "target_vertices": cover.target_vertices,
                "f1": map_json(&f1),
                "f2": map_json(&f2),
            });
            Ok(Outcome::new(text, report)
                .artifact("cover.edges", write_graph(&cover.graph))
                .artifact("f1.map", host_map(cover.f1_host()))
                .artifact("f2.map", host_map(cover.f2_host())))
        }
        CoverMode::Connect | CoverMode::Compose => {
            let graphs: Vec<Graph> = a.inputs.iter().map(|p| load_graph(p)).collect::<Result<_>>()?;
            let conn = match (a.mode, &graphs[..]) {
                (CoverMode::Connect, [g, gp]) => {
                    let p = load_map(need(a.map.as_deref(), "--map")?, g.vertex_count())?;
                    connect_cover(g, gp, &p)?
                }
                (CoverMode::Connect, [g1, g2, g]) => {
                    let f1 = load_map(need(a.f1.as_deref(), "--f1")?, g.vertex_count())?;
                    let f2 = load_map(need(a.f2.as_deref(), "--f2")?, g.vertex_count())?;
                    connect_quasicover(g1, g2, g, &f1, &f2)?
                }
                (CoverMode::Compose, [h12, g2, h23]) => {
                    let p12 = load_map(need(a.f1.as_deref(), "--f1")?, h12.vertex_count())?;
                    let p23 = load_map(need(a.f2.as_deref(), "--f2")?, h23.vertex_count())?;
                    compose_common_cover(h12, g2, h23, &p12, &p23)?
                }
                _ => return Err(Error::Input("wrong number of graph files for this mode".into())),
            };
            let rsp = check_rsp(&conn.graph, &conn.relation)?.holds;
            let text = format!(
                "connection: {} vertices, {} edges, offset {}\nrsp: {}\n",
                conn.graph.vertex_count(),
                conn.graph.edge_count(),
                conn.offset,
                if rsp { "holds" } else { "fails" }
            );
            let report = json!({
                "graph": graph_json(&conn.graph),
                "relation": relation_json(&conn.graph, &conn.relation),
                "offset": conn.offset,
                "phi_class": conn.phi_class,
                "rsp": rsp,
            });
            Ok(Outcome::new(text, report)
                .artifact("edges", write_graph(&conn.graph))
                .artifact("rel", write_relation(&conn.graph, &conn.relation)))
        }
    }
}

fn gen(a: &GenArgs) -> Result<Outcome> {
    if let Some(kind) = a.product {
        return product(kind.into(), &a.factors, &[]);
    }
    let name = need(a.name.as_deref(), "--name")?;
    if !FIXTURE_NAMES.contains(&name) {
        return Err(Error::Input(format!(
            "unknown fixture '{name}' (known: {})",
            FIXTURE_NAMES.join(", ")
        )));
    }
    let mut params: Vec<usize> = a.m.into_iter().chain(a.n).collect();
    params.extend(&a.k);
    let fx = named_fixture(&FixtureSpec::new(name, &params))?;
    let mut text = write_graph(&fx.graph);
    let mut report = json!({
        "name": name,
        "params": params,
        "graph": graph_json(&fx.graph),
        "expected": fx.expected,
    });
    let mut out = Outcome::new(String::new(), Value::Null).artifact("edges", write_graph(&fx.graph));
    if let Some(r) = &fx.relation {
        text.push_str("---\n");
        text.push_str(&write_relation(&fx.graph, r));
        report["relation"] = relation_json(&fx.graph, r);
        out = out.artifact("rel", write_relation(&fx.graph, r));
    }
    if name == "k5_paper_orderings" {
        let scripts = k5_choice_scripts();
        for (i, s) in scripts.iter().enumerate() {
            let mut body = String::new();
            for st in &s.steps {
                let ((a1, b1), (a2, b2)) = st.pair;
                let [p, q, r, t] = st.square;
                body.push_str(&format!("{a1} {b1} {a2} {b2} {p} {q} {r} {t}\n"));
            }
            text.push_str(&format!("--- script {}\n{body}", i + 1));
            out = out.artifact(if i == 0 { "script1" } else { "script2" }, body);
        }
    }
    out.text = text;
    out.report = report;
    Ok(out)
}

fn product(kind: ProductKind, factor_paths: &[PathBuf], relation_paths: &[PathBuf]) -> Result<Outcome> {
    let factors: Vec<Graph> = factor_paths.iter().map(|p| load_graph(p)).collect::<Result<_>>()?;
    let p = build_product(kind, &factors)?;
    let mut text = write_graph(&p.graph);
    text.push_str("---\n");
    text.push_str(&write_coords(&p.coords));
    let mut report = json!({
        "kind": kind,
        "graph": graph_json(&p.graph),
        "coords": p.coords,
    });
    let mut out = Outcome::new(String::new(), Value::Null)
        .artifact("edges", write_graph(&p.graph))
        .artifact("coords", write_coords(&p.coords));
    if !relation_paths.is_empty() {
        if relation_paths.len() != factors.len() {
            return Err(Error::Input("give one relation file per factor".into()));
        }
        let rels: Vec<EdgeRelation> = factors
            .iter()
            .zip(relation_paths)
            .map(|(g, path)| load_relation(g, path))
            .collect::<Result<_>>()?;
        let r = product_relation(&p, &rels)?;
        text.push_str("---\n");
        text.push_str(&write_relation(&p.graph, &r));
        report["relation"] = relation_json(&p.graph, &r);
        out = out.artifact("rel", write_relation(&p.graph, &r));
    }
    out.text = text;
    out.report = report;
    Ok(out)
}

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Squares { graph } => squares(graph),
        Command::Relation { kind, graph, script, dot } => relation(*kind, graph, script.as_deref(), *dot),
        Command::Check {
            what,
            graph,
            relation,
            partition,
            class,
            budget,
        } => check(*what, graph, relation.as_deref(), partition.as_deref(), *class, *budget),
        Command::Finest { graph, oracle, limit } => finest(graph, *oracle, *limit),
        Command::Quotient { graph, relation } => quotient(graph, relation),
        Command::Cover(a) => cover(a),
        Command::Gen(a) => gen(a),
        Command::Product(a) => product(a.kind.into(), &a.factors, &a.relations),
    }
}

fn artifact_path(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn emit(common: &Common, outcome: &Outcome) -> Result<()> {
    let mut written = Vec::new();
    if let Some(prefix) = &common.out {
        for (ext, content) in &outcome.artifacts {
            let path = artifact_path(prefix, ext);
            fs::write(&path, content).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
            written.push(path.display().to_string());
        }
    }
    if common.json {
        let mut report = outcome.report.clone();
        if let Value::Object(map) = &mut report {
            map.insert("holds".into(), json!(outcome.holds));
            if !written.is_empty() {
                map.insert("artifacts".into(), json!(written));
            }
        }
        println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    } else if written.is_empty() {
        print!("{}", outcome.text);
    } else {
        for w in written {
            println!("wrote {w}");
        }
    }
    Ok(())
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Input(_) | Error::Contract(_) => 2,
        Error::Resource(_) => 3,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli).and_then(|o| emit(&cli.common, &o).map(|()| o.holds)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
