use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use graphprod_core::figures::Figure;
use graphprod_core::products::product_within;
use graphprod_core::reduction::trace_graph_isomorphism;
use graphprod_core::{
    are_isomorphic_within, class_g_check, decompose_within, edgelist, pad_to_class_g,
    ClassGEliminationOracle, CompositenessOracle, Decomposition, FactorSearchOracle, Graph,
    GraphError, ProductKind,
};
use serde::Serialize;
use serde_json::{json, Value};

mod bounds;

use bounds::Bounds;

#[derive(Parser)]
#[command(
    name = "graphprod",
    version,
    about = "Graph products, factorization and isomorphism"
)]
struct Cli {
    /// Emit one JSON run report instead of human-readable output.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a graph product of two edge-list files.
    Product {
        #[arg(long, value_enum)]
        kind: KindArg,
        left: PathBuf,
        right: PathBuf,
        /// Write the product here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether a graph is prime under the direct product.
    Factor { file: PathBuf },
    /// Decide whether two graphs are isomorphic.
    Iso {
        #[arg(long, value_enum, default_value = "direct")]
        mode: Mode,
        #[arg(long, value_enum, default_value = "factor-search")]
        oracle: OracleArg,
        left: PathBuf,
        right: PathBuf,
    },
    /// Check the five class-G properties, optionally padding the graph into the class.
    Classg {
        file: PathBuf,
        #[arg(long)]
        pad: bool,
        /// With --pad, write the padded graph here.
        #[arg(long, requires = "pad")]
        out: Option<PathBuf>,
    },
    /// Rebuild one of the counterexample figures and check its claims.
    Demo {
        #[arg(value_enum)]
        which: FigureArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Cartesian,
    Direct,
    Strong,
    Lexicographic,
}

impl From<KindArg> for ProductKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Cartesian => ProductKind::Cartesian,
            KindArg::Direct => ProductKind::Direct,
            KindArg::Strong => ProductKind::Strong,
            KindArg::Lexicographic => ProductKind::Lexicographic,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Direct,
    Reduction,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleArg {
    FactorSearch,
    ClassgElimination,
}

#[derive(Clone, Copy, ValueEnum)]
enum FigureArg {
    Fig2,
    Fig3,
}

impl From<FigureArg> for Figure {
    fn from(f: FigureArg) -> Self {
        match f {
            FigureArg::Fig2 => Figure::NonUniqueFactorization,
            FigureArg::Fig3 => Figure::NonD2Factor,
        }
    }
}

#[derive(Serialize)]
struct RunReport {
    command: &'static str,
    inputs: Vec<String>,
    outcome: Value,
    elapsed_ms: f64,
}

/// A failed run: an exit code and what to tell the user.
#[derive(Debug)]
struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        let (code, kind) = match e {
            GraphError::Parse { .. } => (2, "parse"),
            GraphError::Argument(_) => (2, "argument"),
            GraphError::Size { .. } => (3, "size"),
            GraphError::Precondition(_) | GraphError::NotClassG(_) => (4, "precondition"),
        };
        Failure {
            code,
            kind,
            message: e.to_string(),
        }
    }
}

impl Failure {
    fn io(path: &Path, e: std::io::Error) -> Self {
        Failure {
            code: 1,
            kind: "io",
            message: format!("{}: {e}", path.display()),
        }
    }
}

/// Result of a command: a human-readable rendering, the JSON outcome, and the
/// exit code for a completed run.
struct Done {
    text: String,
    outcome: Value,
    code: u8,
}

impl Done {
    fn ok(text: String, outcome: Value) -> Self {
        Done {
            text,
            outcome,
            code: 0,
        }
    }
}

struct Ctx {
    json: bool,
    bounds: Bounds,
}

impl Ctx {
    /// Informational output that is suppressed in JSON mode.
    fn log(&self, line: impl AsRef<str>) {
        if !self.json {
            eprintln!("{}", line.as_ref());
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::io(path, e))?;
    edgelist::parse(&text).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::io(path, e))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "YES"
    } else {
        "NO"
    }
}

fn cmd_product(
    ctx: &Ctx,
    kind: ProductKind,
    left: &Path,
    right: &Path,
    out: Option<&Path>,
) -> Result<Done, Failure> {
    let (g1, g2) = (read_graph(left)?, read_graph(right)?);
    let p = product_within(kind, &g1, &g2, ctx.bounds.product)?;
    let text = edgelist::write(&p);
    let human = match out {
        Some(path) => {
            write_file(path, &text)?;
            format!(
                "wrote {} product with {} nodes and {} edges to {}",
                kind,
                p.node_count(),
                p.edge_count(),
                path.display()
            )
        }
        None => text.trim_end().to_string(),
    };
    Ok(Done::ok(
        human,
        json!({
            "kind": kind,
            "nodes": p.node_count(),
            "edges": p.edge_count(),
            "graph": text,
            "written_to": out.map(|p| p.display().to_string()),
        }),
    ))
}

fn cmd_factor(ctx: &Ctx, file: &Path) -> Result<Done, Failure> {
    let g = read_graph(file)?;
    let done = match decompose_within(&g, ctx.bounds.factor)? {
        Decomposition::Trivial => Done::ok("trivial".into(), json!({ "verdict": "trivial" })),
        Decomposition::Prime => Done::ok("prime".into(), json!({ "verdict": "prime" })),
        Decomposition::Composite(w) => {
            let (a, b) = (w.factor_a(), w.factor_b());
            let labeling: Vec<String> = w
                .labeling()
                .iter()
                .enumerate()
                .map(|(v, (r, c))| format!("{v}->({r},{c})"))
                .collect();
            let text = format!(
                "composite\nfactor A ({} nodes):\n{}\nfactor B ({} nodes):\n{}\nlabeling: {}",
                a.node_count(),
                edgelist::write(a).trim_end(),
                b.node_count(),
                edgelist::write(b).trim_end(),
                labeling.join(" "),
            );
            Done::ok(
                text,
                json!({ "verdict": "composite", "witness": w.to_json() }),
            )
        }
    };
    Ok(done)
}

fn cmd_iso(
    ctx: &Ctx,
    mode: Mode,
    oracle: OracleArg,
    left: &Path,
    right: &Path,
) -> Result<Done, Failure> {
    let (g1, g2) = (read_graph(left)?, read_graph(right)?);
    match mode {
        Mode::Direct => {
            let n = g1.node_count().max(g2.node_count());
            let bound = ctx.bounds.iso_direct(n, |msg| ctx.log(msg));
            let w = are_isomorphic_within(&g1, &g2, bound)?;
            Ok(Done::ok(
                yes_no(w.is_some()).into(),
                json!({
                    "mode": "direct",
                    "isomorphic": w.is_some(),
                    "mapping": w.map(|w| w.into_mapping()),
                }),
            ))
        }
        Mode::Reduction => {
            let (name, oracle): (&str, Box<dyn CompositenessOracle>) = match oracle {
                OracleArg::FactorSearch => (
                    "factor-search",
                    Box::new(FactorSearchOracle {
                        max_nodes: ctx.bounds.oracle,
                    }),
                ),
                OracleArg::ClassgElimination => (
                    "classg-elimination",
                    Box::new(ClassGEliminationOracle {
                        iso_max_nodes: ctx.bounds.iso,
                    }),
                ),
            };
            let trace = trace_graph_isomorphism(&g1, &g2, oracle.as_ref())?;
            match (trace.paddings, trace.union_nodes) {
                (Some([(p1, d1), (p2, d2)]), Some(u)) => {
                    ctx.log(format!(
                        "padding 1: n = {}, p = {p1}, d = {d1}",
                        g1.node_count()
                    ));
                    ctx.log(format!(
                        "padding 2: n = {}, p = {p2}, d = {d2}",
                        g2.node_count()
                    ));
                    ctx.log(format!(
                        "oracle {name} on a {u}-node union: {}",
                        if trace.isomorphic {
                            "composite"
                        } else {
                            "prime"
                        }
                    ));
                }
                _ => ctx.log("node or edge counts differ; oracle not called"),
            }
            Ok(Done::ok(
                yes_no(trace.isomorphic).into(),
                json!({ "mode": "reduction", "oracle": name, "trace": trace }),
            ))
        }
    }
}

fn cmd_classg(file: &Path, pad: bool, out: Option<&Path>) -> Result<Done, Failure> {
    let g = read_graph(file)?;
    let report = class_g_check(&g);
    let mut lines = vec![format!(
        "{}: {}",
        if report.member {
            "member"
        } else {
            "non-member"
        },
        report
    )];
    for (name, holds) in report.properties() {
        lines.push(format!(
            "  {:<5} {name}",
            if holds { "true" } else { "false" }
        ));
    }
    let mut outcome = json!({ "report": report });
    if pad {
        let res = pad_to_class_g(&g)?;
        let padding = res.to_json();
        lines.push(format!(
            "padded: p = {}, d = {}, fan edges = {}, cycle edges = {}, loops on {:?}",
            padding.p,
            padding.d,
            padding.fan_edges.len(),
            padding.cycle_edges.len(),
            padding.loop_nodes
        ));
        if let Some(path) = out {
            write_file(path, &padding.padded_graph)?;
            lines.push(format!("wrote padded graph to {}", path.display()));
        }
        lines.push(serde_json::to_string(&padding).expect("serializable"));
        outcome["padding"] = serde_json::to_value(&padding).expect("serializable");
        outcome["padded_report"] = json!(class_g_check(&res.padded));
    }
    Ok(Done::ok(lines.join("\n"), outcome))
}

fn cmd_demo(which: Figure) -> Done {
    let claims = which.claims();
    let all = claims.iter().all(|c| c.pass);
    let mut lines: Vec<String> = claims
        .iter()
        .map(|c| {
            format!(
                "[{}] {} ({})",
                if c.pass { "PASS" } else { "FAIL" },
                c.statement,
                c.detail
            )
        })
        .collect();
    lines.push(format!(
        "{}: {}",
        which.name(),
        if all {
            "all claims hold"
        } else {
            "some claims failed"
        }
    ));
    Done {
        text: lines.join("\n"),
        outcome: json!({ "figure": which.name(), "claims": claims, "all_pass": all }),
        code: if all { 0 } else { 1 },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (name, inputs): (&'static str, Vec<&Path>) = match &cli.command {
        Command::Product { left, right, .. } => ("product", vec![left, right]),
        Command::Factor { file } => ("factor", vec![file]),
        Command::Iso { left, right, .. } => ("iso", vec![left, right]),
        Command::Classg { file, .. } => ("classg", vec![file]),
        Command::Demo { .. } => ("demo", vec![]),
    };
    let result = Bounds::from_env().and_then(|bounds| {
        let ctx = Ctx {
            json: cli.json,
            bounds,
        };
        match &cli.command {
            Command::Product {
                kind,
                left,
                right,
                out,
            } => cmd_product(&ctx, (*kind).into(), left, right, out.as_deref()),
            Command::Factor { file } => cmd_factor(&ctx, file),
            Command::Iso {
                mode,
                oracle,
                left,
                right,
            } => cmd_iso(&ctx, *mode, *oracle, left, right),
            Command::Classg { file, pad, out } => cmd_classg(file, *pad, out.as_deref()),
            Command::Demo { which } => Ok(cmd_demo((*which).into())),
        }
    });
    let (code, outcome, text) = match result {
        Ok(done) => (done.code, done.outcome, Ok(done.text)),
        Err(f) => (
            f.code,
            json!({ "error": { "kind": f.kind, "message": f.message, "exit_code": f.code } }),
            Err(f.message),
        ),
    };
    if cli.json {
        let report = RunReport {
            command: name,
            inputs: inputs.iter().map(|p| p.display().to_string()).collect(),
            outcome,
            elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("serializable")
        );
    } else {
        match text {
            Ok(t) => println!("{t}"),
            Err(msg) => eprintln!("error: {msg}"),
        }
    }
    ExitCode::from(code)
}
