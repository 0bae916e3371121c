//! Command-line front end: `gen`, `spectrum`, `oracle`, `audit`, `mc` and
//! `enum` subcommands over the library, with a stable exit-code contract:
//!
//! - 0: success
//! - 1: usage error, missing file, malformed input
//! - 2: an audited inequality or attached claim failed beyond tolerance
//!
//! Every JSON artifact embeds the full invocation (tool version, argv, seed)
//! so re-running the recorded command reproduces the artifact byte for byte.
//! `PSEUDOGRAPH_SEED` supplies the seed when no `--seed` flag is given.

use crate::audit::{self, round_sig, AuditConfig, Verdict};
use crate::construct::{self, Construction};
use crate::graph::Graph;
use crate::io;
use crate::mc;
use crate::oracle::{self, HamiltonResult, OracleOutcome};
use crate::spectral;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;

pub const SEED_ENV_VAR: &str = "PSEUDOGRAPH_SEED";

#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub tool: &'static str,
    pub version: &'static str,
    pub argv: Vec<String>,
    pub seed: u64,
}

/// Parsed `--flag value` arguments plus positionals.
struct Flags {
    values: BTreeMap<String, String>,
    positional: Vec<String>,
}

impl Flags {
    fn parse(args: &[String], allowed: &[&str]) -> Result<Flags, String> {
        Flags::parse_with_switches(args, allowed, &[])
    }

    fn parse_with_switches(args: &[String], allowed: &[&str], switches: &[&str]) -> Result<Flags, String> {
        let mut values = BTreeMap::new();
        let mut positional = Vec::new();
        let mut i = 0;
        while i < args.len() {
            let a = &args[i];
            if let Some(name) = a.strip_prefix("--") {
                if switches.contains(&name) {
                    values.insert(name.to_string(), "true".to_string());
                    i += 1;
                } else if allowed.contains(&name) {
                    let value = args.get(i + 1).ok_or(format!("flag --{name} needs a value"))?;
                    values.insert(name.to_string(), value.clone());
                    i += 2;
                } else {
                    return Err(format!("unknown flag --{name}"));
                }
            } else {
                positional.push(a.clone());
                i += 1;
            }
        }
        Ok(Flags { values, positional })
    }

    fn get(&self, name: &str) -> Option<&str> {
        self.values.get(name).map(|s| s.as_str())
    }

    fn parse_num<T: std::str::FromStr>(&self, name: &str) -> Result<Option<T>, String> {
        match self.get(name) {
            None => Ok(None),
            Some(text) => text
                .parse()
                .map(Some)
                .map_err(|_| format!("flag --{name}: cannot parse {text:?}")),
        }
    }

    fn require_num<T: std::str::FromStr>(&self, name: &str) -> Result<T, String> {
        self.parse_num(name)?.ok_or(format!("missing required flag --{name}"))
    }

    fn seed(&self) -> Result<u64, String> {
        if let Some(s) = self.parse_num::<u64>("seed")? {
            return Ok(s);
        }
        match std::env::var(SEED_ENV_VAR) {
            Ok(text) => text.parse().map_err(|_| format!("{SEED_ENV_VAR}: cannot parse {text:?}")),
            Err(_) => Ok(0),
        }
    }
}

fn fmt12(x: f64) -> String {
    format!("{}", round_sig(x))
}

/// Entry point: dispatches a full argv (program name excluded) and returns
/// the process exit code. Output lines go to `out`; errors to stderr.
pub fn dispatch(args: &[String], out: &mut dyn std::io::Write) -> i32 {
    match dispatch_inner(args, out) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch_inner(args: &[String], out: &mut dyn std::io::Write) -> Result<i32, String> {
    let Some(command) = args.first() else {
        return Err(usage());
    };
    let rest = &args[1..];
    match command.as_str() {
        "gen" => cmd_gen(args, rest, out),
        "spectrum" => cmd_spectrum(args, rest, out),
        "oracle" => cmd_oracle(args, rest, out),
        "audit" => cmd_audit(args, rest, out),
        "mc" => cmd_mc(args, rest, out),
        "enum" => cmd_enum(args, rest, out),
        other => Err(format!("unknown subcommand {other:?}\n{}", usage())),
    }
}

fn usage() -> String {
    "usage: pseudograph <gen|spectrum|oracle|audit|mc|enum> ...\n\
     gen <family> [params] --out FILE       build a graph family\n\
     spectrum FILE [--json] [--out FILE]    eigenvalues and spectral gap\n\
     oracle <op> FILE [--budget N]          exact combinatorial oracles\n\
     audit FILE [--claims F] [--report F]   run every applicable audit\n\
     mc <giant|window|mst|degree|enum> --graph FILE [--trials N] [--seed S]\n\
     enum FILE --epsilon E                  exact-count sandwich checks"
        .to_string()
}

fn read_graph(path: &str) -> Result<Graph, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
    io::parse_edge_list(&text).map_err(|e| format!("{path}: {e}"))
}

fn write_file(path: &str, content: &str) -> Result<(), String> {
    std::fs::write(path, content).map_err(|e| format!("cannot write {path}: {e}"))
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

const GEN_FLAGS: &[&str] = &["q", "k", "t", "n", "d", "p", "h", "seed", "out", "factors", "set", "prob"];

fn cmd_gen(argv: &[String], args: &[String], out: &mut dyn std::io::Write) -> Result<i32, String> {
    let Some(family) = args.first() else {
        return Err("gen: missing family name".to_string());
    };
    let flags = Flags::parse(&args[1..], GEN_FLAGS)?;
    let seed = flags.seed()?;
    let built: Construction = match family.as_str() {
        "paley" => construct::paley(flags.require_num("q")?).map_err(|e| e.to_string())?,
        "gnp" => {
            let n = flags.require_num("n")?;
            let p: f64 = flags.require_num("prob")?;
            if !(0.0..=1.0).contains(&p) {
                return Err("gen gnp: --prob must lie in [0,1]".to_string());
            }
            construct::gnp(n, p, seed)
        }
        "regular" => construct::random_regular(flags.require_num("n")?, flags.require_num("d")?, seed)
            .map_err(|e| e.to_string())?,
        "inner-product" => construct::inner_product_graph(flags.require_num("k")?).map_err(|e| e.to_string())?,
        "dgt" => construct::dgt_graph(flags.require_num("q")?, flags.require_num("k")?).map_err(|e| e.to_string())?,
        "pg-polarity" => construct::pg_polarity(flags.require_num("q")?, flags.require_num("t")?)
            .map_err(|e| e.to_string())?,
        "power-residue" => construct::power_residue_cayley(flags.require_num("q")?, flags.require_num("k")?)
            .map_err(|e| e.to_string())?,
        "alon-triangle-free" => construct::alon_triangle_free(flags.require_num("k")?).map_err(|e| e.to_string())?,
        "alon-general" => {
            let cayley = construct::alon_general(flags.require_num("k")?, flags.require_num("h")?)
                .map_err(|e| e.to_string())?;
            if cayley.dimension > 18 {
                return Err(format!(
                    "gen alon-general: dimension {} too large to materialize (cap 18); use the library's implicit interface",
                    cayley.dimension
                ));
            }
            let graph = cayley.graph();
            let claims = construct::Claims {
                family: "alon_general".into(),
                degree: Some(cayley.generators.len()),
                ..Default::default()
            };
            Construction { graph, claims }
        }
        "lps" => construct::lps(flags.require_num("p")?, flags.require_num("q")?).map_err(|e| e.to_string())?,
        "norm" => construct::norm_graph(flags.require_num("p")?, flags.require_num("t")?)
            .map_err(|e| e.to_string())?,
        "cayley" => {
            let factors: Vec<u64> = parse_list(flags.get("factors").ok_or("gen cayley: missing --factors")?)?;
            let set: Vec<Vec<u64>> = flags
                .get("set")
                .ok_or("gen cayley: missing --set")?
                .split(',')
                .map(parse_tuple)
                .collect::<Result<_, _>>()?;
            construct::cayley_abelian(&factors, &set).map_err(|e| e.to_string())?
        }
        other => return Err(format!("gen: unknown family {other:?}")),
    };
    let edge_text = io::write_edge_list(&built.graph);
    match flags.get("out") {
        Some(path) => {
            write_file(path, &edge_text)?;
            let claims_path = Path::new(path).with_extension("claims.json");
            let mut claims_json = serde_json::to_value(&built.claims).map_err(|e| e.to_string())?;
            if let serde_json::Value::Object(map) = &mut claims_json {
                map.insert(
                    "run_config".into(),
                    serde_json::to_value(run_config(argv, seed)).map_err(|e| e.to_string())?,
                );
            }
            write_file(
                claims_path.to_str().unwrap(),
                &serde_json::to_string_pretty(&claims_json).map_err(|e| e.to_string())?,
            )?;
            writeln!(out, "wrote {} ({} vertices, {} edges) and {}", path, built.graph.n(), built.graph.m(), claims_path.display())
                .map_err(|e| e.to_string())?;
        }
        None => {
            write!(out, "{edge_text}").map_err(|e| e.to_string())?;
        }
    }
    Ok(EXIT_OK)
}

fn parse_list(text: &str) -> Result<Vec<u64>, String> {
    text.split(',')
        .map(|t| t.trim().parse().map_err(|_| format!("cannot parse {t:?} as integer")))
        .collect()
}

fn parse_tuple(text: &str) -> Result<Vec<u64>, String> {
    text.split(':')
        .map(|t| t.trim().parse().map_err(|_| format!("cannot parse {t:?} as integer")))
        .collect()
}

fn run_config(argv: &[String], seed: u64) -> RunConfig {
    RunConfig {
        tool: "pseudograph",
        version: env!("CARGO_PKG_VERSION"),
        argv: argv.to_vec(),
        seed,
    }
}

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

fn cmd_spectrum(argv: &[String], args: &[String], out: &mut dyn std::io::Write) -> Result<i32, String> {
    let flags = Flags::parse_with_switches(args, &["out", "tol", "seed"], &["json"])?;
    let Some(path) = flags.positional.first() else {
        return Err("spectrum: missing edge-list file".to_string());
    };
    let g = read_graph(path)?;
    let json_mode = flags.get("json").is_some();
    let dense_cap = spectral::DEFAULT_DENSE_CAP;

    #[derive(Serialize)]
    struct SpectrumArtifact {
        run_config: RunConfig,
        n: usize,
        m: usize,
        lambda_1: f64,
        lambda: f64,
        spectral_gap: f64,
        max_residual: f64,
        solver: &'static str,
        #[serde(skip_serializing_if = "Option::is_none")]
        eigenvalues: Option<Vec<f64>>,
    }

    let artifact = if g.n() <= dense_cap {
        let s = spectral::full_spectrum(&g).map_err(|e| e.to_string())?;
        SpectrumArtifact {
            run_config: run_config(argv, 0),
            n: g.n(),
            m: g.m(),
            lambda_1: round_sig(s.lambda_1()),
            lambda: round_sig(s.lambda()),
            spectral_gap: round_sig(s.spectral_gap()),
            max_residual: round_sig(s.max_residual()),
            solver: "dense-tridiagonal-ql",
            eigenvalues: Some(s.eigenvalues.iter().map(|&x| round_sig(x)).collect()),
        }
    } else {
        let tol = flags.parse_num::<f64>("tol")?.unwrap_or(1e-9);
        let e = spectral::extremal_lambda(&g, tol).map_err(|e| e.to_string())?;
        SpectrumArtifact {
            run_config: run_config(argv, 0),
            n: g.n(),
            m: g.m(),
            lambda_1: round_sig(e.lambda_1),
            lambda: round_sig(e.lambda),
            spectral_gap: round_sig(e.lambda_1 - e.lambda),
            max_residual: round_sig(e.residual),
            solver: "power-iteration",
            eigenvalues: None,
        }
    };

    let rendered = if json_mode {
        serde_json::to_string_pretty(&artifact).map_err(|e| e.to_string())?
    } else {
        let mut text = String::new();
        let _ = writeln!(text, "n {}  m {}", artifact.n, artifact.m);
        let _ = writeln!(text, "lambda_1 {}", fmt12(artifact.lambda_1));
        let _ = writeln!(text, "lambda {}", fmt12(artifact.lambda));
        let _ = writeln!(text, "spectral_gap {}", fmt12(artifact.spectral_gap));
        let _ = writeln!(text, "max_residual {:e}", artifact.max_residual);
        if let Some(eigs) = &artifact.eigenvalues {
            let line: Vec<String> = eigs.iter().map(|&x| fmt12(x)).collect();
            let _ = writeln!(text, "eigenvalues {}", line.join(" "));
        }
        text
    };
    match flags.get("out") {
        Some(p) => write_file(p, &rendered)?,
        None => write!(out, "{rendered}").map_err(|e| e.to_string())?,
    }
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------------------
// oracle
// ---------------------------------------------------------------------------

fn cmd_oracle(argv: &[String], args: &[String], out: &mut dyn std::io::Write) -> Result<i32, String> {
    let Some(op) = args.first() else {
        return Err("oracle: missing operation (alpha|chi|maxcut|hamilton|matching|spanning-trees|subgraph|turan|triangle-factor)".to_string());
    };
    let flags = Flags::parse(&args[1..], &["budget", "t", "pattern", "mode", "out", "seed"])?;
    let Some(path) = flags.positional.first() else {
        return Err(format!("oracle {op}: missing edge-list file"));
    };
    let g = read_graph(path)?;
    let budget = flags.parse_num::<u64>("budget")?.unwrap_or(oracle::DEFAULT_NODE_BUDGET);

    #[derive(Serialize)]
    struct OracleArtifact {
        run_config: RunConfig,
        operation: String,
        value: serde_json::Value,
        #[serde(skip_serializing_if = "Option::is_none")]
        witness: Option<serde_json::Value>,
        nodes_expanded: u64,
    }

    let (value, witness, nodes): (serde_json::Value, Option<serde_json::Value>, u64) = match op.as_str() {
        "alpha" => {
            let run = oracle::exact_alpha(&g, budget);
            match run.outcome {
                OracleOutcome::Exact((size, set)) => (size.into(), Some(serde_json::to_value(set).unwrap()), run.nodes_expanded),
                OracleOutcome::Unknown => ("unknown".into(), None, run.nodes_expanded),
            }
        }
        "chi" => {
            let run = oracle::exact_chi(&g, budget);
            match run.outcome {
                OracleOutcome::Exact((k, coloring)) => (k.into(), Some(serde_json::to_value(coloring).unwrap()), run.nodes_expanded),
                OracleOutcome::Unknown => ("unknown".into(), None, run.nodes_expanded),
            }
        }
        "maxcut" => {
            if g.n() > 24 {
                return Err("oracle maxcut: exact search supports n <= 24".to_string());
            }
            let (size, side) = oracle::exact_maxcut(&g);
            (size.into(), Some(serde_json::to_value(side).unwrap()), 1u64 << (g.n() - 1))
        }
        "hamilton" => {
            let mode = flags.get("mode").unwrap_or("exists");
            match mode {
                "count" => {
                    if g.n() > 16 {
                        return Err("oracle hamilton --mode count supports n <= 16".to_string());
                    }
                    (oracle::hamilton_count(&g).to_string().into(), None, 0)
                }
                "exists" => {
                    let run = oracle::hamilton_search(&g, budget);
                    match run.outcome {
                        OracleOutcome::Exact(HamiltonResult::Found(cycle)) => {
                            ("found".into(), Some(serde_json::to_value(cycle).unwrap()), run.nodes_expanded)
                        }
                        OracleOutcome::Exact(HamiltonResult::Absent) => ("absent".into(), None, run.nodes_expanded),
                        OracleOutcome::Unknown => ("unknown".into(), None, run.nodes_expanded),
                    }
                }
                other => return Err(format!("oracle hamilton: unknown mode {other:?}")),
            }
        }
        "matching" => {
            let mode = flags.get("mode").unwrap_or("exists");
            match mode {
                "exists" => {
                    let exists = oracle::has_perfect_matching(&g);
                    let probe = if g.n() <= 256 {
                        let seed = flags.seed()?;
                        Some(oracle::tutte_matrix_probe(&g, seed, 8))
                    } else {
                        None
                    };
                    if let Some(p) = probe {
                        if p != exists {
                            return Err("matching: randomized probe disagrees with the deterministic algorithm".to_string());
                        }
                    }
                    (exists.into(), None, 0)
                }
                "count" => {
                    if g.n() > 32 {
                        return Err("oracle matching --mode count supports n <= 32".to_string());
                    }
                    (oracle::count_perfect_matchings(&g).to_string().into(), None, 0)
                }
                other => return Err(format!("oracle matching: unknown mode {other:?}")),
            }
        }
        "spanning-trees" => (oracle::count_spanning_trees(&g).to_string().into(), None, 0),
        "subgraph" => {
            let pattern = pattern_graph(flags.get("pattern").unwrap_or("triangle"))?;
            let count = oracle::count_labeled_copies(&g, &pattern);
            (count.to_string().into(), None, 0)
        }
        "turan" => {
            let t = flags.parse_num::<usize>("t")?.unwrap_or(3);
            if g.m() > 128 {
                return Err("oracle turan supports m <= 128".to_string());
            }
            let run = oracle::turan_number(&g, t, budget);
            match run.outcome {
                OracleOutcome::Exact(bound) => (
                    serde_json::json!({ "lower": bound.lower, "upper": bound.upper }),
                    None,
                    run.nodes_expanded,
                ),
                OracleOutcome::Unknown => ("unknown".into(), None, run.nodes_expanded),
            }
        }
        "triangle-factor" => {
            if g.n() % 3 != 0 {
                return Err("oracle triangle-factor: n must be divisible by 3".to_string());
            }
            let run = oracle::triangle_factor(&g, budget);
            match run.outcome {
                OracleOutcome::Exact(Some(factor)) => {
                    ("exists".into(), Some(serde_json::to_value(factor).unwrap()), run.nodes_expanded)
                }
                OracleOutcome::Exact(None) => ("none".into(), None, run.nodes_expanded),
                OracleOutcome::Unknown => ("unknown".into(), None, run.nodes_expanded),
            }
        }
        other => return Err(format!("oracle: unknown operation {other:?}")),
    };

    let artifact = OracleArtifact {
        run_config: run_config(argv, flags.seed()?),
        operation: op.clone(),
        value,
        witness,
        nodes_expanded: nodes,
    };
    let rendered = serde_json::to_string_pretty(&artifact).map_err(|e| e.to_string())?;
    match flags.get("out") {
        Some(p) => write_file(p, &rendered)?,
        None => writeln!(out, "{rendered}").map_err(|e| e.to_string())?,
    }
    Ok(EXIT_OK)
}

fn pattern_graph(name: &str) -> Result<Graph, String> {
    match name {
        "edge" | "k2" => Ok(Graph::complete(2)),
        "triangle" | "k3" => Ok(Graph::complete(3)),
        "k4" => Ok(Graph::complete(4)),
        "k5" => Ok(Graph::complete(5)),
        "c4" => Ok(Graph::cycle(4)),
        "c5" => Ok(Graph::cycle(5)),
        "p3" => Ok(Graph::path(3)),
        "p4" => Ok(Graph::path(4)),
        other => Err(format!("unknown pattern {other:?} (edge|triangle|k4|k5|c4|c5|p3|p4)")),
    }
}

// ---------------------------------------------------------------------------
// audit
// ---------------------------------------------------------------------------

fn cmd_audit(argv: &[String], args: &[String], out: &mut dyn std::io::Write) -> Result<i32, String> {
    let flags = Flags::parse(args, &["claims", "report", "seed", "budget", "samples"])?;
    let Some(path) = flags.positional.first() else {
        return Err("audit: missing edge-list file".to_string());
    };
    let g = read_graph(path)?;
    let claims = match flags.get("claims") {
        Some(cpath) => {
            let text = std::fs::read_to_string(cpath).map_err(|e| format!("cannot read {cpath}: {e}"))?;
            Some(io::claims_from_json(&text).map_err(|e| format!("{cpath}: {e}"))?)
        }
        None => None,
    };
    let seed = flags.seed()?;
    let config = AuditConfig {
        seed,
        sample_budget: flags.parse_num::<usize>("samples")?.unwrap_or(2000),
        oracle_budget: flags.parse_num::<u64>("budget")?.unwrap_or(oracle::DEFAULT_NODE_BUDGET),
        ..AuditConfig::default()
    };
    let report = audit::full_report(&g, claims.as_ref(), &config);

    #[derive(Serialize)]
    struct ReportArtifact<'a> {
        run_config: RunConfig,
        #[serde(flatten)]
        report: &'a audit::AuditReport,
    }
    let artifact = ReportArtifact { run_config: run_config(argv, seed), report: &report };
    let rendered = serde_json::to_string_pretty(&artifact).map_err(|e| e.to_string())?;
    if let Some(p) = flags.get("report") {
        write_file(p, &rendered)?;
    }
    for f in &report.findings {
        writeln!(
            out,
            "{:<40} {:<18} lhs {} rhs {} slack {}",
            f.id,
            format!("{:?}", f.verdict),
            fmt12(f.lhs),
            fmt12(f.rhs),
            fmt12(f.slack)
        )
        .map_err(|e| e.to_string())?;
    }
    let failures = report.failures();
    if failures.is_empty() {
        writeln!(out, "all {} findings clean", report.findings.len()).map_err(|e| e.to_string())?;
        Ok(EXIT_OK)
    } else {
        writeln!(out, "{} finding(s) FAILED", failures.len()).map_err(|e| e.to_string())?;
        Ok(EXIT_VIOLATION)
    }
}

// ---------------------------------------------------------------------------
// mc
// ---------------------------------------------------------------------------

fn cmd_mc(argv: &[String], args: &[String], out: &mut dyn std::io::Write) -> Result<i32, String> {
    let Some(experiment) = args.first() else {
        return Err("mc: missing experiment (giant|window|mst|degree|enum)".to_string());
    };
    let flags = Flags::parse(&args[1..], &["graph", "trials", "seed", "grid", "out", "epsilon"])?;
    let Some(path) = flags.get("graph") else {
        return Err(format!("mc {experiment}: missing --graph"));
    };
    let g = read_graph(path)?;
    let trials = flags.parse_num::<usize>("trials")?.unwrap_or(100);
    let seed = flags.seed()?;

    let payload: serde_json::Value = match experiment.as_str() {
        "giant" => {
            let grid = parse_grid(flags.get("grid").unwrap_or("0.5:3.0:0.5"))?;
            let points = mc::giant_component_experiment(&g, &grid, trials, seed).map_err(|e| e.to_string())?;
            serde_json::to_value(points).unwrap()
        }
        "window" => {
            let grid = parse_grid(flags.get("grid").ok_or("mc window: missing --grid a:b:step")?)?;
            let window = mc::connectivity_window_experiment(&g, &grid, trials, seed).map_err(|e| e.to_string())?;
            serde_json::to_value(window).unwrap()
        }
        "mst" => {
            let (est, prediction) = mc::mst_experiment(&g, trials, seed).map_err(|e| e.to_string())?;
            serde_json::json!({ "estimate": est, "benchmark": prediction })
        }
        "degree" => {
            let grid = parse_grid(flags.get("grid").unwrap_or("-4:4:1"))?;
            let points = mc::degree_threshold_experiment(&g, &grid, trials, seed).map_err(|e| e.to_string())?;
            serde_json::to_value(points).unwrap()
        }
        "enum" => {
            let eps: f64 = flags.require_num("epsilon")?;
            let findings = mc::enumeration_bounds_check(&g, eps).map_err(|e| e.to_string())?;
            let failed = findings.iter().any(|f| f.verdict == Verdict::Fail);
            let value = serde_json::json!({
                "run_config": run_config(argv, seed),
                "findings": findings,
            });
            let rendered = serde_json::to_string_pretty(&value).map_err(|e| e.to_string())?;
            match flags.get("out") {
                Some(p) => write_file(p, &rendered)?,
                None => writeln!(out, "{rendered}").map_err(|e| e.to_string())?,
            }
            return Ok(if failed { EXIT_VIOLATION } else { EXIT_OK });
        }
        other => return Err(format!("mc: unknown experiment {other:?}")),
    };

    let artifact = serde_json::json!({
        "run_config": run_config(argv, seed),
        "experiment": experiment,
        "trials": trials,
        "result": payload,
    });
    let rendered = serde_json::to_string_pretty(&artifact).map_err(|e| e.to_string())?;
    match flags.get("out") {
        Some(p) => write_file(p, &rendered)?,
        None => writeln!(out, "{rendered}").map_err(|e| e.to_string())?,
    }
    Ok(EXIT_OK)
}

/// "a:b:step" (inclusive, step > 0) or a comma-separated list.
fn parse_grid(text: &str) -> Result<Vec<f64>, String> {
    if text.contains(':') {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("grid {text:?}: expected a:b:step"));
        }
        let a: f64 = parts[0].parse().map_err(|_| format!("grid start {:?}", parts[0]))?;
        let b: f64 = parts[1].parse().map_err(|_| format!("grid end {:?}", parts[1]))?;
        let step: f64 = parts[2].parse().map_err(|_| format!("grid step {:?}", parts[2]))?;
        if step <= 0.0 || b < a {
            return Err(format!("grid {text:?}: need a <= b and step > 0"));
        }
        let mut grid = Vec::new();
        let mut x = a;
        while x <= b + 1e-12 {
            grid.push(round_sig(x));
            x += step;
        }
        Ok(grid)
    } else {
        text.split(',')
            .map(|t| t.trim().parse().map_err(|_| format!("grid value {t:?}")))
            .collect()
    }
}

// ---------------------------------------------------------------------------
// enum
// ---------------------------------------------------------------------------

fn cmd_enum(argv: &[String], args: &[String], out: &mut dyn std::io::Write) -> Result<i32, String> {
    let flags = Flags::parse(args, &["epsilon", "out", "seed"])?;
    let Some(path) = flags.positional.first() else {
        return Err("enum: missing edge-list file".to_string());
    };
    let g = read_graph(path)?;
    let eps: f64 = flags.require_num("epsilon")?;
    let findings = mc::enumeration_bounds_check(&g, eps).map_err(|e| e.to_string())?;
    let failed = findings.iter().any(|f| f.verdict == Verdict::Fail);
    let artifact = serde_json::json!({
        "run_config": run_config(argv, flags.seed()?),
        "findings": findings,
    });
    let rendered = serde_json::to_string_pretty(&artifact).map_err(|e| e.to_string())?;
    match flags.get("out") {
        Some(p) => write_file(p, &rendered)?,
        None => writeln!(out, "{rendered}").map_err(|e| e.to_string())?,
    }
    Ok(if failed { EXIT_VIOLATION } else { EXIT_OK })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_cli(args: &[&str]) -> (i32, String) {
        let argv: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        let mut buf = Vec::new();
        let code = dispatch(&argv, &mut buf);
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn unknown_subcommand_is_usage_error() {
        let (code, _) = run_cli(&["frobnicate"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn gen_to_stdout() {
        let (code, out) = run_cli(&["gen", "paley", "--q", "13"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("13 39\n"));
    }

    #[test]
    fn gen_unknown_flag_rejected() {
        let (code, _) = run_cli(&["gen", "paley", "--qq", "13"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn spectrum_missing_file() {
        let (code, _) = run_cli(&["spectrum", "/nonexistent/file.el"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn grid_parsing() {
        assert_eq!(parse_grid("1:3:1").unwrap(), vec![1.0, 2.0, 3.0]);
        assert_eq!(parse_grid("0.5,2.0").unwrap(), vec![0.5, 2.0]);
        assert!(parse_grid("3:1:1").is_err());
        assert!(parse_grid("a:b:c").is_err());
    }
}
