//! Command-line entry point. The binary target is a thin wrapper around
//! [`run`], which writes to injected handles so the whole surface is
//! testable in-process.
//!
//! Exit codes: 0 on success, 1 when a verification sweep reports
//! violations, 2 on usage errors.

use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::bounds::{bound_report, BoundReport};
use crate::codec::{self, OutputFormat};
use crate::covering;
use crate::error::DomainError;
use crate::families::FamilySpec;
use crate::generator;
use crate::graph::Graph;
use crate::harness::{self, CheckName, Corpus, SweepContext, SweepReport};
use crate::minors::{self, CeilingParam, OracleCaps};

#[derive(Parser)]
#[command(
    name = "degenlab",
    about = "Small-graph laboratory: degeneracy pairs, minor-monotone ceilings, and nu lower bounds",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate the canonical graph with degeneracy h whose degeneracy pair
    /// is right-minimal, optionally with the execution trace.
    Gen(GenArgs),
    /// Compute every applicable nu lower bound for a graph.
    Analyze(AnalyzeArgs),
    /// Compute a minor-monotone ceiling, optionally with a witness.
    Ceil(CeilArgs),
    /// Classify covering pairs and covering sums.
    Cover(CoverArgs),
    /// Build a named family graph.
    Construct(ConstructArgs),
    /// Run verification sweeps.
    Verify(VerifyArgs),
    /// Convert between graph formats.
    Convert(ConvertArgs),
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    h: usize,
    /// graph6, edges, or dot.
    #[arg(long, default_value = "edges")]
    format: String,
    /// Emit the graph and its per-iteration trace as one JSON object.
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Input file, or - for standard input (graph6 or edge list).
    #[arg(long)]
    input: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CeilArgs {
    /// delta, kappa, or d.
    #[arg(long)]
    param: String,
    #[arg(long)]
    input: String,
    /// Also print the minor-operation sequence and the witnessing minor.
    #[arg(long)]
    witness: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CoverArgs {
    #[arg(long)]
    n: u64,
    /// Classify the covering sum r.
    #[arg(long, conflicts_with_all = ["h", "k"])]
    r: Option<u64>,
    /// Classify the pair (h, k); requires --k.
    #[arg(long, requires = "k")]
    h: Option<u64>,
    #[arg(long, requires = "h")]
    k: Option<u64>,
}

#[derive(Args)]
struct ConstructArgs {
    /// Family spec such as path:4, matula:2, or figure1.
    spec: String,
    #[arg(long, default_value = "edges")]
    format: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check name, or "all".
    #[arg(long, default_value = "all")]
    check: String,
    /// Enumeration cap (per-graph checks top out at 7; generator cells
    /// default to 12).
    #[arg(long, conflicts_with = "corpus")]
    n_max: Option<usize>,
    /// graph6 corpus file for the per-graph checks.
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Write the JSON reports to this file (- for standard output).
    #[arg(long)]
    json: Option<String>,
}

#[derive(Args)]
struct ConvertArgs {
    #[arg(long)]
    input: String,
    /// graph6, edges, or dot.
    #[arg(long)]
    to: String,
}

/// Parses argv and dispatches; all output goes to the provided handles.
pub fn run(
    argv: &[String],
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let first = e.to_string();
                let hint = first.lines().next().unwrap_or("bad usage").to_string();
                let _ = writeln!(err, "usage error: {hint} (try --help)");
                return 2;
            }
            // --help / --version style output.
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    match dispatch(cli.cmd, stdin, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "usage error: {e} (try --help)");
            2
        }
    }
}

fn dispatch(cmd: Cmd, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32, String> {
    match cmd {
        Cmd::Gen(a) => gen_cmd(a, out),
        Cmd::Analyze(a) => analyze_cmd(a, stdin, out),
        Cmd::Ceil(a) => ceil_cmd(a, stdin, out),
        Cmd::Cover(a) => cover_cmd(a, out),
        Cmd::Construct(a) => construct_cmd(a, out),
        Cmd::Verify(a) => verify_cmd(a, out),
        Cmd::Convert(a) => convert_cmd(a, stdin, out),
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), String> {
    out.write_all(text.as_bytes()).map_err(|e| e.to_string())
}

fn parse_format(s: &str) -> Result<OutputFormat, String> {
    s.parse()
        .map_err(|_| format!("unknown format \"{s}\" (expected graph6, edges, or dot)"))
}

fn read_input(spec: &str, stdin: &mut dyn BufRead) -> Result<Graph, String> {
    let text = if spec == "-" {
        let mut buf = String::new();
        stdin.read_to_string(&mut buf).map_err(|e| e.to_string())?;
        buf
    } else {
        std::fs::read_to_string(spec).map_err(|e| format!("{spec}: {e}"))?
    };
    codec::parse_auto(&text).map_err(|e| e.to_string())
}

fn gen_cmd(a: GenArgs, out: &mut dyn Write) -> Result<i32, String> {
    let format = parse_format(&a.format)?;
    let (g, trace) = generator::generate(a.n, a.h).map_err(|e| e.to_string())?;
    if a.trace {
        let payload = json!({
            "n": a.n,
            "h": a.h,
            "graph6": codec::to_graph6(&g),
            "trace": trace_json(&trace),
        });
        emit(out, &format!("{}\n", serde_json::to_string_pretty(&payload).expect("serializable")))?;
    } else {
        emit(out, &codec::render(&g, format))?;
    }
    Ok(0)
}

fn trace_json(trace: &generator::GenTrace) -> serde_json::Value {
    json!({
        "i": trace.rows.iter().map(|r| r.i).collect::<Vec<_>>(),
        "s": trace.rows.iter().map(|r| r.chosen.iter().map(|v| v + 1).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "l": trace.rows.iter().map(|r| r.l_after.clone()).collect::<Vec<_>>(),
        "t": trace.rows.iter().map(|r| r.t).collect::<Vec<_>>(),
        "sigma": trace.rows.iter().map(|r| r.sigma).collect::<Vec<_>>(),
        "p": trace.rows.iter().map(|r| r.p).collect::<Vec<_>>(),
        "q": trace.rows.iter().map(|r| r.q).collect::<Vec<_>>(),
    })
}

fn analyze_cmd(a: AnalyzeArgs, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32, String> {
    let g = read_input(&a.input, stdin)?;
    let caps = OracleCaps::from_env();
    let oracle = minors::CeilingOracle::new();
    let report = bound_report(&g, &oracle, &caps);
    if a.json {
        emit(out, &format!("{}\n", serde_json::to_string_pretty(&report).expect("serializable")))?;
    } else {
        render_report(out, &report)?;
    }
    Ok(0)
}

fn render_report(out: &mut dyn Write, r: &BoundReport) -> Result<(), String> {
    emit(
        out,
        &format!("n = {}, m = {}, m(G^c) = {}\n", r.n, r.m, r.m_complement),
    )?;
    for e in &r.entries {
        let rel = if e.strict { ">" } else { ">=" };
        let tag = if e.conditional { "  [conditional]" } else { "" };
        emit(
            out,
            &format!(
                "  nu {} {:<12.6} {}{}\n",
                rel,
                e.value,
                serde_json::to_string(&e.source).expect("tag"),
                tag
            ),
        )?;
    }
    emit(
        out,
        &format!(
            "best nu lower bound: {} (source {}, {})\n",
            trim_float(r.best_nu_lower),
            serde_json::to_string(&r.best_source).expect("tag"),
            if r.best_strict { "strict" } else { "inclusive" }
        ),
    )?;
    emit(out, &format!("mr_nu upper bound: {}\n", trim_float(r.mr_nu_upper)))?;
    for c in &r.certificates {
        emit(
            out,
            &format!(
                "certificate {}: {} (delta = {}, girth = {})\n",
                c.kind,
                serde_json::to_string(&c.status).expect("tag"),
                c.delta,
                c.girth
            ),
        )?;
    }
    Ok(())
}

fn trim_float(x: f64) -> String {
    if x == x.trunc() && x.abs() < 1e15 {
        format!("{}", x as i64)
    } else {
        format!("{x:.6}")
    }
}

fn ceil_cmd(a: CeilArgs, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32, String> {
    let g = read_input(&a.input, stdin)?;
    let param: CeilingParam = a.param.parse().map_err(|e: DomainError| e.to_string())?;
    let caps = OracleCaps::from_env();
    let witness = minors::ceiling(&g, param, &caps).map_err(|e| e.to_string())?;
    let value_str = if witness.value.is_integer() {
        witness.value.numer().to_string()
    } else {
        format!("{}/{}", witness.value.numer(), witness.value.denom())
    };
    if a.json {
        let payload = json!({
            "param": a.param,
            "value": value_str,
            "value_float": *witness.value.numer() as f64 / *witness.value.denom() as f64,
            "ops": if a.witness {
                Some(witness.ops.iter().map(|o| o.to_string()).collect::<Vec<_>>())
            } else {
                None
            },
            "witness_graph6": if a.witness { Some(codec::to_graph6(&witness.witness)) } else { None },
        });
        emit(out, &format!("{}\n", serde_json::to_string_pretty(&payload).expect("serializable")))?;
    } else {
        emit(out, &format!("ceil-{} = {}\n", a.param, value_str))?;
        if a.witness {
            for op in &witness.ops {
                emit(out, &format!("  {op}\n"))?;
            }
            emit(out, &format!("witness: {}", codec::to_edge_list(&witness.witness)))?;
        }
    }
    Ok(0)
}

fn cover_cmd(a: CoverArgs, out: &mut dyn Write) -> Result<i32, String> {
    let payload = match (a.r, a.h, a.k) {
        (Some(r), None, None) => {
            let is_sum = covering::is_covering_sum(r, a.n).map_err(|e| e.to_string())?;
            let (lo, hi) = covering::ng_range(a.n).map_err(|e| e.to_string())?;
            let (even, odd) = covering::covering_sum_threshold(a.n);
            let minimal = covering::minimal_k_pair_for_sum(a.n, r)
                .ok()
                .map(|p| json!({"h": p.h, "k": p.k}));
            json!({
                "n": a.n,
                "r": r,
                "covering_sum": is_sum,
                "balanced_pair": {"h": r.div_ceil(2), "k": r / 2},
                "minimal_k_pair": minimal,
                "ng_range": {"lo": lo, "hi": hi},
                "thresholds": {"even": even, "odd": odd},
            })
        }
        (None, Some(h), Some(k)) => {
            let pair = covering::CoveringPair::new(h, k, a.n).map_err(|e| e.to_string())?;
            let class = covering::classify_pair(pair);
            json!({
                "n": a.n,
                "h": h,
                "k": k,
                "covering": class.is_covering,
                "left_minimal": class.left_minimal,
                "right_minimal": class.right_minimal,
            })
        }
        _ => return Err("pass either --r R or both --h H and --k K".into()),
    };
    emit(out, &format!("{}\n", serde_json::to_string_pretty(&payload).expect("serializable")))?;
    Ok(0)
}

fn construct_cmd(a: ConstructArgs, out: &mut dyn Write) -> Result<i32, String> {
    let format = parse_format(&a.format)?;
    let spec: FamilySpec = a.spec.parse().map_err(|e: DomainError| e.to_string())?;
    let g = spec.build().map_err(|e| e.to_string())?;
    emit(out, &codec::render(&g, format))?;
    Ok(0)
}

fn verify_cmd(a: VerifyArgs, out: &mut dyn Write) -> Result<i32, String> {
    let checks: Vec<CheckName> = if a.check == "all" {
        CheckName::all().to_vec()
    } else {
        vec![a.check.parse().map_err(|e: DomainError| e.to_string())?]
    };
    let ctx = SweepContext::new(OracleCaps::from_env());
    let run_all = |reports: &mut Vec<SweepReport>| -> Result<(), String> {
        for check in &checks {
            let corpus = match (&a.corpus, check.is_per_graph()) {
                (Some(path), true) => Corpus::File { path: path.clone() },
                (Some(_), false) => continue, // cell checks have no corpus form
                (None, true) => Corpus::Enumerate {
                    n_max: a.n_max.unwrap_or(harness::ENUMERATION_CAP),
                },
                (None, false) => Corpus::Enumerate {
                    n_max: a.n_max.unwrap_or(12),
                },
            };
            reports.push(harness::run_check(*check, &corpus, &ctx).map_err(|e| e.to_string())?);
        }
        Ok(())
    };
    let mut reports = Vec::new();
    match a.jobs {
        Some(jobs) if jobs >= 1 => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| e.to_string())?;
            pool.install(|| run_all(&mut reports))?;
        }
        _ => run_all(&mut reports)?,
    }
    let json_to_stdout = a.json.as_deref() == Some("-");
    let mut all_pass = true;
    for r in &reports {
        all_pass &= r.passed();
        if json_to_stdout {
            continue; // keep standard output pure JSON
        }
        emit(
            out,
            &format!(
                "check {:<20} tested={:<6} violations={:<3} skipped={} malformed={} elapsed={}ms [{}]\n",
                r.check,
                r.tested,
                r.violations.len(),
                r.skipped,
                r.malformed,
                r.elapsed_ms,
                if r.passed() { "PASS" } else { "FAIL" }
            ),
        )?;
        for v in &r.violations {
            emit(out, &format!("  violation {}: {}\n", v.graph6, v.details))?;
        }
    }
    if let Some(dest) = &a.json {
        let text = serde_json::to_string_pretty(&reports).expect("serializable");
        if dest == "-" {
            emit(out, &format!("{text}\n"))?;
        } else {
            std::fs::write(dest, text).map_err(|e| format!("{dest}: {e}"))?;
        }
    }
    Ok(if all_pass { 0 } else { 1 })
}

fn convert_cmd(a: ConvertArgs, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32, String> {
    let format = parse_format(&a.to)?;
    let g = read_input(&a.input, stdin)?;
    emit(out, &codec::render(&g, format))?;
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    fn run_cli(args: &[&str], stdin: &str) -> (i32, String, String) {
        let argv: Vec<String> = std::iter::once("degenlab".to_string())
            .chain(args.iter().map(|s| s.to_string()))
            .collect();
        let mut input = Cursor::new(stdin.as_bytes().to_vec());
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(&argv, &mut input, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn gen_emits_the_order14_edges() {
        let (code, out, _) = run_cli(&["gen", "--n", "14", "--h", "4", "--format", "edges"], "");
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "14 46");
        assert_eq!(lines.len(), 47);
        assert_eq!(lines[1], "1 2");
    }

    #[test]
    fn cover_pair_output() {
        let (code, out, _) = run_cli(&["cover", "--n", "9", "--h", "4", "--k", "2"], "");
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["covering"], true);
        assert_eq!(v["right_minimal"], true);
        assert_eq!(v["left_minimal"], false);
    }

    #[test]
    fn analyze_k5_from_stdin() {
        let k5 = codec::to_edge_list(&Graph::complete(5).unwrap());
        let (code, out, _) = run_cli(&["analyze", "--input", "-"], &k5);
        assert_eq!(code, 0);
        assert!(out.contains("best nu lower bound: 4"), "{out}");
    }

    #[test]
    fn usage_errors_exit_2() {
        let (code, _, err) = run_cli(&["gen", "--n", "4"], "");
        assert_eq!(code, 2);
        assert!(err.contains("usage error"));
        let (code, _, _) = run_cli(&["cover", "--n", "9"], "");
        assert_eq!(code, 2);
        let (code, _, _) = run_cli(&["cover", "--n", "9", "--r", "5", "--h", "3", "--k", "2"], "");
        assert_eq!(code, 2);
        let (code, _, _) = run_cli(&["gen", "--n", "4", "--h", "9"], "");
        assert_eq!(code, 2);
    }

    #[test]
    fn verify_single_check_passes() {
        let (code, out, _) = run_cli(&["verify", "--check", "lgprop", "--n-max", "5"], "");
        assert_eq!(code, 0);
        assert!(out.contains("[PASS]"));
    }

    #[test]
    fn convert_roundtrip() {
        let (code, g6, _) = run_cli(&["construct", "cycle:5", "--format", "graph6"], "");
        assert_eq!(code, 0);
        let (code, edges, _) = run_cli(&["convert", "--input", "-", "--to", "edges"], &g6);
        assert_eq!(code, 0);
        assert_eq!(edges.lines().next().unwrap(), "5 5");
        let (code, back, _) = run_cli(&["convert", "--input", "-", "--to", "graph6"], &edges);
        assert_eq!(code, 0);
        assert_eq!(back, g6);
    }

    #[test]
    fn gen_trace_is_json() {
        let (code, out, _) = run_cli(&["gen", "--n", "4", "--h", "1", "--trace"], "");
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["trace"]["t"].as_array().unwrap().len(), 3);
        assert_eq!(v["trace"]["sigma"][2], 3);
    }
}
