//! `qaffine`: command-line front end for the verification routines.
//!
//! Reports are line oriented with a `PASS`/`FAIL` prefix on every verdict;
//! `--json` switches to one JSON document per invocation. Exit status is 0
//! when every check passes, 1 when one fails and 2 on a usage error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use qaffine::acceptance;
use qaffine::cluster::{verify_kr_correspondence, MutationRun};
use qaffine::loopalg::{LatticePoint, LoopPolynomial};
use qaffine::paths::{enumerate_paths, q_character};
use qaffine::rmatrix::{check_regularity, check_unitarity, check_ybe, fundamental_r, YbeMode};
use qaffine::sl2eval::{drinfeld_polynomial, loop_weight, q_character_closed, EvalModule};
use qaffine::snakes::Snake;
use qaffine::tsys::{extended_t_system, t_system};

#[derive(Parser, Debug)]
#[command(name = "qaffine", version, about = "Exact q-character and R-matrix computations for quantum affine sl_{l+1}")]
struct Cli {
    /// Emit a single JSON document instead of text lines.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// q-character of a snake module via the path formula.
    Qchar {
        /// Snake as comma-separated `i:k` pairs, e.g. `1:0,2:3`.
        #[arg(long, allow_hyphen_values = true)]
        snake: String,
        #[arg(long)]
        rank: u32,
    },
    /// Path enumeration.
    Paths {
        #[command(subcommand)]
        action: PathsAction,
    },
    /// Evaluation modules of quantum affine sl_2.
    Sl2 {
        #[command(subcommand)]
        action: Sl2Action,
    },
    /// The T-system for W_i^(r)(q^k).
    Tsys {
        #[arg(long = "i")]
        node: i32,
        #[arg(long = "k", allow_hyphen_values = true)]
        spectral: i32,
        #[arg(long = "r")]
        level: u32,
        #[arg(long)]
        rank: u32,
    },
    /// The extended T-system of a prime snake.
    ExtTsys {
        #[arg(long, allow_hyphen_values = true)]
        snake: String,
        #[arg(long)]
        rank: u32,
    },
    /// Rounds of the mutation sequence S and the KR correspondence check.
    ClusterRun {
        #[arg(long)]
        rank: u32,
        #[arg(long)]
        depth: u32,
        #[arg(long)]
        rounds: u32,
        /// Write the final seed as JSON to this file.
        #[arg(long)]
        dump_seed: Option<PathBuf>,
    },
    /// Yang-Baxter equation, regularity and unitarity of the R-matrix.
    YbeCheck {
        #[arg(long)]
        rank: u32,
        #[arg(long, default_value = "exact")]
        mode: YbeMode,
        /// Print the nonzero matrix entries.
        #[arg(long)]
        dump: bool,
    },
    /// Runs the full acceptance suite.
    Selftest,
}

#[derive(Subcommand, Debug)]
enum PathsAction {
    /// Every path starting at `i:k`, with corners and monomial.
    Dump {
        #[arg(allow_hyphen_values = true)]
        point: String,
        #[arg(long)]
        rank: u32,
    },
}

#[derive(Subcommand, Debug)]
enum Sl2Action {
    /// Dimension, Drinfeld polynomial, loop-weights and q-character of
    /// V^(r)(q^s).
    Info {
        #[arg(long = "r")]
        r: u32,
        #[arg(long = "s", allow_hyphen_values = true)]
        s: i64,
    },
}

/// Outcome of a subcommand: text lines, the JSON form, and the verdict.
struct Report {
    lines: Vec<String>,
    json: Value,
    passed: bool,
}

impl Report {
    fn info(lines: Vec<String>, json: Value) -> Self {
        Self {
            lines,
            json,
            passed: true,
        }
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn run(command: Command) -> qaffine::Result<Report> {
    match command {
        Command::Qchar { snake, rank } => {
            let s = Snake::parse(&snake, rank)?;
            let chi = q_character(&s)?;
            Ok(Report::info(
                vec![chi.to_string()],
                json!({ "snake": s.to_string(), "character": chi.to_json() }),
            ))
        }
        Command::Paths {
            action: PathsAction::Dump { point, rank },
        } => {
            let s = Snake::parse(&point, rank)?;
            let [p] = s.points() else {
                return Err(qaffine::Error::Parse(format!("expected a single point i:k, got `{point}`")));
            };
            let paths = enumerate_paths(p.i, p.k, rank)?;
            let mut lines = Vec::new();
            let mut items = Vec::new();
            for path in paths.iter() {
                let (upper, lower) = path.corners();
                let fmt_points = |v: &[LatticePoint]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ");
                lines.push(format!(
                    "{path} upper [{}] lower [{}] {}",
                    fmt_points(&upper),
                    fmt_points(&lower),
                    path.monomial()
                ));
                let pairs = |v: &[LatticePoint]| v.iter().map(|c| json!([c.i, c.k])).collect::<Vec<_>>();
                items.push(json!({
                    "heights": path.heights(),
                    "upper_corners": pairs(&upper),
                    "lower_corners": pairs(&lower),
                    "monomial": path.monomial().to_json(),
                }));
            }
            Ok(Report::info(lines, json!({ "origin": [p.i, p.k], "rank": rank, "paths": items })))
        }
        Command::Sl2 {
            action: Sl2Action::Info { r, s },
        } => {
            let m = EvalModule::new(r, s);
            let drinfeld = drinfeld_polynomial(m)?;
            let weights = (0..=r).map(|k| loop_weight(m, k)).collect::<qaffine::Result<Vec<_>>>()?;
            let chi = q_character_closed(m)?;
            let mut lines = vec![
                format!("module {m}"),
                format!("dimension {}", m.dim()),
                format!("drinfeld {drinfeld}"),
            ];
            for (k, w) in weights.iter().enumerate() {
                lines.push(format!("weight v_{k} {w}"));
            }
            lines.push(format!("qchar {chi}"));
            Ok(Report::info(
                lines,
                json!({
                    "r": r,
                    "s": s,
                    "dimension": m.dim(),
                    "drinfeld": drinfeld.to_json(),
                    "loop_weights": weights.iter().map(|w| w.to_json()).collect::<Vec<_>>(),
                    "character": chi.to_json(),
                }),
            ))
        }
        Command::Tsys {
            node,
            spectral,
            level,
            rank,
        } => {
            let rep = t_system(node, spectral, level, rank)?;
            Ok(identity_report(
                format!("T-system i={node} k={spectral} r={level} rank={rank}"),
                &rep.lhs,
                &rep.rhs,
                json!({}),
            ))
        }
        Command::ExtTsys { snake, rank } => {
            let s = Snake::parse(&snake, rank)?;
            let rep = extended_t_system(&s)?;
            let extra = json!({
                "snake": s.to_string(),
                "neighbours": [rep.x.to_string(), rep.y.to_string()],
            });
            let mut out = identity_report(
                format!("extended T-system {s} rank={rank}"),
                &rep.identity.lhs,
                &rep.identity.rhs,
                extra,
            );
            out.lines.insert(0, format!("neighbours X={} Y={}", rep.x, rep.y));
            Ok(out)
        }
        Command::ClusterRun {
            rank,
            depth,
            rounds,
            dump_seed,
        } => cluster_run(rank, depth, rounds, dump_seed),
        Command::YbeCheck { rank, mode, dump } => {
            let ybe = check_ybe(rank, mode)?;
            let regular = check_regularity(rank)?;
            let unitary = check_unitarity(rank)?;
            let mut lines = Vec::new();
            if dump {
                let r = fundamental_r(rank)?;
                lines.extend(r.to_string().lines().map(String::from));
            }
            let points = if mode == YbeMode::Sampled {
                format!(" at {} points", ybe.points)
            } else {
                String::new()
            };
            lines.push(format!("{} yang-baxter rank={rank} mode={mode}{points}", verdict(ybe.holds)));
            lines.push(format!("{} regularity R(1) = P", verdict(regular)));
            let factor = unitary.factor.as_ref().map(|f| f.to_string());
            lines.push(format!(
                "{} unitarity factor {}",
                verdict(unitary.holds()),
                factor.clone().unwrap_or_else(|| "none".into())
            ));
            let passed = ybe.holds && regular && unitary.holds();
            Ok(Report {
                lines,
                json: json!({
                    "rank": rank,
                    "mode": mode.to_string(),
                    "yang_baxter": ybe.holds,
                    "points": ybe.points,
                    "regularity": regular,
                    "unitarity_factor": factor,
                    "passed": passed,
                }),
                passed,
            })
        }
        Command::Selftest => {
            let results = acceptance::run_all();
            let passed = results.iter().all(|r| r.passed());
            let lines = results.iter().map(|r| r.to_string()).collect();
            let json = results
                .iter()
                .map(|r| {
                    json!({
                        "criterion": r.id,
                        "title": r.title,
                        "passed": r.passed(),
                        "seconds": r.elapsed.as_secs_f64(),
                        "budget_seconds": r.budget.as_secs_f64(),
                        "detail": r.detail,
                    })
                })
                .collect();
            Ok(Report { lines, json, passed })
        }
    }
}

fn identity_report(title: String, lhs: &LoopPolynomial, rhs: &LoopPolynomial, mut extra: Value) -> Report {
    let passed = lhs == rhs;
    extra["lhs"] = lhs.to_json();
    extra["rhs"] = rhs.to_json();
    extra["passed"] = json!(passed);
    Report {
        lines: vec![
            format!("lhs {lhs}"),
            format!("rhs {rhs}"),
            format!("{} {title}", verdict(passed)),
        ],
        json: extra,
        passed,
    }
}

fn cluster_run(rank: u32, depth: u32, rounds: u32, dump_seed: Option<PathBuf>) -> qaffine::Result<Report> {
    if let Some(path) = &dump_seed {
        let mut run = MutationRun::new(rank, depth)?;
        run.run_rounds(rounds)?;
        let text = serde_json::to_string_pretty(&run.seed_json()).expect("JSON values serialize");
        fs::write(path, text + "\n").map_err(|e| qaffine::Error::Invalid(format!("{}: {e}", path.display())))?;
    }
    let report = verify_kr_correspondence(rank, depth, rounds)?;
    let mut lines = Vec::new();
    for (t, c) in report.rounds_checked.iter().enumerate() {
        lines.push(format!("{} round {} quiver restored for r >= {}", verdict(c.restored), t + 1, c.floor));
    }
    let mut vertices = Vec::new();
    for c in &report.vertices {
        lines.push(format!(
            "{:<5} vertex {} W_{}^({})(q^{}) {} ({} terms)",
            match c.status {
                qaffine::cluster::VertexStatus::Match => "PASS",
                qaffine::cluster::VertexStatus::Mismatch => "FAIL",
                _ => "SKIP",
            },
            c.vertex,
            c.vertex.i,
            c.level,
            c.spectral,
            c.status,
            c.terms
        ));
        vertices.push(json!({
            "vertex": [c.vertex.i, c.vertex.k],
            "level": c.level,
            "spectral": c.spectral,
            "status": c.status.to_string(),
            "terms": c.terms,
        }));
    }
    let passed = report.passed();
    lines.push(format!(
        "{} KR correspondence rank={rank} depth={depth} rounds={rounds}: {} stable interior vertices",
        verdict(passed),
        report.stable_count()
    ));
    Ok(Report {
        lines,
        json: json!({
            "rank": rank,
            "depth": depth,
            "rounds": rounds,
            "rounds_checked": report
                .rounds_checked
                .iter()
                .map(|c| json!({ "floor": c.floor, "restored": c.restored }))
                .collect::<Vec<_>>(),
            "vertices": vertices,
            "passed": passed,
        }),
        passed,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli.command) {
        Ok(report) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&report.json).expect("JSON values serialize"));
            } else {
                for line in &report.lines {
                    println!("{line}");
                }
            }
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
