//! The `dual-towers` command line.
//!
//! Exit codes: 0 when every check holds, 1 when a mathematical check fails,
//! 2 for usage or input errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use serde_json::json;

use crate::graph::GradedGraph;
use crate::group::catalog::by_name;
use crate::growth::{colored_rsk, rsk_insert, ColoredPermutation, Permutation};
use crate::lattice::{scale, wreath_graph, young_lattice, young_power};
use crate::tower::{build_bratteli, check_dual_tower, classify_rank2, verify_wreath_tower, Tower, TowerSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "dual-towers", version, about = "Dual graded graphs and differential towers of groups")]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// young, young-power:R, scaled:D or wreath:d1,d2,...
    #[arg(long, conflicts_with = "graph_file", required_unless_present = "graph_file")]
    pub graph: Option<String>,
    /// Graph JSON file.
    #[arg(long)]
    pub graph_file: Option<PathBuf>,
    /// Highest rank to build (required for named graphs).
    #[arg(long)]
    pub max_rank: Option<usize>,
}

#[derive(Debug, Args)]
pub struct TowerArgs {
    /// symmetric:N or wreath:GROUP:N
    #[arg(long, conflicts_with = "tower_file", required_unless_present = "tower_file")]
    pub tower: Option<String>,
    /// Tower JSON file: {"levels": [...], "embeddings": [[...], ...]}.
    #[arg(long)]
    pub tower_file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check DU - UD = rI on every rank below the top.
    CheckDual {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        r: u64,
    },
    /// Sum of e(x)^2 over each rank, against r^n n!.
    SumSquares {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        r: u64,
    },
    /// Robinson-Schensted insertion of a permutation in one-line notation.
    Rsk {
        #[arg(required = true)]
        word: Vec<String>,
    },
    /// Colored RSK of a word such as `3^0 1^1 2^0`.
    ColoredRsk {
        #[arg(long)]
        r: usize,
        #[arg(required = true)]
        word: Vec<String>,
    },
    /// Bratteli diagram of a tower, as DOT (or graph JSON with --json).
    Bratteli {
        #[command(flatten)]
        tower: TowerArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check Res Ind - Ind Res = rI and |G_n| = r^n n! on a tower.
    CheckTower {
        #[command(flatten)]
        tower: TowerArgs,
        #[arg(long)]
        r: u64,
    },
    /// Search the groups of order 2r^2 for rank-2 dual towers.
    ClassifyRank2 {
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 1)]
        parallel: usize,
    },
    /// Build H wr S_n up to a level and compare with the product of scaled
    /// Young lattices.
    VerifyWreath {
        #[arg(long)]
        base: String,
        #[arg(long)]
        max_level: usize,
    },
    /// Write a graph as DOT, with a JSON twin next to it.
    ExportDot {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Parses a built-in graph name.
pub fn named_graph(name: &str, max_rank: usize) -> anyhow::Result<GradedGraph> {
    let (kind, arg) = name.split_once(':').unwrap_or((name, ""));
    let number = |what: &str| -> anyhow::Result<u64> {
        arg.parse().with_context(|| format!("`{name}`: expected {what}"))
    };
    Ok(match kind {
        "young" if arg.is_empty() => young_lattice(max_rank),
        "young-power" => young_power(number("a positive power")? as usize, max_rank),
        "scaled" => scale(&young_lattice(max_rank), number("a positive scale")?)?,
        "wreath" => {
            let dims = arg
                .split(',')
                .map(|d| d.trim().parse::<u64>())
                .collect::<Result<Vec<_>, _>>()
                .with_context(|| format!("`{name}`: expected a list of degrees"))?;
            wreath_graph(&dims, max_rank)?
        }
        _ => bail!("unknown graph `{name}`"),
    })
}

fn load_graph(args: &GraphArgs) -> anyhow::Result<GradedGraph> {
    match (&args.graph, &args.graph_file) {
        (Some(name), _) => {
            let max_rank = args.max_rank.ok_or_else(|| anyhow!("--max-rank is required with --graph"))?;
            named_graph(name, max_rank)
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let graph = GradedGraph::from_json(&text)?;
            Ok(match args.max_rank {
                Some(m) => graph.truncate(m),
                None => graph,
            })
        }
        (None, None) => bail!("give --graph or --graph-file"),
    }
}

/// Parses `symmetric:N` or `wreath:GROUP:N`.
pub fn named_tower(name: &str) -> anyhow::Result<Tower> {
    let level = |s: &str| -> anyhow::Result<usize> {
        s.parse().with_context(|| format!("`{name}`: bad level `{s}`"))
    };
    if let Some(n) = name.strip_prefix("symmetric:") {
        return Ok(Tower::symmetric(level(n)?)?);
    }
    if let Some(rest) = name.strip_prefix("wreath:") {
        let (group, n) = rest
            .rsplit_once(':')
            .ok_or_else(|| anyhow!("`{name}`: expected wreath:GROUP:N"))?;
        return Ok(Tower::wreath(&by_name(group)?, level(n)?)?);
    }
    bail!("unknown tower `{name}`")
}

fn load_tower(args: &TowerArgs) -> anyhow::Result<Tower> {
    match (&args.tower, &args.tower_file) {
        (Some(name), _) => named_tower(name),
        (None, Some(path)) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            Ok(TowerSpec::from_json(&text)?.build()?)
        }
        (None, None) => bail!("give --tower or --tower-file"),
    }
}

fn power_factorial(r: u64, n: usize) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, k| acc * r * k)
}

fn to_json(value: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

/// Output of a verb: text for stdout and whether its checks held.
struct Outcome {
    text: String,
    ok: bool,
}

fn execute(cli: &Cli) -> anyhow::Result<Outcome> {
    let json = cli.json;
    match &cli.command {
        Command::CheckDual { graph, r } => {
            let g = load_graph(graph)?;
            let report = g.check_duality_full(*r)?;
            let text = if json {
                to_json(&json!({
                    "r": r,
                    "checked_ranks": report.checked_ranks,
                    "holds": report.holds(),
                    "violations": report.violations.iter().map(|v| json!({
                        "rank": v.rank, "x": v.x, "y": v.y,
                        "lhs": v.lhs.to_string(), "rhs": v.rhs.to_string(),
                    })).collect::<Vec<_>>(),
                }))
            } else {
                let mut s = format!(
                    "DU - UD = {r}I on ranks {:?}: {}\n",
                    report.checked_ranks,
                    if report.holds() { "holds" } else { "FAILS" }
                );
                for v in &report.violations {
                    s += &format!("rank {}: entry ({}, {}) is {}, expected {}\n", v.rank, v.x, v.y, v.lhs, v.rhs);
                }
                s
            };
            Ok(Outcome { text, ok: report.holds() })
        }
        Command::SumSquares { graph, r } => {
            let g = load_graph(graph)?;
            let mut rows = Vec::new();
            for n in 0..=g.max_rank() {
                let sum = g.sum_of_squares(n)?;
                let expected = power_factorial(*r, n);
                rows.push((n, sum.clone(), expected.clone(), sum == expected));
            }
            let ok = rows.iter().all(|row| row.3);
            let text = if json {
                to_json(&rows
                    .iter()
                    .map(|(n, s, e, h)| json!({"rank": n, "sum": s.to_string(), "expected": e.to_string(), "holds": h}))
                    .collect::<Vec<_>>())
            } else {
                let mut s = format!("{:>4}  {:>20}  {:>20}\n", "rank", "sum e(x)^2", "r^n n!");
                for (n, sum, e, h) in &rows {
                    s += &format!("{n:>4}  {sum:>20}  {e:>20}{}\n", if *h { "" } else { "  MISMATCH" });
                }
                s
            };
            Ok(Outcome { text, ok })
        }
        Command::Rsk { word } => {
            let sigma: Permutation = word.join(" ").parse()?;
            let (p, q) = rsk_insert(&sigma);
            let text = if json {
                to_json(&json!({"permutation": sigma.word(), "P": p.rows(), "Q": q.rows()}))
            } else {
                format!("P={p} Q={q}\n")
            };
            Ok(Outcome { text, ok: true })
        }
        Command::ColoredRsk { r, word } => {
            let w = ColoredPermutation::parse(&word.join(" "), *r)?;
            let pair = colored_rsk(&w);
            let text = if json {
                let labels = |path: &[crate::lattice::PartitionTuple]| -> Vec<String> {
                    path.iter().map(ToString::to_string).collect()
                };
                to_json(&json!({"word": w.to_string(), "r": r, "p_path": labels(&pair.p_path), "q_path": labels(&pair.q_path)}))
            } else {
                pair.to_string()
            };
            Ok(Outcome { text, ok: true })
        }
        Command::Bratteli { tower, out } => {
            let g = build_bratteli(&load_tower(tower)?)?;
            let body = if json { g.to_json() } else { g.to_dot() };
            match out {
                Some(path) => {
                    fs::write(path, &body).with_context(|| format!("writing {}", path.display()))?;
                    Ok(Outcome {
                        text: format!("wrote {}\n", path.display()),
                        ok: true,
                    })
                }
                None => Ok(Outcome { text: body, ok: true }),
            }
        }
        Command::CheckTower { tower, r } => {
            let report = check_dual_tower(&load_tower(tower)?, *r)?;
            let text = if json { to_json(&report) } else { format!("{report}\n") };
            Ok(Outcome { text, ok: report.passes() })
        }
        Command::ClassifyRank2 { r, parallel } => {
            let c = classify_rank2(*r, (*parallel).max(1))?;
            let ok = c.survivors.len() == 1 && c.survivors[0].matches_young_power;
            let text = if json {
                to_json(&c)
            } else {
                let mut s = String::new();
                for cand in &c.candidates {
                    s += &format!(
                        "{:<14} subgroup {:?}: {}\n",
                        cand.group,
                        cand.subgroup,
                        if cand.report.passes() { "passes" } else { "fails" }
                    );
                }
                s += &format!("survivors: {}\n", c.survivors.len());
                for sv in &c.survivors {
                    s += &format!(
                        "{} (Bratteli diagram {} (Y^{r})_[0,2])\n",
                        sv.group,
                        if sv.matches_young_power { "isomorphic to" } else { "NOT isomorphic to" }
                    );
                }
                s
            };
            Ok(Outcome { text, ok })
        }
        Command::VerifyWreath { base, max_level } => {
            let report = verify_wreath_tower(&by_name(base)?, *max_level)?;
            let text = if json {
                to_json(&report)
            } else {
                format!(
                    "base {} with degrees {:?}, levels 0..={}\n{}\nBratteli diagram matches the wreath graph: {}\n",
                    report.base,
                    report.degrees,
                    report.max_level,
                    report.duality,
                    if report.matches_wreath_graph { "yes" } else { "NO" }
                )
            };
            Ok(Outcome { text, ok: report.passes() })
        }
        Command::ExportDot { graph, out } => {
            let g = load_graph(graph)?;
            let twin = json_twin(out);
            fs::write(out, g.to_dot()).with_context(|| format!("writing {}", out.display()))?;
            fs::write(&twin, g.to_json()).with_context(|| format!("writing {}", twin.display()))?;
            Ok(Outcome {
                text: format!("wrote {} and {}\n", out.display(), twin.display()),
                ok: true,
            })
        }
    }
}

/// `graph.dot` -> `graph.json`; any other name gets `.json` appended.
pub fn json_twin(path: &Path) -> PathBuf {
    if path.extension().is_some_and(|e| e == "dot") {
        path.with_extension("json")
    } else {
        let mut s = path.as_os_str().to_owned();
        s.push(".json");
        PathBuf::from(s)
    }
}

/// Runs the command line, writing normal output to `out` and diagnostics to
/// `err`, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            let _ = write!(out, "{}", outcome.text);
            if outcome.ok {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_USAGE
        }
    }
}
