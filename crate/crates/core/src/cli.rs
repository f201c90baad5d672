//! The `spectra` command-line tool.
//!
//! Exit codes: 0 success or pass, 1 theorem failed or inapplicable, 2 usage
//! or input error, 3 search budget exhausted.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::bounds::{verify_bound_with, BoundId, ConstructOptions, Status, TheoremReport};
use crate::coloring::{chromatic_index, color_bipartite_delta, color_vizing, validate_coloring, EdgeColoring};
use crate::construct::{Limits, TheoremId};
use crate::graph::{bipartition, gen_biregular, gen_complete_bipartite, gen_petersen, Graph, Side};
use crate::spectrum::{analyze, brute_force_eta, Mode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_THEOREM_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "spectra", version, about = "Interval and persistent-interval edge colorings")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Node budget for exact searches.
    #[arg(long, global = true, env = "SPECTRA_BUDGET", value_parser = clap::value_parser!(u64).range(1..))]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Petersen,
    CompleteBipartite,
    Biregular,
    Cycle,
    Path,
    Complete,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    Auto,
    Bipartite,
    Vizing,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    I,
    Pi,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SideArg {
    X,
    Y,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TheoremArg {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
}

impl From<TheoremArg> for TheoremId {
    fn from(t: TheoremArg) -> Self {
        match t {
            TheoremArg::T1 => TheoremId::T1,
            TheoremArg::T2 => TheoremId::T2,
            TheoremArg::T3 => TheoremId::T3,
            TheoremArg::T4 => TheoremId::T4,
            TheoremArg::T5 => TheoremId::T5,
            TheoremArg::T6 => TheoremId::T6,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a fixture graph in edge-list format.
    Generate {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Color a graph properly (König for bipartite graphs, else Misra–Gries).
    Color {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        method: Method,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Spectra and interval counts of a coloring.
    Analyze {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Exact chromatic index.
    ChromaticIndex {
        #[arg(long)]
        input: PathBuf,
    },
    /// Run one construction and report it against its bound.
    Construct {
        #[arg(long, value_enum, ignore_case = true)]
        theorem: TheoremArg,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        side: Option<SideArg>,
        #[arg(long)]
        x0: Option<usize>,
        /// Starting coloring for T4.
        #[arg(long)]
        coloring: Option<PathBuf>,
        /// Where to write the constructed coloring.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Exhaustive maximum of f_i or f_pi.
    BruteForce {
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long)]
        input: PathBuf,
        /// Where to write the witness coloring.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Verify theorem bounds on one graph or on every graph of a manifest.
    Verify {
        #[arg(long, value_enum, ignore_case = true)]
        theorem: Option<TheoremArg>,
        #[arg(long, required_unless_present = "manifest", conflicts_with = "manifest")]
        input: Option<PathBuf>,
        /// File with one graph path per line.
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl std::fmt::Display) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.to_string(),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    Graph::parse(&read(path)?).map_err(|e| usage(format!("{}: {} ({})", path.display(), e, e.code())))
}

fn read_coloring(path: &Path) -> Result<EdgeColoring, Failure> {
    EdgeColoring::parse(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))
}

/// Parse `args` and run; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| usage(format!("cannot write output: {e}")))
}

fn emit_json<S: Serialize>(out: &mut dyn Write, value: &S) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).expect("reports serialize");
    emit(out, &format!("{text}\n"))
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let limits = Limits {
        search_budget: cli.budget.unwrap_or(Limits::default().search_budget),
        ..Limits::default()
    };
    match &cli.command {
        Command::Generate {
            family,
            k,
            m,
            n,
            seed,
            output,
        } => {
            let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| usage(format!("--{flag} is required")));
            let g = match family {
                Family::Petersen => Ok(gen_petersen()),
                Family::CompleteBipartite => gen_complete_bipartite(need(*m, "m")?, need(*n, "n")?),
                Family::Biregular => {
                    let seed = seed.ok_or_else(|| usage("--seed is required for random generation"))?;
                    gen_biregular(need(*k, "k")?, need(*m, "m")?, seed)
                }
                Family::Cycle => Graph::cycle(need(*n, "n")?),
                Family::Path => Graph::path(need(*n, "n")?),
                Family::Complete => Graph::complete(need(*n, "n")?),
            }
            .map_err(usage)?;
            match output {
                Some(path) => write_file(path, &g.to_text())?,
                None => emit(out, &g.to_text())?,
            }
            Ok(EXIT_OK)
        }
        Command::Color { input, method, output } => {
            let g = read_graph(input)?;
            let c = match method {
                Method::Vizing => color_vizing(&g),
                Method::Bipartite => color_bipartite_delta(&g, &bipartition(&g).map_err(usage)?),
                Method::Auto => match bipartition(&g) {
                    Ok(b) => color_bipartite_delta(&g, &b),
                    Err(_) => color_vizing(&g),
                },
            };
            debug_assert!(validate_coloring(&g, &c).is_valid());
            if let Some(path) = output {
                write_file(path, &c.to_text())?;
            }
            if cli.json {
                emit_json(out, &json!({ "t": c.t(), "coloring": c.to_text() }))?;
            } else if output.is_none() {
                emit(out, &c.to_text())?;
            } else {
                emit(out, &format!("t = {}\n", c.t()))?;
            }
            Ok(EXIT_OK)
        }
        Command::Analyze { input, coloring } => {
            let g = read_graph(input)?;
            let c = read_coloring(coloring)?;
            let report = validate_coloring(&g, &c);
            if !report.is_valid() {
                if cli.json {
                    emit_json(out, &json!({ "valid": false, "validation": report }))?;
                }
                return Err(usage(format!("coloring is not valid: {report:?}")));
            }
            let spectra = analyze(&g, &c).map_err(usage)?;
            if cli.json {
                emit_json(out, &spectra)?;
            } else {
                let mut text = String::new();
                for s in &spectra.vertices {
                    let tag = if s.persistent_interval {
                        "persistent-interval"
                    } else if s.interval {
                        "interval"
                    } else {
                        "-"
                    };
                    text.push_str(&format!("{:>4}  d={:<3} {:?}  {tag}\n", s.vertex, s.degree, s.spectrum));
                }
                text.push_str(&format!("f_i = {}\nf_pi = {}\n", spectra.f_i, spectra.f_pi));
                emit(out, &text)?;
            }
            Ok(EXIT_OK)
        }
        Command::ChromaticIndex { input } => {
            let g = read_graph(input)?;
            match chromatic_index(&g, limits.search_budget) {
                Ok(chi) => {
                    if cli.json {
                        emit_json(out, &json!({ "chromatic_index": chi, "max_degree": g.max_degree() }))?;
                    } else {
                        emit(out, &format!("chromatic index = {chi}\n"))?;
                    }
                    Ok(EXIT_OK)
                }
                Err(e) => Err(Failure {
                    code: EXIT_BUDGET,
                    message: e.to_string(),
                }),
            }
        }
        Command::Construct {
            theorem,
            input,
            side,
            x0,
            coloring,
            output,
        } => {
            let g = read_graph(input)?;
            let opts = ConstructOptions {
                side: side.map(|s| match s {
                    SideArg::X => Side::X,
                    SideArg::Y => Side::Y,
                }),
                x0: *x0,
                phi0: coloring.as_deref().map(read_coloring).transpose()?,
            };
            let report = verify_bound_with(BoundId::for_theorem((*theorem).into()), &g, &limits, &opts);
            if let (Some(path), Some(text)) = (output, &report.coloring) {
                write_file(path, text)?;
            }
            print_report(out, cli.json, &report)?;
            Ok(exit_for(&report))
        }
        Command::BruteForce { mode, input, output } => {
            let g = read_graph(input)?;
            let mode = match mode {
                ModeArg::I => Mode::Interval,
                ModeArg::Pi => Mode::Persistent,
            };
            let r = brute_force_eta(&g, mode, cli.budget).map_err(usage)?;
            if let Some(path) = output {
                write_file(path, &r.witness.to_text())?;
            }
            if cli.json {
                emit_json(out, &r.to_json())?;
            } else {
                let rel = if r.exact { "=" } else { ">=" };
                emit(out, &format!("eta_{} {rel} {}\n", mode.label(), r.eta))?;
                if !r.exact {
                    emit(
                        out,
                        &format!("budget exhausted after {} nodes; value is a lower bound\n", r.nodes),
                    )?;
                }
                if output.is_none() {
                    emit(out, &r.witness.to_text())?;
                }
            }
            Ok(if r.exact { EXIT_OK } else { EXIT_BUDGET })
        }
        Command::Verify {
            theorem,
            input,
            manifest,
        } => {
            let theorems: Vec<TheoremId> = match theorem {
                Some(t) => vec![(*t).into()],
                None => vec![
                    TheoremId::T1,
                    TheoremId::T2,
                    TheoremId::T3,
                    TheoremId::T4,
                    TheoremId::T5,
                    TheoremId::T6,
                ],
            };
            if let Some(input) = input {
                let g = read_graph(input)?;
                let reports: Vec<TheoremReport> = theorems
                    .iter()
                    .map(|&t| verify_bound_with(BoundId::for_theorem(t), &g, &limits, &ConstructOptions::default()))
                    .collect();
                if let [single] = &reports[..] {
                    print_report(out, cli.json, single)?;
                    return Ok(exit_for(single));
                }
                let entries: Vec<BatchEntry> = reports
                    .iter()
                    .map(|r| BatchEntry {
                        input: input.clone(),
                        report: r,
                    })
                    .collect();
                return print_batch(out, cli.json, &entries);
            }
            let manifest = manifest.as_ref().expect("clap enforces --input or --manifest");
            let base = manifest.parent().unwrap_or(Path::new("."));
            let text = read(manifest)?;
            let paths: Vec<PathBuf> = text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(|l| base.join(l))
                .collect();
            let graphs: Vec<Graph> = paths.iter().map(|p| read_graph(p)).collect::<Result<_, _>>()?;
            let reports: Vec<(PathBuf, TheoremReport)> = paths
                .iter()
                .zip(&graphs)
                .flat_map(|(p, g)| {
                    theorems.iter().map(move |&t| {
                        (
                            p.clone(),
                            verify_bound_with(BoundId::for_theorem(t), g, &limits, &ConstructOptions::default()),
                        )
                    })
                })
                .collect();
            let entries: Vec<BatchEntry> = reports
                .iter()
                .map(|(p, r)| BatchEntry {
                    input: p.clone(),
                    report: r,
                })
                .collect();
            print_batch(out, cli.json, &entries)
        }
    }
}

#[derive(Serialize)]
struct BatchEntry<'a> {
    input: PathBuf,
    #[serde(flatten)]
    report: &'a TheoremReport,
}

fn exit_for(report: &TheoremReport) -> i32 {
    match report.status {
        Status::Passed => EXIT_OK,
        Status::BudgetExhausted => EXIT_BUDGET,
        Status::Failed | Status::Inapplicable => EXIT_THEOREM_FAILED,
    }
}

fn summary_line(r: &TheoremReport) -> String {
    let bound = r.bound.as_ref().map_or("-".to_string(), |b| b.value.to_string());
    match r.status {
        Status::Passed | Status::Failed if r.achieved.is_some() => format!(
            "{} [{:?}] {}: achieved {} (bound {bound}, f_{} = {}, t = {})",
            r.theorem,
            r.bound_id,
            status_word(r.status),
            r.achieved.unwrap_or(0),
            r.mode.label(),
            r.f_total.unwrap_or(0),
            r.t.unwrap_or(0),
        ),
        _ => format!(
            "{} [{:?}] {}: {} ({})",
            r.theorem,
            r.bound_id,
            status_word(r.status),
            r.reason.as_deref().unwrap_or(""),
            r.reason_code.unwrap_or("")
        ),
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Passed => "passed",
        Status::Failed => "FAILED",
        Status::Inapplicable => "inapplicable",
        Status::BudgetExhausted => "budget exhausted",
    }
}

fn print_report(out: &mut dyn Write, as_json: bool, r: &TheoremReport) -> Result<(), Failure> {
    if as_json {
        return emit_json(out, r);
    }
    let mut text = summary_line(r);
    text.push('\n');
    if let Some(r0) = &r.r0 {
        text.push_str(&format!("R0 = {r0:?}\n"));
    }
    emit(out, &text)
}

fn print_batch(out: &mut dyn Write, as_json: bool, entries: &[BatchEntry<'_>]) -> Result<i32, Failure> {
    if as_json {
        emit_json(out, &entries)?;
    } else {
        for e in entries {
            emit(out, &format!("{}: {}\n", e.input.display(), summary_line(e.report)))?;
        }
    }
    let failed = entries.iter().any(|e| e.report.status == Status::Failed);
    let exhausted = entries.iter().any(|e| e.report.status == Status::BudgetExhausted);
    Ok(if failed {
        EXIT_THEOREM_FAILED
    } else if exhausted {
        EXIT_BUDGET
    } else {
        EXIT_OK
    })
}
