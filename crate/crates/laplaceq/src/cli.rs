//! Argument grammar and command dispatch.

use std::f64::consts::TAU;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use laplaceq_core::density::density_matrix;
use laplaceq_core::explore::{conjecture_1_report, conjecture_2_report, explore};
use laplaceq_core::verify::{reproduce_counterexample, sweeps_for, TheoremId};
use laplaceq_core::weighted::{
    admissible_phase_set, check_triangle_condition, grid_scan, TrianglePhases, DEFAULT_TOLERANCE,
};
use laplaceq_core::{
    closed_form_spectrum, entropy, locc_verdict_pair, numeric_spectrum, Family, Graph, Rational,
    Spectrum,
};
use serde_json::{json, Value};

use crate::csv_export;
use crate::error::{AppError, AppResult, Context};
use crate::graph_json::parse_graph;
use crate::parallel::{run_sweep, thread_cap};
use crate::phases::parse_phases;
use crate::report::{self, render};

pub const DEFAULT_N_MAX: usize = 50;

const ALL_THEOREMS: [TheoremId; 7] = [
    TheoremId::T2,
    TheoremId::T3,
    TheoremId::T5,
    TheoremId::T6,
    TheoremId::T8,
    TheoremId::T9,
    TheoremId::AlikeRelation,
];

#[derive(Parser, Debug)]
#[command(
    name = "laplaceq",
    version,
    about = "Spectra, entropy and LOCC verdicts for Laplacian density matrices of star-relevant graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct GraphSource {
    /// Graph JSON file, or `-` for stdin.
    #[arg(long, value_name = "FILE", conflicts_with = "family")]
    pub graph: Option<String>,
    /// Family name, optionally with its parameters: NAME[:n[:m]].
    #[arg(long, value_name = "NAME[:n[:m]]")]
    pub family: Option<String>,
    /// Order of the family graph.
    #[arg(long, value_name = "N")]
    pub n: Option<usize>,
    /// Second family parameter (star_mlike edge count, star_plus_path length).
    #[arg(long, value_name = "M")]
    pub m: Option<usize>,
}

#[derive(Args, Debug)]
pub struct ModeFlags {
    /// Closed-form rational spectrum (families with a closed form only).
    #[arg(long, conflicts_with = "numeric")]
    pub exact: bool,
    /// Jacobi eigensolver spectrum.
    #[arg(long)]
    pub numeric: bool,
}

#[derive(Args, Debug)]
pub struct OutputFlags {
    /// CSV instead of JSON.
    #[arg(long)]
    pub csv: bool,
    /// Write to FILE instead of stdout.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Eigenvalues of the density matrix with multiplicities.
    Spectrum {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        mode: ModeFlags,
        #[command(flatten)]
        output: OutputFlags,
    },
    /// Von Neumann entropy in bits.
    Entropy {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        mode: ModeFlags,
        #[command(flatten)]
        output: OutputFlags,
    },
    /// Majorization verdict in both directions between two graphs.
    Locc {
        /// First graph: NAME:n[:m] or a graph JSON file (`-` for stdin).
        #[arg(long, value_name = "SPEC|FILE")]
        a: String,
        /// Second graph, same forms as --a.
        #[arg(long, value_name = "SPEC|FILE")]
        b: String,
        #[command(flatten)]
        mode: ModeFlags,
        #[command(flatten)]
        output: OutputFlags,
    },
    /// Theorem sweeps over n.
    Verify {
        /// T2, T3, T5, T6, T8, T9 or alike; all of them when omitted.
        #[arg(long, value_parser = parse_theorem)]
        theorem: Option<TheoremId>,
        /// Lower end of the sweep (the single n without --n-max).
        #[arg(long, value_name = "N")]
        n: Option<usize>,
        /// Upper end of the sweep.
        #[arg(long, value_name = "N")]
        n_max: Option<usize>,
        /// Fix m for the star_mlike sweeps.
        #[arg(long, value_name = "M")]
        m: Option<usize>,
        #[command(flatten)]
        output: OutputFlags,
    },
    /// The 7-vertex path and wheel example.
    Counterexample {
        #[command(flatten)]
        output: OutputFlags,
    },
    /// Phase condition on a weighted triangle.
    Weights {
        /// w1,w2,w3 in radians or as "k/m pi"; lists the {0,π}³ solutions when omitted.
        #[arg(long, value_name = "w1,w2,w3", allow_hyphen_values = true)]
        phases: Option<String>,
        /// Residual tolerance.
        #[arg(long, value_name = "TOL", allow_negative_numbers = true)]
        tol: Option<f64>,
        /// Also scan a STEPS³ grid over [0, 2π)³.
        #[arg(long, value_name = "STEPS", conflicts_with = "phases")]
        grid: Option<usize>,
        #[command(flatten)]
        output: OutputFlags,
    },
    /// Peripheral-edge additions from star(n) to wheel(n).
    Explore {
        /// Number of vertices, hub included.
        #[arg(long, value_name = "N")]
        n: usize,
        /// Largest number of added peripheral edges (default n-1).
        #[arg(long, value_name = "K")]
        max_edges: Option<usize>,
        /// Only add edges of the peripheral cycle.
        #[arg(long)]
        cycle_only: bool,
        /// Evaluate conjecture 1 or 2 instead of listing classes.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        conjecture: Option<u8>,
        #[command(flatten)]
        output: OutputFlags,
    },
}

fn parse_theorem(s: &str) -> Result<TheoremId, String> {
    match TheoremId::from_str(s) {
        Ok(TheoremId::Counterexample) | Err(_) => {
            Err(format!("unknown theorem {s:?}; expected T2, T3, T5, T6, T8, T9 or alike"))
        }
        Ok(t) => Ok(t),
    }
}

/// A graph together with the family parameters it was built from, if any.
#[derive(Debug, Clone)]
pub struct Input {
    pub label: String,
    pub graph: Graph,
    pub family: Option<(Family, usize, Option<usize>)>,
}

fn parse_family_name(flag: &str, name: &str) -> AppResult<Family> {
    Family::from_str(name).map_err(|_| {
        let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
        AppError::usage(flag, format!("unknown family {name:?}; expected one of {}", names.join(", ")))
    })
}

fn parse_count(flag: &str, what: &str, s: &str) -> AppResult<usize> {
    s.parse()
        .map_err(|_| AppError::usage(flag, format!("{what} must be a non-negative integer, got {s:?}")))
}

/// Splits `NAME[:n[:m]]`.
fn split_family_spec(flag: &str, spec: &str) -> AppResult<(Family, Option<usize>, Option<usize>)> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() > 3 {
        return Err(AppError::usage(flag, format!("expected NAME[:n[:m]], got {spec:?}")));
    }
    let family = parse_family_name(flag, parts[0])?;
    let n = parts.get(1).map(|s| parse_count(flag, "n", s)).transpose()?;
    let m = parts.get(2).map(|s| parse_count(flag, "m", s)).transpose()?;
    Ok((family, n, m))
}

fn family_input(flag: &str, family: Family, n: usize, m: Option<usize>) -> AppResult<Input> {
    let graph = family.build(n, m).context(flag)?;
    let label = match m {
        Some(m) => format!("{family}:{n}:{m}"),
        None => format!("{family}:{n}"),
    };
    Ok(Input {
        label,
        graph,
        family: Some((family, n, m)),
    })
}

fn file_input(flag: &str, path: &str, stdin: &mut dyn Read) -> AppResult<Input> {
    let (name, text) = if path == "-" {
        let mut text = String::new();
        stdin.read_to_string(&mut text).map_err(|e| AppError::Io {
            path: format!("{flag} <stdin>"),
            message: e.to_string(),
        })?;
        ("<stdin>".to_string(), text)
    } else {
        let text = std::fs::read_to_string(path).map_err(|e| AppError::Io {
            path: format!("{flag} {path}"),
            message: e.to_string(),
        })?;
        (path.to_string(), text)
    };
    let graph = parse_graph(&text).map_err(|error| AppError::Parse {
        source_name: format!("{flag} {name}"),
        error,
    })?;
    Ok(Input {
        label: name,
        graph,
        family: None,
    })
}

fn resolve_source(src: &GraphSource, stdin: &mut dyn Read) -> AppResult<Input> {
    match (&src.graph, &src.family) {
        (Some(path), None) => {
            if src.n.is_some() || src.m.is_some() {
                let flag = if src.n.is_some() { "--n" } else { "--m" };
                return Err(AppError::usage(flag, "only applies together with --family"));
            }
            file_input("--graph", path, stdin)
        }
        (None, Some(spec)) => {
            let (family, inline_n, inline_m) = split_family_spec("--family", spec)?;
            if inline_n.is_some() && src.n.is_some() {
                return Err(AppError::usage("--n", "order already given in --family"));
            }
            if inline_m.is_some() && src.m.is_some() {
                return Err(AppError::usage("--m", "m already given in --family"));
            }
            let n = inline_n
                .or(src.n)
                .ok_or_else(|| AppError::usage("--n", format!("order of {family} is required")))?;
            family_input("--family", family, n, inline_m.or(src.m))
        }
        (None, None) => Err(AppError::usage("--graph/--family", "one input source is required")),
        (Some(_), Some(_)) => Err(AppError::usage("--graph/--family", "give only one input source")),
    }
}

/// `--a`/`--b`: a family spec when the part before the first `:` names a
/// family, otherwise a file path.
fn resolve_operand(flag: &str, value: &str, stdin: &mut dyn Read) -> AppResult<Input> {
    let head = value.split(':').next().unwrap_or("");
    if Family::from_str(head).is_ok() {
        let (family, n, m) = split_family_spec(flag, value)?;
        let n = n.ok_or_else(|| AppError::usage(flag, format!("expected {family}:n[:m]")))?;
        family_input(flag, family, n, m)
    } else {
        file_input(flag, value, stdin)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    Exact,
    Numeric,
}

/// Exact when requested, or by default when every input has a closed form.
fn resolve_mode(flags: &ModeFlags, inputs: &[&Input]) -> AppResult<Mode> {
    let closed = inputs
        .iter()
        .all(|i| i.family.is_some_and(|(f, _, _)| f.has_closed_form()));
    if flags.exact && !closed {
        let names: Vec<&str> = Family::CLOSED_FORM.iter().map(|f| f.name()).collect();
        return Err(AppError::usage(
            "--exact",
            format!("needs family inputs with a closed form ({})", names.join(", ")),
        ));
    }
    Ok(if flags.numeric || !closed { Mode::Numeric } else { Mode::Exact })
}

fn exact_spectrum(input: &Input) -> AppResult<Spectrum<Rational>> {
    let (family, n, m) = input.family.expect("exact mode needs a family");
    closed_form_spectrum(family, n, m).context(input.label.clone())
}

fn numeric_spectrum_of(input: &Input) -> AppResult<Spectrum<f64>> {
    let rho = density_matrix(&input.graph).context(input.label.clone())?;
    numeric_spectrum(&rho).context(input.label.clone())
}

enum Rendered {
    Json(Value),
    Csv(String),
}

fn pick(output: &OutputFlags, json: impl FnOnce() -> Value, csv: impl FnOnce() -> String) -> Rendered {
    if output.csv {
        Rendered::Csv(csv())
    } else {
        Rendered::Json(json())
    }
}

fn run_spectrum(source: &GraphSource, mode: &ModeFlags, output: &OutputFlags, stdin: &mut dyn Read) -> AppResult<Rendered> {
    let input = resolve_source(source, stdin)?;
    Ok(match resolve_mode(mode, &[&input])? {
        Mode::Exact => {
            let s = exact_spectrum(&input)?;
            pick(output, || report::spectrum_json(&s), || csv_export::spectrum_csv(&s))
        }
        Mode::Numeric => {
            let s = numeric_spectrum_of(&input)?;
            pick(output, || report::spectrum_json(&s), || csv_export::spectrum_csv(&s))
        }
    })
}

fn run_entropy(source: &GraphSource, mode: &ModeFlags, output: &OutputFlags, stdin: &mut dyn Read) -> AppResult<Rendered> {
    let input = resolve_source(source, stdin)?;
    let bits = match resolve_mode(mode, &[&input])? {
        Mode::Exact => entropy(&exact_spectrum(&input)?),
        Mode::Numeric => entropy(&numeric_spectrum_of(&input)?),
    }
    .context(input.label.clone())?
    .bits;
    Ok(pick(output, || report::entropy_json(bits), || csv_export::entropy_csv(bits)))
}

fn run_locc(a: &str, b: &str, mode: &ModeFlags, output: &OutputFlags, stdin: &mut dyn Read) -> AppResult<Rendered> {
    if a == "-" && b == "-" {
        return Err(AppError::usage("--b", "stdin can feed only one of --a and --b"));
    }
    let a = resolve_operand("--a", a, stdin)?;
    let b = resolve_operand("--b", b, stdin)?;
    let context = format!("{} vs {}", a.label, b.label);
    Ok(match resolve_mode(mode, &[&a, &b])? {
        Mode::Exact => {
            let v = locc_verdict_pair(&exact_spectrum(&a)?, &exact_spectrum(&b)?).context(context)?;
            pick(output, || report::verdict_json(&v), || csv_export::verdict_csv(&v))
        }
        Mode::Numeric => {
            let v = locc_verdict_pair(&numeric_spectrum_of(&a)?, &numeric_spectrum_of(&b)?).context(context)?;
            pick(output, || report::verdict_json(&v), || csv_export::verdict_csv(&v))
        }
    })
}

fn run_verify(
    theorem: Option<TheoremId>,
    n: Option<usize>,
    n_max: Option<usize>,
    m: Option<usize>,
    output: &OutputFlags,
) -> AppResult<Rendered> {
    let theorems: Vec<TheoremId> = match theorem {
        Some(t) => vec![t],
        None => ALL_THEOREMS.to_vec(),
    };
    let threads = thread_cap();
    let mut reports = Vec::new();
    for t in theorems {
        for sweep in sweeps_for(t) {
            let lo = n.unwrap_or(sweep.min_order());
            let hi = n_max.unwrap_or(if n.is_some() { lo } else { DEFAULT_N_MAX });
            if lo > hi {
                return Err(AppError::usage("--n-max", format!("must be at least {lo}, got {hi}")));
            }
            let label = format!("--theorem {}", t.label());
            reports.push(run_sweep(sweep, lo..=hi, m, threads).context(label)?);
        }
    }
    Ok(pick(
        output,
        || Value::Array(reports.iter().map(report::report_json).collect()),
        || csv_export::reports_csv(&reports),
    ))
}

fn run_weights(phases: Option<&str>, tol: Option<f64>, grid: Option<usize>, output: &OutputFlags) -> AppResult<Rendered> {
    if let Some(t) = tol {
        if !(t > 0.0 && t.is_finite()) {
            return Err(AppError::usage("--tol", format!("must be positive, got {t}")));
        }
    }
    if let Some(text) = phases {
        let [w1, w2, w3] = parse_phases(text).map_err(|e| AppError::usage("--phases", e))?;
        let p = TrianglePhases::new(w1, w2, w3);
        let tol = tol.unwrap_or(DEFAULT_TOLERANCE);
        let check = check_triangle_condition(&p, tol);
        return Ok(pick(
            output,
            || report::triangle_json(&p, &check, tol),
            || csv_export::triangles_csv(&[(p, check)]),
        ));
    }
    let admissible = admissible_phase_set();
    let grid_result = match grid {
        Some(0) => return Err(AppError::usage("--grid", "needs at least one step")),
        Some(steps) => {
            // residuals on the grid are multiples of the step, so half a step separates hits from misses
            let grid_tol = tol.unwrap_or(TAU / steps as f64 / 2.0);
            Some((steps, grid_tol, grid_scan(steps, grid_tol)))
        }
        None => None,
    };
    let rows: Vec<_> = admissible
        .iter()
        .chain(grid_result.iter().flat_map(|(_, _, sols)| sols))
        .map(|p| (*p, check_triangle_condition(p, tol.unwrap_or(DEFAULT_TOLERANCE))))
        .collect();
    Ok(pick(
        output,
        || {
            let mut v = json!({
                "admissible": admissible.iter().map(|p| report::floats(&p.phases())).collect::<Vec<_>>(),
            });
            if let Some((steps, grid_tol, sols)) = &grid_result {
                v["grid"] = json!({
                    "steps": steps,
                    "tolerance": report::float(*grid_tol),
                    "solutions": sols.iter().map(|p| report::floats(&p.phases())).collect::<Vec<_>>(),
                });
            }
            v
        },
        || csv_export::triangles_csv(&rows),
    ))
}

fn run_explore(
    n: usize,
    max_edges: Option<usize>,
    cycle_only: bool,
    conjecture: Option<u8>,
    output: &OutputFlags,
) -> AppResult<Rendered> {
    let max = max_edges.unwrap_or(n.saturating_sub(1));
    let state = explore(n, max, cycle_only).context("--n/--max-edges")?;
    Ok(match conjecture {
        None => pick(output, || report::exploration_json(&state), || csv_export::exploration_csv(&state)),
        Some(c) => {
            let r = if c == 1 {
                conjecture_1_report(&state)
            } else {
                conjecture_2_report(&state)
            }
            .context("--n")?;
            pick(output, || report::conjecture_json(&r), || csv_export::conjecture_csv(&r))
        }
    })
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> AppResult<(Rendered, Option<PathBuf>)> {
    let out_of = |o: &OutputFlags| o.out.clone();
    match &cli.command {
        Command::Spectrum { source, mode, output } => Ok((run_spectrum(source, mode, output, stdin)?, out_of(output))),
        Command::Entropy { source, mode, output } => Ok((run_entropy(source, mode, output, stdin)?, out_of(output))),
        Command::Locc { a, b, mode, output } => Ok((run_locc(a, b, mode, output, stdin)?, out_of(output))),
        Command::Verify { theorem, n, n_max, m, output } => {
            Ok((run_verify(*theorem, *n, *n_max, *m, output)?, out_of(output)))
        }
        Command::Counterexample { output } => {
            let r = reproduce_counterexample().context("counterexample")?;
            let rendered = pick(
                output,
                || report::report_json(&r),
                || csv_export::reports_csv(std::slice::from_ref(&r)),
            );
            Ok((rendered, out_of(output)))
        }
        Command::Weights { phases, tol, grid, output } => {
            Ok((run_weights(phases.as_deref(), *tol, *grid, output)?, out_of(output)))
        }
        Command::Explore { n, max_edges, cycle_only, conjecture, output } => {
            Ok((run_explore(*n, *max_edges, *cycle_only, *conjecture, output)?, out_of(output)))
        }
    }
}

/// Parses `argv` (including the program name), runs the command and returns
/// the exit code: 0 on success, 1 for usage, parse and domain errors, 2 for
/// numerical failures.
pub fn run<I, T>(argv: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    1
                }
            };
        }
    };
    let result = execute(&cli, stdin).and_then(|(rendered, out)| {
        let text = match rendered {
            Rendered::Json(v) => render(&v),
            Rendered::Csv(s) => s,
        };
        match out {
            Some(path) => std::fs::write(&path, text).map_err(|e| AppError::Io {
                path: format!("--out {}", path.display()),
                message: e.to_string(),
            }),
            None => stdout.write_all(text.as_bytes()).map_err(|e| AppError::Io {
                path: "<stdout>".into(),
                message: e.to_string(),
            }),
        }
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "laplaceq: error: {e}");
            e.exit_code()
        }
    }
}
