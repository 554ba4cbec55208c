//! The `mincut` command-line tool.
//!
//! JSON goes to standard output by default; `--table` switches to plain
//! text. Exit codes: 0 on success, 1 when a `verify` or `sweep` check
//! fails, 2 on usage or input errors.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::classify;
use crate::error::Error;
use crate::experiments::{self, EnsembleSpec, Model};
use crate::formats::{self, Format};
use crate::graph::Graph;
use crate::mincut::{self, count_bound_check};
use crate::operator::{self, IterationConfig};
use crate::structure;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "mincut",
    version,
    about = "Minimum edge-cuts and the mincut-graph operator"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Input format; guessed from the file extension when omitted.
    #[arg(long, global = true, value_enum)]
    format: Option<InputFormat>,

    /// Vertex cap for mincut enumeration.
    #[arg(long, global = true, default_value_t = mincut::DEFAULT_ENUM_BUDGET)]
    budget: usize,

    /// Emit JSON (the default).
    #[arg(long, global = true, conflicts_with = "table")]
    json: bool,

    /// Emit human-readable text instead of JSON.
    #[arg(long, global = true)]
    table: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum InputFormat {
    Edgelist,
    Graph6,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutputFormat {
    Edgelist,
    Graph6,
    Dot,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModelKind {
    Gnp,
    Regular,
    All,
}

#[derive(Debug, Args)]
struct Input {
    /// Graph file; standard input when omitted or `-`.
    input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Edge connectivity, degrees and classification.
    Info(Input),
    /// Enumerate all minimum edge-cuts.
    Mincuts(Input),
    /// Emit the mincut graph X(G).
    Xgraph {
        #[command(flatten)]
        input: Input,
        /// Emit X(G) in this format instead of JSON.
        #[arg(long, value_enum)]
        emit: Option<OutputFormat>,
    },
    /// Iterate X and report the orbit.
    Iterate {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = operator::DEFAULT_MAX_STEPS)]
        max_steps: usize,
        /// Write every step as graph6 and DOT into this directory.
        #[arg(long)]
        dump_steps: Option<PathBuf>,
    },
    /// Check the cut-structure properties over every pair of mincuts.
    Verify(Input),
    /// Exhaustive soundness and fixed-point sweeps over small graphs.
    Sweep {
        /// Largest order swept (at most 7).
        #[arg(long)]
        n: usize,
    },
    /// Survey orbit outcomes over a graph ensemble.
    Survey {
        #[arg(long, value_enum)]
        model: ModelKind,
        #[arg(long)]
        n: usize,
        /// Edge probability for `gnp`.
        #[arg(long)]
        p: Option<f64>,
        /// Degree for `regular`.
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Required for the random models.
        #[arg(long)]
        seed: Option<u64>,
        /// Keep one graph per isomorphism class (`all` only).
        #[arg(long)]
        dedup: bool,
        #[arg(long, default_value_t = operator::DEFAULT_MAX_STEPS)]
        max_steps: usize,
        /// Also write the step histogram as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Report the periodicity census instead of the full survey.
        #[arg(long)]
        census: bool,
    },
    /// Convert a graph between encodings.
    Formats {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        to: OutputFormat,
    },
}

/// Failure modes of a command, mapped onto exit codes.
enum Failure {
    Usage(String),
    Validation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = std::result::Result<(), Failure>;

/// Runs one invocation. `args` includes the program name. Normal output
/// goes to `out`, diagnostics to `err`; the return value is the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Validation(msg)) => {
            let _ = writeln!(err, "validation failed: {msg}");
            EXIT_VALIDATION
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    match &cli.command {
        Command::Info(input) => info(cli, &read_graph(cli, input)?, out),
        Command::Mincuts(input) => {
            let g = read_graph(cli, input)?;
            let family = mincut::enumerate_mincuts_with_budget(&g, cli.budget)?;
            if cli.table {
                writeln!(out, "lambda {}  mincuts {}", family.lambda, family.len())?;
                for cut in &family.cuts {
                    let edges: Vec<String> = cut
                        .edges()
                        .iter()
                        .map(|e| format!("{}-{}", e.u, e.v))
                        .collect();
                    writeln!(out, "{:?} | {}", cut.side_a(), edges.join(" "))?;
                }
                Ok(())
            } else {
                emit_json(out, &family)
            }
        }
        Command::Xgraph { input, emit } => {
            let g = read_graph(cli, input)?;
            let x = operator::mincut_graph_with_budget(&g, cli.budget)?;
            match emit {
                Some(f) => Ok(write!(out, "{}", render(&x, *f))?),
                None if cli.table => Ok(write!(out, "{}", formats::to_edge_list(&x))?),
                None => emit_json(out, &graph_json(&x)),
            }
        }
        Command::Iterate {
            input,
            max_steps,
            dump_steps,
        } => {
            let g = read_graph(cli, input)?;
            let config = IterationConfig {
                max_steps: *max_steps,
                enum_budget: cli.budget,
                ..Default::default()
            };
            let trace = operator::iterate_with(&g, &config)?;
            if let Some(dir) = dump_steps {
                dump(dir, &trace.graphs)?;
            }
            if cli.table {
                for (i, s) in trace.steps.iter().enumerate() {
                    writeln!(out, "step {i}: n={} m={}", s.n, s.m)?;
                }
                writeln!(out, "outcome: {:?}", trace.outcome)?;
                Ok(())
            } else {
                emit_json(out, &trace)
            }
        }
        Command::Verify(input) => verify(cli, &read_graph(cli, input)?, out),
        Command::Sweep { n } => sweep(cli, *n, out),
        Command::Survey {
            model,
            n,
            p,
            r,
            count,
            seed,
            dedup,
            max_steps,
            csv,
            census,
        } => {
            let model = match model {
                ModelKind::Gnp => Model::Gnp {
                    n: *n,
                    p: p.ok_or_else(|| Failure::Usage("--p is required for gnp".into()))?,
                },
                ModelKind::Regular => Model::RandomRegular {
                    n: *n,
                    r: r.ok_or_else(|| Failure::Usage("--r is required for regular".into()))?,
                },
                ModelKind::All => Model::AllConnected {
                    n: *n,
                    dedup: *dedup,
                },
            };
            let seed = match (&model, seed) {
                (Model::AllConnected { .. }, s) => s.unwrap_or(0),
                (_, Some(s)) => *s,
                (_, None) => {
                    return Err(Failure::Usage("random models require --seed".into()));
                }
            };
            let spec = EnsembleSpec {
                model,
                count: *count,
                seed,
            };
            let config = IterationConfig {
                max_steps: *max_steps,
                enum_budget: cli.budget,
                ..Default::default()
            };
            if *census {
                let c = experiments::periodicity_census(&spec, &config)?;
                if cli.table {
                    for (p, b) in &c.periods {
                        writeln!(
                            out,
                            "period {p}: {} graphs, cycles {}",
                            b.count,
                            b.exemplars.join(" ")
                        )?;
                    }
                    writeln!(out, "null: {}  unresolved: {}", c.null, c.unresolved)?;
                    return Ok(());
                }
                return emit_json(out, &c);
            }
            let report = experiments::survey(&spec, &config)?;
            if let Some(path) = csv {
                fs::write(path, report.histogram_csv())?;
            }
            if cli.table {
                Ok(write!(out, "{}", report.summary())?)
            } else {
                emit_json(out, &report)
            }
        }
        Command::Formats { input, to } => {
            let g = read_graph(cli, input)?;
            Ok(write!(out, "{}", render(&g, *to))?)
        }
    }
}

fn read_graph(cli: &Cli, input: &Input) -> Result<Graph, Failure> {
    let path = input.input.as_deref().filter(|p| *p != Path::new("-"));
    let text = match path {
        Some(p) => fs::read_to_string(p)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", p.display())))?,
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    let format = match (cli.format, path) {
        (Some(InputFormat::Edgelist), _) => Format::EdgeList,
        (Some(InputFormat::Graph6), _) => Format::Graph6,
        (None, Some(p)) => Format::from_extension(p),
        (None, None) => Format::EdgeList,
    };
    Ok(formats::parse(&text, format)?)
}

fn render(g: &Graph, f: OutputFormat) -> String {
    match f {
        OutputFormat::Edgelist => formats::to_edge_list(g),
        OutputFormat::Graph6 => formats::write(g, Format::Graph6),
        OutputFormat::Dot => formats::to_dot(g, "G"),
    }
}

fn graph_json(g: &Graph) -> serde_json::Value {
    json!({
        "n": g.order(),
        "m": g.size(),
        "graph6": formats::to_graph6(g),
        "edges": g.edge_pairs(),
    })
}

fn emit_json<T: Serialize + ?Sized>(out: &mut dyn Write, value: &T) -> CmdResult {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Usage(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn dump(dir: &Path, graphs: &[Graph]) -> CmdResult {
    fs::create_dir_all(dir)?;
    for (i, g) in graphs.iter().enumerate() {
        fs::write(
            dir.join(format!("step_{i:02}.g6")),
            formats::write(g, Format::Graph6),
        )?;
        fs::write(
            dir.join(format!("step_{i:02}.dot")),
            formats::to_dot(g, &format!("step_{i}")),
        )?;
    }
    Ok(())
}

fn info(cli: &Cli, g: &Graph, out: &mut dyn Write) -> CmdResult {
    let family = mincut::enumerate_mincuts_with_budget(g, cli.budget)?;
    let profile = g.degree_profile().ok();
    let classification = classify::classify(g, &family).ok();
    if cli.table {
        writeln!(
            out,
            "n {}  m {}  lambda {}",
            g.order(),
            g.size(),
            family.lambda
        )?;
        if let Some(p) = profile {
            writeln!(
                out,
                "degrees: min {} max {} regular {}",
                p.min, p.max, p.regular
            )?;
        }
        writeln!(
            out,
            "mincuts: {} ({} trivial)",
            family.len(),
            family.trivial_count()
        )?;
        match &classification {
            Some(c) => {
                writeln!(
                    out,
                    "maximally edge-connected: {}",
                    c.maximally_edge_connected
                )?;
                writeln!(out, "super-lambda: {}", c.super_lambda)?;
                writeln!(out, "fixed point predicted: {}", c.fixed_point_predicted)?;
                writeln!(out, "sufficient conditions: {:?}", c.sufficient_conditions)?;
            }
            None => writeln!(out, "not connected; no classification")?,
        }
        return Ok(());
    }
    emit_json(
        out,
        &json!({
            "n": g.order(),
            "m": g.size(),
            "lambda": family.lambda,
            "degrees": g.degrees(),
            "degree_profile": profile,
            "mincuts": family.len(),
            "classification": classification,
        }),
    )
}

fn verify(cli: &Cli, g: &Graph, out: &mut dyn Write) -> CmdResult {
    let family = mincut::enumerate_mincuts_with_budget(g, cli.budget)?;
    let structure = structure::verify_family(g, &family);
    let bounds = count_bound_check(&family, g.order());
    if cli.table {
        writeln!(
            out,
            "cuts {}  nested pairs {}  crossing pairs {}  violations {}",
            structure.cuts,
            structure.nested_pairs,
            structure.crossing_pairs,
            structure.violations.len()
        )?;
        for c in &bounds.checks {
            writeln!(
                out,
                "bound {}: {} <= {} {}",
                c.name, bounds.count, c.limit, c.satisfied
            )?;
        }
    } else {
        emit_json(out, &json!({ "structure": structure, "bounds": bounds }))?;
    }
    let mut failures = structure.violations.clone();
    for c in bounds.checks.iter().filter(|c| !c.satisfied) {
        failures.push(format!(
            "count bound `{}` violated: {} > {}",
            c.name, bounds.count, c.limit
        ));
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Failure::Validation(failures.join("; ")))
    }
}

fn sweep(cli: &Cli, n: usize, out: &mut dyn Write) -> CmdResult {
    let soundness = classify::soundness_sweep(n)?;
    let equivalence = if n >= 3 {
        Some(classify::fixed_point_equivalence_sweep(3, n)?)
    } else {
        None
    };
    let exceptions = equivalence.as_ref().map_or(0, |e| e.exceptions.len());
    let bound_violations = equivalence.as_ref().map_or(0, |e| e.bound_violations.len());
    let message = format!(
        "{} counterexamples, {} equivalence exceptions, {} bound violations",
        soundness.counterexamples.len(),
        exceptions,
        bound_violations
    );
    if cli.table {
        writeln!(
            out,
            "soundness n<={n}: {} graphs, hits {:?}",
            soundness.graphs_checked, soundness.condition_hits
        )?;
        if let Some(e) = &equivalence {
            writeln!(
                out,
                "fixed points n=3..={n}: {} graphs, {} fixed, {} predicted",
                e.graphs_checked, e.fixed_points, e.predicted
            )?;
        }
        writeln!(out, "{message}")?;
    } else {
        emit_json(
            out,
            &json!({
                "soundness": soundness,
                "equivalence": equivalence,
                "message": message,
            }),
        )?;
    }
    let mut failures = Vec::new();
    if !soundness.counterexamples.is_empty() {
        failures.push(format!(
            "sufficient condition without super-lambda: {:?}",
            soundness.counterexamples
        ));
    }
    if let Some(e) = &equivalence {
        if !e.exceptions.is_empty() {
            failures.push(format!(
                "fixed-point characterization fails: {:?}",
                e.exceptions
            ));
        }
        if !e.bound_violations.is_empty() {
            failures.push(format!("count bounds fail: {:?}", e.bound_violations));
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Failure::Validation(failures.join("; ")))
    }
}
