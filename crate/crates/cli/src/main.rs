use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use matlin_cli::{exit, run_with_jobs, CliError, Command, Format, Input, JobSpec};

const EXIT_CODES: &str = "\
Exit codes:
  0  success
  1  internal error or failing selftest
  2  parse or usage error
  3  enumeration cutoff exceeded (see --unsafe-cutoff)
  4  matroid axiom or morphism violation
  5  other mathematical error (inconsistent system, dependent rows, ...)

Errors are printed to stderr as {\"error\": {\"kind\", \"message\", \"exit_code\"}}.";

#[derive(Parser)]
#[command(name = "matlin", version, about = "Matroid invariants of linear and affine spaces in (P^1)^n", after_help = EXIT_CODES)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Bases, circuits, cocircuits, flats with Moebius values, f- and h-vectors
    Analyze(Opts),
    /// Homogenized cocircuit forms, their initial ideal and a Buchberger check
    Ideal(Opts),
    /// Enumerate initial ideals over all orders, or show one with --show
    InitialIdeals(Opts),
    /// Moebius-predicted and Hochster-computed Betti numbers
    Betti(Opts),
    /// Cocircuit polytope: inequalities, vertices, dimension, summand check
    Polytope(Opts),
    /// Tutte polynomial and its activity expansion
    Tutte(Opts),
    /// Matroid triple, Las Vergnas polynomial, bidegrees and counts for A x = b
    Affine(Opts),
    /// Run the golden checks on the built-in example
    Selftest(Opts),
}

#[derive(Args)]
struct Opts {
    /// Matrix JSON: {"matrix": [["p/q", ...], ...]}, optionally with "b"
    #[arg(long, value_name = "FILE", conflicts_with = "bases")]
    matrix: Option<PathBuf>,
    /// Bases JSON: {"n": 6, "bases": [[1, 2, 3], ...]}
    #[arg(long, value_name = "FILE")]
    bases: Option<PathBuf>,
    /// Right-hand side of A x = b, comma separated
    #[arg(long, value_name = "CSV", allow_hyphen_values = true)]
    b: Option<String>,
    /// Element order, comma separated (may include 0 for affine)
    #[arg(long, value_name = "CSV")]
    order: Option<String>,
    /// Show the result for one order instead of sweeping
    #[arg(long, value_name = "ORDER")]
    show: Option<String>,
    /// Report counts only
    #[arg(long)]
    count: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Worker threads (0 = all cores); MATLIN_JOBS overrides
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Write the report here instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Replace the sweep cutoffs (8 linear, 7 affine)
    #[arg(long, value_name = "N")]
    unsafe_cutoff: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn job(cmd: Command, o: &Opts) -> Result<JobSpec, CliError> {
    let input = match (&o.matrix, &o.bases) {
        (Some(p), None) => Input::Matrix(read(p)?),
        (None, Some(p)) => Input::Bases(read(p)?),
        _ => Input::Absent,
    };
    Ok(JobSpec {
        command: cmd,
        input,
        b: o.b.clone(),
        order: o.order.clone(),
        show: o.show.clone(),
        count: o.count,
        format: match o.format {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        },
        cutoff: o.unsafe_cutoff,
    })
}

fn jobs(o: &Opts) -> Result<usize, CliError> {
    match std::env::var("MATLIN_JOBS") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("MATLIN_JOBS is not a number: {v:?}"))),
        Err(_) => Ok(o.jobs),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (cmd, opts) = match &cli.command {
        Cmd::Analyze(o) => (Command::Analyze, o),
        Cmd::Ideal(o) => (Command::Ideal, o),
        Cmd::InitialIdeals(o) => (Command::InitialIdeals, o),
        Cmd::Betti(o) => (Command::Betti, o),
        Cmd::Polytope(o) => (Command::Polytope, o),
        Cmd::Tutte(o) => (Command::Tutte, o),
        Cmd::Affine(o) => (Command::Affine, o),
        Cmd::Selftest(o) => (Command::Selftest, o),
    };
    let outcome = job(cmd, opts).and_then(|request| {
        let report = run_with_jobs(&request, jobs(opts)?)?;
        let text = report.render(request.format);
        match &opts.out {
            Some(path) => std::fs::write(path, &text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
            None => print!("{text}"),
        }
        Ok(report.passed)
    });
    match outcome {
        Ok(true) => ExitCode::from(exit::OK as u8),
        Ok(false) => ExitCode::from(exit::INTERNAL as u8),
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
