use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use conekit_cli::report::{Overrides, Parameters, Sections};
use conekit_cli::{oracle, render_text};

/// Lattice-structural analysis of positive operators given as JSON documents.
#[derive(Parser, Debug)]
#[command(name = "conekit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Lattice homomorphism, injectivity, weighted permutation and interval preserving checks.
    Classify(Input),
    /// Invariant ideal constructions.
    Ideals(Input),
    /// Ideal-irreducibility verdict.
    Irreducible(Input),
    /// Local spectral radius sequence of a weighted shift.
    Spectral(SpectralInput),
    /// Every section the document enables.
    Analyze(AnalyzeInput),
    /// Brute-force invariant zero sets of a finite matrix, e.g. "0 1; 1 0".
    Oracle(OracleInput),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Input {
    /// Operator document; `-` reads stdin.
    document: PathBuf,
    /// Index window for checks that are not decided exactly [default: 1000, or CONEKIT_WINDOW].
    #[arg(long, value_name = "N")]
    window: Option<usize>,
    /// Largest power in reachability tables [default: 2 × window].
    #[arg(long, value_name = "K")]
    max_power: Option<usize>,
    /// Edge visits allowed to one reachability search [default: 200000000].
    #[arg(long, value_name = "E")]
    edge_budget: Option<usize>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct SpectralInput {
    #[command(flatten)]
    input: Input,
    /// Number of radius values.
    #[arg(long, value_name = "N")]
    max_n: Option<usize>,
    /// Starting basis index.
    #[arg(long)]
    start: Option<usize>,
    #[arg(long)]
    epsilon: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Section {
    Classification,
    Ideals,
    Irreducibility,
    Spectral,
}

#[derive(Args, Debug)]
struct AnalyzeInput {
    #[command(flatten)]
    input: Input,
    /// Leave a section out (repeatable).
    #[arg(long, value_enum)]
    skip: Vec<Section>,
}

#[derive(Args, Debug)]
struct OracleInput {
    /// Rows separated by `;`, entries by spaces or commas.
    matrix: String,
    #[command(flatten)]
    output: Output,
}

fn read_document(path: &PathBuf) -> Result<Vec<u8>> {
    if path.as_os_str() == "-" {
        let mut buf = vec![];
        io::stdin().read_to_end(&mut buf).context("reading stdin")?;
        Ok(buf)
    } else {
        fs::read(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn emit(output: &Output, json: &serde_json::Value) -> Result<()> {
    let text = match output.format {
        Format::Json => serde_json::to_string_pretty(json)? + "\n",
        Format::Text => render_text(json),
    };
    match &output.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => io::stdout().write_all(text.as_bytes()).context("writing stdout"),
    }
}

fn default_window() -> Result<Option<usize>> {
    match std::env::var("CONEKIT_WINDOW") {
        Ok(v) => v.trim().parse().map(Some).with_context(|| format!("CONEKIT_WINDOW={v:?} is not a window size")),
        Err(_) => Ok(None),
    }
}

/// Exit status 2 when a budget ran out, 0 otherwise.
fn analyze(input: &Input, sections: Option<Sections>, tweak: impl FnOnce(&mut Parameters)) -> Result<u8> {
    let bytes = read_document(&input.document)?;
    let parsed = conekit_cli::parse(&bytes).with_context(|| format!("in {}", input.document.display()))?;
    let overrides = Overrides {
        window: input.window,
        max_power: input.max_power,
        edge_budget: input.edge_budget,
        default_window: default_window()?,
        sections,
    };
    let mut params = Parameters::resolve(&parsed, &overrides);
    tweak(&mut params);
    anyhow::ensure!(params.window >= 2, "window must be at least 2");
    anyhow::ensure!(params.max_power > 0 && params.edge_budget > 0, "max power and edge budget must be positive");
    anyhow::ensure!(params.spectral.start > 0 && params.spectral.max_n > 0, "spectral start and maxN must be positive");
    let report = conekit_cli::analyze(&parsed, &params);
    emit(&input.output, &serde_json::to_value(&report)?)?;
    Ok(if report.budget_exhausted() { 2 } else { 0 })
}

fn only(f: impl FnOnce(&mut Sections)) -> Option<Sections> {
    let mut s = Sections::NONE;
    f(&mut s);
    Some(s)
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Classify(input) => analyze(&input, only(|s| s.classification = true), |_| {}),
        Command::Ideals(input) => analyze(&input, only(|s| s.ideals = true), |_| {}),
        Command::Irreducible(input) => analyze(&input, only(|s| s.irreducibility = true), |_| {}),
        Command::Spectral(args) => analyze(&args.input, only(|s| s.spectral = true), |p| {
            p.spectral.max_n = args.max_n.unwrap_or(p.spectral.max_n);
            p.spectral.start = args.start.unwrap_or(p.spectral.start);
            p.spectral.epsilon = args.epsilon.unwrap_or(p.spectral.epsilon);
        }),
        Command::Analyze(args) => analyze(&args.input, None, |p| {
            for skip in &args.skip {
                match skip {
                    Section::Classification => p.sections.classification = false,
                    Section::Ideals => p.sections.ideals = false,
                    Section::Irreducibility => p.sections.irreducibility = false,
                    Section::Spectral => p.sections.spectral = false,
                }
            }
        }),
        Command::Oracle(args) => {
            let matrix = oracle::parse_matrix(&args.matrix)?;
            let report = oracle::run(&matrix)?;
            emit(&args.output, &serde_json::to_value(&report)?)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return ExitCode::from(if err.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}
