use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};

use ramsey_witness::enumerate::connected_graphs;
use ramsey_witness::scan::{
    empirical_threshold_graphs, read_inputs, run_extraction_on, scan_invariant_graphs, write_json, RunError, ScanConfig,
    ScanError, Theorem,
};
use ramsey_witness::{generate, verify_witness, write_graph6, FamilySpec, Witness};

/// Witness extraction and exhaustive scans for Ramsey-type statements on
/// connected graphs.
#[derive(Parser)]
#[command(name = "ramsey-witness", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a family member in graph6 or DOT.
    Generate {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Leg length for hairy cliques and spiders, second side for bicliques.
        #[arg(long)]
        l: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
    /// Exact parameters of every graph in a graph6 file.
    Invariants {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run an extraction pipeline on every graph in a graph6 file.
    Extract {
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        #[arg(long)]
        n: usize,
        /// Half the monochromatic clique size for the matching pipeline (default n).
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check a witness JSON file against the first graph of a graph6 file.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        witness: PathBuf,
    },
    /// Scan graph6 files for an empirical threshold or the parameter chains.
    Scan {
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        #[arg(long)]
        n: usize,
        #[arg(long, num_args = 1.., required = true)]
        input: Vec<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Report::Threshold)]
        report: Report,
        /// Include per-graph records in invariant reports.
        #[arg(long)]
        records: bool,
    },
    /// Write every connected graph up to an order, one graph6 line each.
    Catalogue {
        #[arg(long)]
        max_order: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Clique,
    Star,
    Biclique,
    HairyClique,
    TriangleClique,
    Spider,
    Friendship,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    Independence,
    InducedMatching,
    Matching,
}

impl From<TheoremArg> for Theorem {
    fn from(t: TheoremArg) -> Self {
        match t {
            TheoremArg::Independence => Theorem::Independence,
            TheoremArg::InducedMatching => Theorem::InducedMatching,
            TheoremArg::Matching => Theorem::Matching,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Report {
    Threshold,
    Invariants,
}

/// An error with the process exit code it maps to.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

fn usage(error: impl Into<anyhow::Error>) -> Failure {
    Failure { code: 1, error: error.into() }
}

impl From<ScanError> for Failure {
    fn from(e: ScanError) -> Self {
        usage(e)
    }
}

impl From<RunError> for Failure {
    fn from(e: RunError) -> Self {
        let code = match e {
            RunError::Parse(_) => 1,
            RunError::Extraction(_) => 2,
            RunError::Soundness(_) => 3,
        };
        Failure { code, error: e.into() }
    }
}

fn write_text(text: &str, path: Option<&Path>) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => Ok(std::io::stdout().write_all(text.as_bytes())?),
    }
}

fn emit_json<T: serde::Serialize>(value: &T, path: Option<&Path>) -> Result<(), Failure> {
    write_json(value, path).context("writing report").map_err(usage)
}

fn spec_for(family: Family, n: usize, l: Option<usize>) -> FamilySpec {
    match family {
        Family::Path => FamilySpec::path(n),
        Family::Clique => FamilySpec::clique(n),
        Family::Star => FamilySpec::star(n),
        Family::Biclique => FamilySpec::biclique(n, l.unwrap_or(n)),
        Family::HairyClique => FamilySpec::hairy_clique(n, l.unwrap_or(1)),
        Family::TriangleClique => FamilySpec::triangle_clique(n),
        Family::Spider => FamilySpec::spider(n, l.unwrap_or(2)),
        Family::Friendship => FamilySpec::friendship(n),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Generate { family, n, l, format } => {
            let g = generate(&spec_for(family, n, l)).map_err(usage)?;
            let text = match format {
                Format::Graph6 => format!("{}\n", write_graph6(&g)),
                Format::Dot => g.to_dot(None),
            };
            write_text(&text, None).map_err(usage)
        }
        Command::Invariants { input, output } => {
            let graphs = read_inputs(&[input])?;
            let report = scan_invariant_graphs(&graphs, 1, true)?;
            emit_json(&report, output.as_deref())
        }
        Command::Extract { theorem, n, r, input, output } => {
            let graphs = read_inputs(&[input])?;
            let reports = graphs
                .iter()
                .map(|g| run_extraction_on(g, theorem.into(), n, r))
                .collect::<Result<Vec<_>, _>>()?;
            emit_json(&reports, output.as_deref())
        }
        Command::Verify { input, witness } => {
            let graphs = read_inputs(&[input])?;
            let g = graphs.first().ok_or_else(|| usage(anyhow!("the input file holds no graph")))?;
            let text = fs::read_to_string(&witness).with_context(|| format!("reading {}", witness.display())).map_err(usage)?;
            let w: Witness = serde_json::from_str(&text).context("parsing the witness").map_err(usage)?;
            let valid = verify_witness(g, &w);
            emit_json(&serde_json::json!({ "valid": valid, "family": w.spec.label() }), None)?;
            if valid {
                Ok(())
            } else {
                Err(Failure { code: 2, error: anyhow!("the witness does not embed in the graph") })
            }
        }
        Command::Scan { theorem, n, input, jobs, output, report, records } => {
            let config = ScanConfig { inputs: input, theorem: theorem.into(), n, jobs, output, records };
            config.validate()?;
            let graphs = read_inputs(&config.inputs)?;
            match report {
                Report::Threshold => {
                    let r = empirical_threshold_graphs(&graphs, config.theorem, n, jobs)?;
                    emit_json(&r, config.output.as_deref())
                }
                Report::Invariants => {
                    let r = scan_invariant_graphs(&graphs, jobs, records)?;
                    emit_json(&r, config.output.as_deref())?;
                    if r.violations > 0 {
                        return Err(Failure { code: 3, error: anyhow!("{} inequality violations", r.violations) });
                    }
                    Ok(())
                }
            }
        }
        Command::Catalogue { max_order, output } => {
            let mut text = String::new();
            for g in connected_graphs(max_order) {
                text.push_str(&write_graph6(&g));
                text.push('\n');
            }
            write_text(&text, output.as_deref()).map_err(usage)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure { code, error }) => {
            eprintln!("error: {error:#}");
            ExitCode::from(code)
        }
    }
}
