use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use edge_ideals::cli::{self, Command, GraphSource, OutputFormat, RunConfig};
use edge_ideals::FieldSpec;

/// Algebraic invariants of graph edge ideals: Alexander duals, Betti tables,
/// and (sequentially) Cohen-Macaulay classification over an exact field.
#[derive(Parser)]
#[command(name = "edge-ideals", version, about)]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Args)]
struct GraphInput {
    /// Edge-list file: first non-comment line `n`, then one `i j` per line
    #[arg(long, value_name = "PATH", global = true)]
    input: Option<PathBuf>,

    /// Use the cycle on N vertices
    #[arg(long, value_name = "N", conflicts_with_all = ["input", "complete", "path"])]
    cycle: Option<usize>,

    /// Use the complete graph on N vertices
    #[arg(long, value_name = "N", conflicts_with_all = ["input", "cycle", "path"])]
    complete: Option<usize>,

    /// Use the path on N vertices
    #[arg(long, value_name = "N", conflicts_with_all = ["input", "cycle", "complete"])]
    path: Option<usize>,
}

#[derive(Args)]
struct CommonOpts {
    /// Coefficient field characteristic: 0 or a prime below 2^31
    #[arg(long = "char", value_name = "0|p", default_value_t = 0)]
    characteristic: u64,

    /// Output format
    #[arg(long, value_name = "text|json", default_value = "text")]
    format: String,
}

#[derive(Subcommand)]
enum CliCommand {
    /// Full classification: chordal, forest, unmixed, CM, sequentially CM
    Classify {
        #[command(flatten)]
        graph: GraphInput,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Alexander dual of the edge ideal (minimal vertex covers)
    Dual {
        #[command(flatten)]
        graph: GraphInput,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Graded Betti table of the edge ideal
    Betti {
        #[command(flatten)]
        graph: GraphInput,
        #[command(flatten)]
        opts: CommonOpts,
        /// Resolve the Alexander dual instead of the edge ideal itself
        #[arg(long)]
        dual: bool,
    },
    /// Report whether the graph is chordal
    IsChordal {
        #[command(flatten)]
        graph: GraphInput,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Report whether the graph is sequentially Cohen-Macaulay
    IsScm {
        #[command(flatten)]
        graph: GraphInput,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Report whether the graph is Cohen-Macaulay
    IsCm {
        #[command(flatten)]
        graph: GraphInput,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Replay the golden reference results the library is pinned to
    PaperCheck {
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Classify every small graph and assert all cross-invariants
    Survey {
        #[command(flatten)]
        opts: CommonOpts,
        /// Largest vertex count to survey (at most 8)
        #[arg(long = "max-n", value_name = "K", default_value_t = 5)]
        max_n: usize,
        /// Worker threads
        #[arg(long, value_name = "W", default_value_t = 1)]
        jobs: usize,
        /// Classify every labeled graph instead of one per isomorphism class
        #[arg(long)]
        labeled: bool,
    },
}

fn graph_source(input: &GraphInput) -> Option<GraphSource> {
    if let Some(path) = &input.input {
        Some(GraphSource::File(path.clone()))
    } else if let Some(n) = input.cycle {
        Some(GraphSource::Cycle(n))
    } else if let Some(n) = input.complete {
        Some(GraphSource::Complete(n))
    } else {
        input.path.map(GraphSource::Path)
    }
}

fn build_config(cli: CliCommand) -> Result<RunConfig, String> {
    let (command, graph, opts, survey) = match cli {
        CliCommand::Classify { graph, opts } => (Command::Classify, Some(graph), opts, None),
        CliCommand::Dual { graph, opts } => (Command::Dual, Some(graph), opts, None),
        CliCommand::Betti { graph, opts, dual } => {
            (Command::Betti { of_dual: dual }, Some(graph), opts, None)
        }
        CliCommand::IsChordal { graph, opts } => (Command::IsChordal, Some(graph), opts, None),
        CliCommand::IsScm { graph, opts } => (Command::IsScm, Some(graph), opts, None),
        CliCommand::IsCm { graph, opts } => (Command::IsCm, Some(graph), opts, None),
        CliCommand::PaperCheck { opts } => (Command::PaperCheck, None, opts, None),
        CliCommand::Survey {
            opts,
            max_n,
            jobs,
            labeled,
        } => (Command::Survey, None, opts, Some((max_n, jobs, labeled))),
    };
    let mut config = RunConfig::new(command);
    config.field = FieldSpec::new(opts.characteristic).map_err(|e| e.to_string())?;
    config.format = match opts.format.as_str() {
        "text" => OutputFormat::Text,
        "json" => OutputFormat::Json,
        other => return Err(format!("unknown format `{other}` (expected text or json)")),
    };
    config.source = graph.as_ref().and_then(graph_source);
    if let Some((max_n, jobs, labeled)) = survey {
        config.survey_max_n = max_n;
        config.jobs = jobs;
        config.labeled = labeled;
    }
    Ok(config)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match build_config(cli.command) {
        Ok(config) => config,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let mut out = String::new();
    match cli::run(&config, &mut out) {
        Ok(code) => {
            print!("{out}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            print!("{out}");
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
