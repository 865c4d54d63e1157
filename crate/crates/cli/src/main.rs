use std::io::{IsTerminal, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mplex_cli::{render, use_color, CliError, Format, ReportBundle};
use mplex_core::io::{generate_synthetic, load_manifest_file, Dataset, SyntheticConfig};
use mplex_core::structure::DegreeFilter;

#[derive(Parser)]
#[command(name = "mplex", version, about = "Jaccard-based metrics for multiplex friendship networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
    Csv,
}

#[derive(Args)]
struct Common {
    /// Dataset manifest (JSON).
    #[arg(long)]
    manifest: PathBuf,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
}

#[derive(Subcommand)]
enum Command {
    /// Per-layer structure: size, degree, assortativity, largest SCC, paths.
    Summary {
        #[command(flatten)]
        common: Common,
        /// Add the four directed assortativity variants.
        #[arg(long)]
        verbose: bool,
    },
    /// Per-layer averages of r, tc and tp.
    Endogenous {
        #[command(flatten)]
        common: Common,
    },
    /// Averages over ordered layer pairs.
    Cross {
        #[command(flatten)]
        common: Common,
        /// Ordered pair `alpha:beta`; repeatable. Reverses are added.
        #[arg(long = "pair", value_parser = parse_pair)]
        pairs: Vec<(String, String)>,
    },
    /// Nodes grouped by their (r, tc, tp) triple.
    Equiv {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        layer: String,
        #[arg(long, default_value_t = 0.0)]
        tolerance: f64,
        /// Keep only nodes with this out-degree.
        #[arg(long)]
        dout: Option<usize>,
        /// Keep only nodes with this in-degree.
        #[arg(long)]
        din: Option<usize>,
    },
    /// Wedge closure of one layer by others.
    Wedges {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        wedge_layer: String,
        /// Closing layer; repeatable or comma-separated.
        #[arg(long, value_delimiter = ',', required = true)]
        closing: Vec<String>,
    },
    /// Attribute similarity along the ties of one layer.
    Attrs {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        layer: String,
    },
    /// Write a seeded synthetic dataset (manifest plus data files).
    Generate {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 150)]
        nodes: usize,
        /// Output directory.
        #[arg(long)]
        out: PathBuf,
    },
    /// Load the dataset and report what was ingested.
    Validate {
        #[command(flatten)]
        common: Common,
    },
}

fn parse_pair(s: &str) -> Result<(String, String), String> {
    match s.split_once(':') {
        Some((a, b)) if !a.is_empty() && !b.is_empty() => Ok((a.to_owned(), b.to_owned())),
        _ => Err(format!("expected alpha:beta, got {s:?}")),
    }
}

fn load(common: &Common) -> Result<Dataset, CliError> {
    Ok(load_manifest_file(&common.manifest)?)
}

fn emit(common: &Common, bundle: &ReportBundle) -> Result<(), CliError> {
    let format = match common.format {
        FormatArg::Json => Format::Json,
        FormatArg::Text => Format::Text,
        FormatArg::Csv => Format::Csv,
    };
    match &common.out {
        Some(path) => {
            let body = render(bundle, format, false);
            std::fs::write(path, body).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
        }
        None => {
            let stdout = std::io::stdout();
            let bold = use_color(std::env::var_os("NO_COLOR").as_deref(), stdout.is_terminal());
            let body = render(bundle, format, bold);
            let mut lock = stdout.lock();
            lock.write_all(body.as_bytes()).and_then(|_| lock.flush()).map_err(|e| CliError::Input(e.to_string()))
        }
    }
}

fn generate(seed: u64, nodes: usize, out: &Path) -> Result<(), CliError> {
    let ds = generate_synthetic(&SyntheticConfig::demo(seed, nodes)).map_err(|e| CliError::Input(e.to_string()))?;
    ds.write_to(out).map_err(|e| CliError::Input(format!("{}: {e}", out.display())))?;
    eprintln!("wrote {} nodes to {}", nodes, out.display());
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Summary { common, verbose } => {
            let ds = load(&common)?;
            emit(&common, &mplex_cli::summary(&ds, verbose))
        }
        Command::Endogenous { common } => {
            let ds = load(&common)?;
            emit(&common, &mplex_cli::endogenous(&ds))
        }
        Command::Cross { common, pairs } => {
            let ds = load(&common)?;
            emit(&common, &mplex_cli::cross(&ds, &pairs)?)
        }
        Command::Equiv { common, layer, tolerance, dout, din } => {
            let ds = load(&common)?;
            let filter = DegreeFilter { d_out: dout, d_in: din };
            emit(&common, &mplex_cli::equiv(&ds, &layer, tolerance, filter)?)
        }
        Command::Wedges { common, wedge_layer, closing } => {
            let ds = load(&common)?;
            emit(&common, &mplex_cli::wedges(&ds, &wedge_layer, &closing)?)
        }
        Command::Attrs { common, layer } => {
            let ds = load(&common)?;
            emit(&common, &mplex_cli::attrs(&ds, &layer)?)
        }
        Command::Generate { seed, nodes, out } => generate(seed, nodes, &out),
        Command::Validate { common } => {
            let ds = load(&common)?;
            emit(&common, &mplex_cli::validate(&ds))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = std::panic::catch_unwind(|| run(cli));
    match outcome {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(e)) => {
            eprintln!("mplex: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
        Err(_) => {
            eprintln!("mplex: internal error: unexpected panic");
            ExitCode::from(3)
        }
    }
}
