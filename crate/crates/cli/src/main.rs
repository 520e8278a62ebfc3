mod config;
mod figures;
mod report;

use std::path::PathBuf;

use anyhow::Context;
use clap::{Parser, Subcommand};

use config::SweepConfig;

#[derive(Parser)]
#[command(name = "gkpcb", version, about = "GKP cubic-phase T-gate benchmark driver")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a figure sweep from a JSON config and emit CSV/JSON outputs.
    Run {
        /// Path to the JSON configuration document.
        #[arg(long)]
        config: PathBuf,
        /// Output directory (overrides the config value).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads for sweep points (default: all cores).
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Compare the binning decoder against the closed-form fidelity.
    Oracle {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
    },
}

fn init_threads(threads: Option<usize>) {
    if let Some(n) = threads {
        // ignore failure if a pool was already installed
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn main() -> anyhow::Result<()> {
    let cli = Cli::parse();
    match cli.command {
        Command::Run { config, out, threads } => {
            init_threads(threads);
            let cfg = SweepConfig::load(&config, out)
                .with_context(|| format!("loading config {}", config.display()))?;
            figures::run(&cfg)?;
        }
        Command::Oracle { config, out, threads } => {
            init_threads(threads);
            let cfg = SweepConfig::load(&config, out)
                .with_context(|| format!("loading config {}", config.display()))?;
            report::run_oracle(&cfg)?;
        }
    }
    Ok(())
}
