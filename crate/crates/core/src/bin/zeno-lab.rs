use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use zeno::harness::{self, ConfigLayer, Experiment, ExperimentConfig, HarnessError};

#[derive(Parser)]
#[command(name = "zeno-lab", version, about = "Inverse Zeno, dilation and polarizer experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rotation-generator residuals over random state pairs (N = pair count)
    A1Oracle(Flags),
    /// Fidelity of the steering schedule as N grows
    InverseZeno(Flags),
    /// Short-time fidelity deficit against N
    Eq1Scaling(Flags),
    /// Measurement dilation identities over random setups (N = setup count)
    Dilation(Flags),
    /// Polarizer staircase against the projector product
    Polarizer(Flags),
    /// Fixed-basis survival against steered transfer
    TwoLevel(Flags),
}

#[derive(Args)]
struct Flags {
    #[arg(long)]
    dim: Option<usize>,
    /// Comma-separated, strictly increasing
    #[arg(long = "n-list")]
    n_list: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    lambda: Option<f64>,
    /// zero | pauli-x | random-normalized
    #[arg(long)]
    hamiltonian: Option<String>,
    /// csv | json
    #[arg(long)]
    format: Option<String>,
    /// Output file; standard output when absent
    #[arg(long)]
    out: Option<PathBuf>,
    /// File of `key = value` lines; flags override it
    #[arg(long)]
    config: Option<PathBuf>,
}

fn layer(experiment: Experiment, f: &Flags) -> Result<ConfigLayer, HarnessError> {
    let mut layer = ConfigLayer { experiment: Some(experiment), dim: f.dim, seed: f.seed, lambda: f.lambda, out: f.out.clone(), ..Default::default() };
    for (key, value) in [("n-list", &f.n_list), ("hamiltonian", &f.hamiltonian), ("format", &f.format)] {
        if let Some(v) = value {
            layer.set(key, v)?;
        }
    }
    Ok(layer)
}

fn execute(cli: Cli) -> Result<(), HarnessError> {
    let (experiment, flags) = match &cli.command {
        Command::A1Oracle(f) => (Experiment::A1Oracle, f),
        Command::InverseZeno(f) => (Experiment::InverseZeno, f),
        Command::Eq1Scaling(f) => (Experiment::Eq1Scaling, f),
        Command::Dilation(f) => (Experiment::Dilation, f),
        Command::Polarizer(f) => (Experiment::Polarizer, f),
        Command::TwoLevel(f) => (Experiment::TwoLevel, f),
    };
    let file = match &flags.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| HarnessError::ConfigInvalid(format!("{}: {e}", path.display())))?;
            Some(ConfigLayer::parse_file(&text)?)
        }
        None => None,
    };
    let config = ExperimentConfig::resolve(layer(experiment, flags)?, file, harness::env_seed()?)?;
    let rows = harness::run(&config)?;
    let text = harness::render(&rows, config.format)?;
    match &config.out {
        Some(path) => std::fs::write(path, text).map_err(|e| HarnessError::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.record());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
