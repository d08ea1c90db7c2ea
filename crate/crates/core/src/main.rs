use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use rotnum::cli::{run, Command, Invocation};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Sub {
    Estimate,
    Mean,
    Sweep,
    Records,
    Compare,
    Validate,
}

/// Rotation number estimates for random circle homeomorphisms.
#[derive(Debug, Parser)]
#[command(name = "rotnum", version)]
struct Args {
    #[arg(value_enum)]
    command: Sub,
    /// Configuration file.
    #[arg(long)]
    config: PathBuf,
    /// Write CSV here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Known mean rotation number used to centre the bands.
    #[arg(long, allow_hyphen_values = true)]
    reference: Option<f64>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let command = match args.command {
        Sub::Estimate => Command::Estimate,
        Sub::Mean => Command::Mean,
        Sub::Sweep => Command::Sweep,
        Sub::Records => Command::Records,
        Sub::Compare => Command::Compare,
        Sub::Validate => Command::Validate,
    };
    let inv = Invocation { command, config: args.config, out: args.out, reference: args.reference };
    let code = run(&inv, &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code as u8)
}
