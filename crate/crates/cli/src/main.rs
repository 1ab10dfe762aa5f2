//! Command-line frontend: counting, bijection maps, product expansion,
//! verification sweeps and witness extraction.
//!
//! Output goes to standard output in the format picked by `--format`;
//! progress notes go to standard error.  Exit codes: 0 on success, 1 on
//! runtime errors or failed verification, 2 on flag validation problems.
//! Parallel sections honor `RAYON_NUM_THREADS`.

mod count;
mod expand;
mod mapcmd;
mod out;
mod verify;

use clap::{Parser, Subcommand};

use out::Format;

#[derive(Parser)]
#[command(name = "trilace", version, about = "Interlacing triangular arrays toolkit")]
struct Cli {
    /// Output format; the three formats carry the same content.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count one object family exactly.
    Count(count::CountArgs),
    /// Convert one serialized object into its partner family.
    Map(mapcmd::MapArgs),
    /// Expand a product of classes in one of the four bases.
    Expand(expand::ExpandArgs),
    /// Run one verification sweep and report pass/fail.
    Verify(verify::VerifyArgs),
    /// Expand a product and emit the arrays behind each coefficient.
    Witness(expand::WitnessArgs),
}

/// Errors sorted by exit code: usage problems exit 2, everything else 1.
pub enum CliError {
    Usage(String),
    Failed(String),
    Runtime(anyhow::Error),
}

impl From<anyhow::Error> for CliError {
    fn from(e: anyhow::Error) -> Self {
        CliError::Runtime(e)
    }
}

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn main() {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Count(args) => count::run(args, cli.format),
        Command::Map(args) => mapcmd::run(args, cli.format),
        Command::Expand(args) => expand::run_expand(args, cli.format),
        Command::Verify(args) => verify::run(args, cli.format),
        Command::Witness(args) => expand::run_witness(args, cli.format),
    };
    match result {
        Ok(()) => {}
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
        Err(CliError::Failed(msg)) => {
            eprintln!("{msg}");
            std::process::exit(1);
        }
        Err(CliError::Runtime(e)) => {
            eprintln!("error: {e:#}");
            std::process::exit(1);
        }
    }
}
