//! `fradkin`: verification suites, tables and trajectories from the command line.
//!
//! Exit status is 0 when every requested check passes, 1 when one fails,
//! 2 on usage errors and 3 on errors raised by the library.

mod commands;
mod config;
mod error;
mod output;

use std::io::Write;

use clap::{Parser, Subcommand};

use commands::{AlgebraAction, IsoAction, KillingAction, NambuAction, SimAction};
use config::{Flags, RunConfig};
use error::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "fradkin",
    version,
    about = "Exact checks for the Demkov-Fradkin algebra family and its oscillator discretization"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    flags: Flags,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Commutation tables, Jacobi checks and structure constants.
    Algebra {
        #[arg(value_enum)]
        action: AlgebraAction,
    },
    /// Killing form spectra, determinants, signatures and Levi data.
    Killing {
        #[arg(value_enum)]
        action: KillingAction,
    },
    /// Matrix representations (`--target su|u|sl|gl|zero|zeta2`).
    Iso {
        #[arg(value_enum)]
        action: IsoAction,
    },
    /// The discretized oscillator.
    Sim {
        #[arg(value_enum)]
        action: SimAction,
    },
    /// Nambu structure and the matrix family identities.
    Nambu {
        #[arg(value_enum)]
        action: NambuAction,
    },
}

fn run(cli: Cli) -> Result<(String, bool), CliError> {
    let cfg = RunConfig::resolve(cli.flags)?;
    let out = match cli.command {
        Command::Algebra { action } => commands::algebra(action, &cfg)?,
        Command::Killing { action } => commands::killing(action, &cfg)?,
        Command::Iso { action } => commands::iso(action, &cfg)?,
        Command::Sim { action } => commands::sim(action, &cfg)?,
        Command::Nambu { action } => commands::nambu(action, &cfg)?,
    };
    Ok((out.render(cfg.format)?, out.pass))
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, pass)) => {
            let mut out = std::io::stdout().lock();
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = out.write_all(text.as_bytes()).and_then(|_| {
                if text.ends_with('\n') {
                    Ok(())
                } else {
                    out.write_all(b"\n")
                }
            });
            std::process::exit(if pass { 0 } else { 1 });
        }
        Err(e) => {
            match &e {
                CliError::Usage(_) => eprintln!("usage error: {e}"),
                _ => eprintln!("{e}"),
            }
            std::process::exit(e.exit_code());
        }
    }
}
