//! `bnb`: boundary independent broadcasts on trees from the command line.
//!
//! Exit codes: 0 success (including open-question findings), 1 invalid
//! broadcast, 2 parse or usage error, 3 internal inconsistency.

mod commands;
mod dot;
mod error;
mod input;
mod search;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::error::{CliError, CliResult};
use crate::input::{BroadcastArgs, InputArgs, SolverArgs};
use crate::search::{Check, SearchArgs};

#[derive(Debug, Parser)]
#[command(
    name = "bnb",
    version,
    about = "Boundary independent broadcasts on trees"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Structural profile: branch vertices, leaf sets, W_int, Int(T), shape.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Lower, upper and conjectured bounds, closed formulas, and optionally
    /// the exact value.
    Bounds {
        #[command(flatten)]
        input: InputArgs,
        /// Also run an exact solver.
        #[arg(long)]
        exact: bool,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// The constructive lower-bound broadcast, verified before printing.
    Witness {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Check a broadcast: validity, domination, independence, maximality.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        broadcast: BroadcastArgs,
    },
    /// Run a check over every tree with min-n <= n <= max-n, one JSON line
    /// per tree followed by a summary line.
    Search {
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum)]
        check: Check,
        #[command(flatten)]
        solver: SolverArgs,
        /// Worker threads (default: one per core).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Graphviz DOT output, optionally annotated with a broadcast.
    ExportDot {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        broadcast: BroadcastArgs,
    },
}

fn run(cli: Cli) -> CliResult<u8> {
    let json = cli.json;
    let mut stdout = std::io::stdout().lock();
    let text = match cli.command {
        Command::Analyze { input } => {
            let (t, desc) = input.load()?;
            commands::analyze(&t, desc, json)?
        }
        Command::Bounds {
            input,
            exact,
            solver,
        } => {
            let (t, desc) = input.load()?;
            let limits = solver.limits()?;
            commands::bounds(&t, desc, exact.then_some(&limits), json)?
        }
        Command::Witness { input } => {
            let (t, desc) = input.load()?;
            commands::witness(&t, desc, json)?
        }
        Command::Verify { input, broadcast } => {
            let (t, desc) = input.load()?;
            let b = broadcast
                .load(&t)?
                .ok_or_else(|| CliError::Usage("verify needs --broadcast or --strengths".into()))?;
            commands::verify(&t, desc, b, json)?
        }
        Command::Search {
            min_n,
            max_n,
            check,
            solver,
            jobs,
        } => {
            let args = SearchArgs {
                min_n,
                max_n,
                check,
                limits: solver.limits()?,
                jobs,
            };
            return search::run(&args, &mut stdout);
        }
        Command::ExportDot { input, broadcast } => {
            let (t, _) = input.load()?;
            let b = if broadcast.is_given() {
                broadcast.load(&t)?
            } else {
                None
            };
            dot::to_dot(&t, b.as_ref())
        }
    };
    stdout.write_all(text.as_bytes())?;
    Ok(0)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("BNB_LOG", "warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("bnb: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
