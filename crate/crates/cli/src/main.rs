//! `spinorbit`: reproducible verification runs over the graded E8 model.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;
mod format;

#[derive(Parser, Debug)]
#[command(name = "spinorbit", version, about = "Exact checks for the Spin(10) x SL(4) theta-group built from E8")]
struct Cli {
    /// Seed for randomized property checks.
    #[arg(long, global = true, default_value_t = spinorbit::checks::DEFAULT_SEED)]
    seed: u64,
    /// Also write the report as JSON to this file.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run every check, one line per criterion, then a summary count.
    VerifyAll,
    /// Point stabilizers in the Cartan subspace: sizes, fixed spaces, |Gamma|.
    Table1,
    /// The quadrics, quartics and fundamental invariants with their identities.
    Invariants,
    /// Re-verify the mixed-element table for stratum 2..=8.
    MixedTable {
        #[arg(value_parser = clap::value_parser!(u8).range(2..=8))]
        index: u8,
    },
    /// Nodes and edges of the Dynkin scheme of a tensor.
    DynkinScheme {
        #[arg(long, allow_hyphen_values = true)]
        element: String,
        /// Write the scheme in DOT format to this file.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Jordan decomposition of an element of g1.
    Jordan {
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
    /// Characteristic of a nilpotent element, absolute or inside z_g(p).
    Characteristic {
        #[arg(long, allow_hyphen_values = true)]
        element: String,
        /// Linear combination of p1..p4, e.g. `p1` or `p2+2*p3`.
        #[arg(long = "relative-to", value_name = "P-EXPR")]
        relative_to: Option<String>,
    },
    /// Basis of E8 by degree of the grading, with the simple roots of g0.
    DumpGrading,
}

/// What a command produced.
pub struct Outcome {
    pub text: String,
    pub json: serde_json::Value,
    pub passed: bool,
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Internal(String),
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::VerifyAll => Ok(commands::verify_all(cli.seed)),
        Command::Table1 => Ok(commands::table1()),
        Command::Invariants => Ok(commands::invariants()),
        Command::MixedTable { index } => Ok(commands::mixed_table(*index as usize)),
        Command::DynkinScheme { element, dot } => commands::dynkin_scheme(element, dot.as_deref()),
        Command::Jordan { element } => commands::jordan(element),
        Command::Characteristic { element, relative_to } => commands::characteristic(element, relative_to.as_deref()),
        Command::DumpGrading => commands::dump_grading(),
    }
}

fn emit(cli: &Cli, out: &Outcome) -> Result<(), Failure> {
    let mut stdout = std::io::stdout().lock();
    stdout.write_all(out.text.as_bytes()).map_err(|e| Failure::Internal(format!("writing report: {e}")))?;
    if let Some(path) = &cli.json {
        let mut s = serde_json::to_string_pretty(&out.json).map_err(|e| Failure::Internal(e.to_string()))?;
        s.push('\n');
        std::fs::write(path, s).map_err(|e| Failure::Internal(format!("writing {}: {e}", path.display())))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = std::panic::catch_unwind(|| run(&cli).and_then(|out| emit(&cli, &out).map(|()| out.passed)));
    match result {
        Ok(Ok(true)) => ExitCode::SUCCESS,
        Ok(Ok(false)) => ExitCode::from(1),
        Ok(Err(Failure::Usage(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Ok(Err(Failure::Internal(msg))) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
        // The panic message has already been printed by the hook.
        Err(_) => ExitCode::from(3),
    }
}
