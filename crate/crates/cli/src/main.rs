//! `dcn`: generate DCell / crossed cube / BCDC topologies, build and verify
//! structure cuts, certify minima by exhaustive search, and tabulate it all.

mod commands;
mod instance;
mod manifest;
mod table;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dcn_core::Error;

#[derive(Parser, Debug)]
#[command(name = "dcn", version, about = "Structure connectivity of data-center network topologies")]
struct Cli {
    /// Worker threads for the exhaustive searches (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Accepted and ignored; every algorithm here is deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    Gen(commands::GenArgs),
    Cut(commands::CutArgs),
    Oracle(commands::OracleArgs),
    Table(table::TableArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    /// Verification failed, a table row failed, or an I/O error.
    Failed = 1,
    /// Out of range or no construction.
    Rejected = 2,
    /// An oracle hit its budget; the output is a partial result.
    Budget = 3,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: --jobs: {e}");
            return ExitCode::from(Exit::Rejected as u8);
        }
    }
    let run = match &cli.command {
        Command::Gen(a) => commands::gen(a),
        Command::Cut(a) => commands::cut(a),
        Command::Oracle(a) => commands::oracle(a),
        Command::Table(a) => table::table(a),
    };
    let code = match run {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<Error>() {
                Some(Error::Parse { .. }) | None => Exit::Failed,
                Some(_) => Exit::Rejected,
            }
        }
    };
    ExitCode::from(code as u8)
}
