//! Command-line front end for the [`minsos`] library.
//!
//! Subcommands either emit data (`solve`, `table`, `bounds`, `figure`,
//! `endo-search`) or re-derive a body of results and diff them (`verify`).
//! Exit codes: 0 on success, 1 when a verification suite finds a mismatch or
//! output cannot be written, 2 on bad arguments.

mod commands;
mod output;
mod verify;

use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::output::Format;

#[derive(Parser)]
#[command(
    name = "minsos",
    version,
    about = "Minimal sum of squares over the partitions of n with nonnegative rank \
             (OEIS A353044), with the cubic localization of the optimal largest \
             part and the matching endofunction extremes"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Write to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Largest n the enumeration-backed checks may expand fully (hard limit 70).
    #[arg(long, global = true, default_value_t = minsos::partitions::DEFAULT_ENUMERATION_CAP)]
    cap: u64,

    /// Use the single-threaded scans even when the parallel ones are built in.
    #[arg(long, global = true)]
    deterministic: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute m_n together with every optimal partition.
    Solve {
        /// Total being partitioned.
        n: u64,
    },
    /// Tabulate n, m_n, t_n and the optimal partitions over a range.
    Table {
        /// First n.
        #[arg(long, default_value_t = 1)]
        from: u64,
        /// Last n.
        #[arg(long, default_value_t = 210)]
        to: u64,
    },
    /// Re-derive a body of results two ways and report every mismatch.
    Verify {
        /// Which suite to run.
        #[arg(value_enum)]
        suite: verify::Suite,
        /// First n (default depends on the suite).
        #[arg(long)]
        from: Option<u64>,
        /// Last n (default depends on the suite).
        #[arg(long)]
        to: Option<u64>,
    },
    /// Report the cubic localization of the optimal largest part for one n.
    Bounds {
        /// Total being partitioned (at least 6).
        n: u64,
    },
    /// Emit the data behind one of the standard figures.
    Figure {
        /// 1 = optimal partitions of n, 2 = root bracket and t_n over a
        /// range, 3 = envelopes around the reduced objective for one n.
        which: u8,
        /// n for figures 1 and 3 (default 100).
        #[arg(long)]
        n: Option<u64>,
        /// First n for figure 2 (default 6).
        #[arg(long)]
        from: Option<u64>,
        /// Last n for figure 2 (default 5000).
        #[arg(long)]
        to: Option<u64>,
    },
    /// Exhaustively search all n^n endofunctions for the extreme growth
    /// ratio deg(f^2)/deg(f)^(3/2).
    EndoSearch {
        /// Ground-set size (at most 8).
        n: u64,
    },
}

/// Options every subcommand receives alongside its own arguments.
pub struct RunConfig {
    pub format: Format,
    pub out: Option<PathBuf>,
    pub cap: u64,
    pub deterministic: bool,
}

/// How a command went wrong, split by the exit code it must produce.
pub enum Failure {
    /// Bad arguments or an unsupported combination: exit 2.
    Usage(String),
    /// Output could not be produced: exit 1.
    Io(String),
}

impl From<minsos::Error> for Failure {
    fn from(e: minsos::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let cfg = RunConfig {
        format: cli.format,
        out: cli.out,
        cap: cli.cap,
        deterministic: cli.deterministic,
    };
    match cli.command {
        Command::Solve { n } => commands::solve(&cfg, n),
        Command::Table { from, to } => commands::table(&cfg, from, to),
        Command::Verify { suite, from, to } => verify::run(&cfg, suite, from, to),
        Command::Bounds { n } => commands::bounds(&cfg, n),
        Command::Figure { which, n, from, to } => commands::figure(&cfg, which, n, from, to),
        Command::EndoSearch { n } => commands::endo_search(&cfg, n),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
