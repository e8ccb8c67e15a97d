//! The `picard` command-line tool: file formats, subcommands and argument
//! parsing.

pub mod commands;
pub mod format;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub use commands::Outcome;

#[derive(Debug, Parser)]
#[command(
    name = "picard",
    version,
    about = "Decompose Picard modular group elements into generators"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a matrix file is an element of PU(2,1; O_d).
    Verify {
        #[arg(long)]
        input: PathBuf,
        /// Expected ring; a file with a different d is rejected.
        #[arg(long)]
        d: Option<i64>,
    },
    /// Decompose a matrix file into a word in T1, T2, M, R.
    Decompose {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        d: Option<i64>,
        /// Word file destination; stdout when omitted (the summary then goes
        /// to stderr).
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        radius: u32,
    },
    /// Evaluate a word file to a matrix file.
    Compose {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        d: Option<i64>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Write seeded random group elements to a directory.
    Random {
        #[arg(long)]
        d: i64,
        #[arg(long, default_value_t = 10)]
        length: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: u64,
        /// Output directory.
        #[arg(long)]
        output: PathBuf,
    },
    /// Check the presentation relators (d = 3).
    Relations {
        #[arg(long)]
        d: i64,
    },
    /// Contraction statistics over seeded random elements.
    Stats {
        #[arg(long)]
        d: i64,
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long, default_value_t = 20)]
        length: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        radius: u32,
        /// Machine-readable JSON table.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

pub fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Verify { input, d } => commands::verify(&input, d),
        Command::Decompose {
            input,
            d,
            output,
            radius,
        } => commands::decompose_file(&input, d, output.as_deref(), radius),
        Command::Compose { input, d, output } => commands::compose(&input, d, output.as_deref()),
        Command::Random {
            d,
            length,
            seed,
            count,
            output,
        } => commands::random(d, length, seed, count, &output),
        Command::Relations { d } => commands::relations(d),
        Command::Stats {
            d,
            samples,
            length,
            seed,
            radius,
            output,
        } => commands::stats(d, samples, length, seed, radius, output.as_deref()),
    }
}
