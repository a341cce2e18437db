//! `primcirc`: build `T_p`, check its rank duality, spectrum, Smith form,
//! character-sum identities, and its code and graph readings.
//!
//! Exit codes: 0 consistent with theory, 1 a check failed, 2 invalid input,
//! 3 output could not be written.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(
    name = "primcirc",
    version,
    about = "Circulant matrices from primitive roots"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct PrimeArgs {
    /// Odd prime modulus.
    #[arg(long = "p")]
    pub p: u64,
    /// Primitive root; defaults to the smallest one.
    #[arg(long = "g")]
    pub g: Option<u64>,
}

#[derive(Args, Debug, Clone)]
pub struct OutArgs {
    /// Output format (csv, json or text; graph also takes edge_list or adjacency).
    #[arg(long)]
    pub format: Option<String>,
    /// Write to this file instead of stdout. Relative paths are resolved
    /// against $PRIMCIRC_OUT_DIR when it is set.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print T_p.
    Build {
        #[command(flatten)]
        prime: PrimeArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Rank over the rationals and over F_p.
    Rank {
        #[command(flatten)]
        prime: PrimeArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Eigenvalues, their classification, and the first-moment cross-check.
    Spectrum {
        #[command(flatten)]
        prime: PrimeArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Smith normal form of T_p and the (1, p, …, p, 0, …) pattern check.
    Snf {
        #[command(flatten)]
        prime: PrimeArgs,
        /// Also compute and verify the unimodular multipliers.
        #[arg(long)]
        multipliers: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Audit character-sum identities.
    Verify {
        #[command(flatten)]
        prime: PrimeArgs,
        /// Comma-separated subset of parity, jacobi-gauss, gauss-magnitude, lemma-formula.
        #[arg(
            long,
            default_value = "parity,jacobi-gauss,gauss-magnitude,lemma-formula"
        )]
        which: String,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Check every odd prime up to a bound.
    Scan {
        #[arg(long = "max-p")]
        max_p: u64,
        /// Comma-separated subset of rank, snf, spectrum, lemma.
        #[arg(long, default_value = "rank")]
        checks: String,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Parameters of the code generated by T_p mod p.
    Code {
        #[command(flatten)]
        prime: PrimeArgs,
        /// Number of diagonal blocks.
        #[arg(long, default_value_t = 1)]
        blocks: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// T_p as a weighted directed graph.
    Graph {
        #[command(flatten)]
        prime: PrimeArgs,
        #[command(flatten)]
        out: OutArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Build { prime, out } => commands::build(&prime, &out),
        Command::Rank { prime, out } => commands::rank(&prime, &out),
        Command::Spectrum { prime, out } => commands::spectrum(&prime, &out),
        Command::Snf {
            prime,
            multipliers,
            out,
        } => commands::snf(&prime, multipliers, &out),
        Command::Verify { prime, which, out } => commands::verify(&prime, &which, &out),
        Command::Scan { max_p, checks, out } => commands::scan(max_p, &checks, &out),
        Command::Code { prime, blocks, out } => commands::code(&prime, blocks, &out),
        Command::Graph { prime, out } => commands::graph(&prime, &out),
    };
    match result {
        Ok(outcome) => outcome.exit_code(),
        Err(e) => {
            eprintln!("primcirc: {e}");
            e.exit_code()
        }
    }
}
