//! `daa`: build compound doubly-affine arrays, check their properties and
//! compare their exact spectra with the closed-form predictions.
//!
//! Exit codes: 0 success, 1 a property or prediction check failed, 2 bad input.

mod commands;
mod document;
mod error;

use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use daa_core::Variant;

use commands::{AnalyzeArgs, GenArgs, PropertyArg};

fn parse_variant(s: &str) -> Result<Variant, String> {
    s.parse().map_err(|e: daa_core::Error| e.to_string())
}

#[derive(Parser)]
#[command(
    name = "daa",
    version,
    about = "Compound doubly-affine arrays with exact spectra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Inputs are fixture names or files (`.json` documents, otherwise plain text).
#[derive(Subcommand)]
enum Command {
    /// Compound two seeds.
    Gen {
        seed_a: String,
        seed_b: String,
        /// aggregated, dispersed, rev-aggregated, rev-dispersed or gapda
        #[arg(long, value_parser = parse_variant)]
        variant: Variant,
        /// Cover class; defaults to the number of axes for full-cover seeds, else 1.
        #[arg(long)]
        k: Option<u32>,
        /// Output file; the JSON document goes to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact spectral report, optionally checked against a recipe.
    Analyze {
        input: String,
        #[arg(long, value_parser = parse_variant)]
        variant: Option<Variant>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        seed_a: Option<String>,
        #[arg(long)]
        seed_b: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Check one property; prints the first violation.
    Verify {
        input: String,
        #[arg(long, value_enum)]
        property: PropertyArg,
        /// Cover class for `fullcover`; defaults to the number of axes.
        #[arg(long)]
        k: Option<u32>,
    },
    /// List fixtures and GAP pairs.
    Catalog {
        #[arg(long)]
        order: Option<usize>,
        /// Print one fixture as a JSON document instead.
        #[arg(long, value_name = "NAME")]
        dump: Option<String>,
    },
    /// Conjugate by the perfect shuffle with group size `m`.
    Shuffle {
        input: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout = io::stdout().lock();
    let outcome = match &cli.command {
        Command::Gen {
            seed_a,
            seed_b,
            variant,
            k,
            out,
        } => commands::gen(
            &GenArgs {
                seed_a,
                seed_b,
                variant: *variant,
                k: *k,
                out: out.as_deref(),
            },
            &mut stdout,
        ),
        Command::Analyze {
            input,
            variant,
            k,
            seed_a,
            seed_b,
            json,
        } => commands::analyze(
            &AnalyzeArgs {
                input,
                variant: *variant,
                k: *k,
                seed_a: seed_a.as_deref(),
                seed_b: seed_b.as_deref(),
                json: *json,
            },
            &mut stdout,
        ),
        Command::Verify { input, property, k } => {
            commands::verify(input, *property, *k, &mut stdout)
        }
        Command::Catalog { order, dump } => commands::catalog(*order, dump.as_deref(), &mut stdout),
        Command::Shuffle { input, m, out } => {
            commands::shuffle(input, *m, out.as_deref(), &mut stdout)
        }
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("daa: {e}");
            e.exit_code()
        }
    }
}
