//! `chainring`: classify, dualize and enumerate `(δ + αu^2)`-constacyclic codes.

mod commands;
mod config;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config::Failure;

#[derive(Parser, Debug)]
#[command(name = "chainring", version, about = "Constacyclic codes of length p^k over F_q[u]/<u^3>")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Canonical triple, torsion profile, classes and size of a code.
    Classify(Common),
    /// Annihilator and Euclidean dual of a code.
    Dual(Common),
    /// Self-dual codes (characteristic 2).
    Selfdual {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Mode::Check)]
        mode: Mode,
    },
    /// Brute-force cross-checks of the closed forms.
    Oracle {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Scope::Crosscheck)]
        scope: Scope,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Check,
    Enumerate,
    Count,
    Census,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    Ideals,
    Selfdual,
    Crosscheck,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Characteristic.
    #[arg(long)]
    p: Option<u32>,
    /// Extension degree of the residue field.
    #[arg(long)]
    m: Option<usize>,
    /// Field modulus, little-endian coefficients, e.g. `1,1,1` for z^2 + z + 1.
    #[arg(long, value_delimiter = ',')]
    modulus: Option<Vec<u32>>,
    /// Length exponent: codes have length p^k.
    #[arg(long)]
    k: Option<u32>,
    /// An integer or a comma-separated coefficient list.
    #[arg(long)]
    alpha: Option<String>,
    /// An integer or a comma-separated coefficient list.
    #[arg(long)]
    delta: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Cap on the candidates visited by exhaustive sweeps.
    #[arg(long, default_value_t = chainring_codes::oracle::DEFAULT_BUDGET)]
    budget: u128,
    /// Write here instead of stdout.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    /// Read the code from this JSON file instead of stdin.
    #[arg(long = "in")]
    input: Option<std::path::PathBuf>,
}

fn run(cli: Cli) -> Result<(), Failure> {
    let (common, doc) = match cli.command {
        Command::Classify(c) => {
            let job = config::Job::load(&c, "classify", true)?;
            (c, commands::classify(&job)?)
        }
        Command::Dual(c) => {
            let job = config::Job::load(&c, "dual", true)?;
            (c, commands::dual(&job)?)
        }
        Command::Selfdual { common, mode } => {
            let mut job = config::Job::load(&common, "selfdual", mode == Mode::Check)?;
            job.echo.mode = Some(mode);
            let doc = commands::selfdual(&job, mode)?;
            (common, doc)
        }
        Command::Oracle { common, scope } => {
            let mut job = config::Job::load(&common, "oracle", false)?;
            job.echo.scope = Some(scope);
            let doc = commands::oracle(&job, scope)?;
            (common, doc)
        }
    };
    output::emit(&doc, common.format, common.out.as_deref())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
