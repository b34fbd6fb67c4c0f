//! Command-line front end: argument definitions, command execution and
//! output formatting.

pub mod commands;
pub mod record;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::record::{write_csv, write_json, OutputRecord};

#[derive(Debug, Parser)]
#[command(
    name = "quadrupole",
    version,
    about = "Mathieu spectrum and critical strengths of a charged particle in a planar quadrupole field"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    pub format: Format,

    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Characteristic value a_m(q) or b_m(q).
    Char(CharArgs),
    /// Critical strengths xi_c at which the first characteristic curves cross zero.
    Table(TableArgs),
    /// Angular channels at a quadrupole strength and their radial regimes.
    Channels(ChannelsArgs),
    /// Pairing gap b_{m+1}(q) - a_m(q).
    Gap(GapArgs),
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("strength").required(true).args(["q", "xi"])))]
pub struct CharArgs {
    /// even-pi, even-2pi, odd-2pi, odd-pi, or a label such as a0 or b3.
    #[arg(long)]
    pub class: String,

    /// Mathieu order m; implied when --class is a label.
    #[arg(long)]
    pub order: Option<u32>,

    /// Mathieu parameter q.
    #[arg(long, allow_negative_numbers = true)]
    pub q: Option<f64>,

    /// Quadrupole strength xi (q = 4 xi).
    #[arg(long, allow_negative_numbers = true)]
    pub xi: Option<f64>,

    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,

    /// Also compute the value by shooting on the ODE.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Number of (a_m, b_{m+1}) pairs.
    #[arg(long, default_value_t = 5)]
    pub max_pairs: u32,

    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct ChannelsArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub xi: f64,

    #[arg(long, default_value_t = 12)]
    pub max_order: u32,
}

#[derive(Debug, Args)]
pub struct GapArgs {
    #[arg(long)]
    pub m: u32,

    /// Comma-separated list of q values.
    #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
    pub q: Vec<f64>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Solver(#[from] quadrupole_core::Error),
    #[error("{0}")]
    Io(#[from] io::Error),
}

impl CliError {
    /// 2 for usage errors, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Solver(e) if e.is_domain_error() => 2,
            _ => 1,
        }
    }
}

pub fn execute(command: &Command) -> Result<Vec<OutputRecord>, CliError> {
    match command {
        Command::Char(args) => commands::cmd_char(args),
        Command::Table(args) => commands::cmd_table(args),
        Command::Channels(args) => commands::cmd_channels(args),
        Command::Gap(args) => commands::cmd_gap(args),
    }
}

pub fn emit<W: Write>(records: &[OutputRecord], format: Format, out: W) -> io::Result<()> {
    match format {
        Format::Csv => write_csv(records, out),
        Format::Json => write_json(records, out),
    }
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    let records = execute(&cli.command)?;
    match &cli.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            emit(&records, cli.format, &mut w)?;
            w.flush()?;
        }
        None => emit(&records, cli.format, io::stdout().lock())?,
    }
    Ok(())
}
