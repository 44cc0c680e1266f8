//! Command-line front end: spectrum enumeration, eigenfunction evaluation,
//! observables, figure data, and the verification suite.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input,
//! 3 golden-table mismatch. Every error is a single line on stderr that
//! starts with the violated rule.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use halfspin_core::Constants;

mod commands;
mod fmt;
mod verify;

#[derive(Parser)]
#[command(
    name = "halfspin",
    version,
    about = "Half-integral-spin eigenfunctions: spectrum, observables, and verification oracles",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the admissible spectrum table
    Table(TableArgs),
    /// Evaluate a normalized eigenfunction
    Eigfn(EigfnArgs),
    /// Sample a density profile with ring diagnostics
    Density(DensityArgs),
    /// Mean radius of a state, with the closed form where available
    Radius(RadiusArgs),
    /// Run the full verification suite
    Verify(VerifyArgs),
    /// Run an individual numerical oracle
    Oracle(OracleArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Args)]
pub struct ConstantArgs {
    /// Structure constant gamma = sqrt(alpha/beta)
    #[arg(long, default_value_t = 1.0)]
    pub gamma: f64,
    /// Action scale
    #[arg(long, default_value_t = 1.0)]
    pub hbar: f64,
    /// Angular frequency used only for energy conversion
    #[arg(long, default_value_t = 1.0)]
    pub omega: f64,
}

impl ConstantArgs {
    pub fn constants(&self) -> Result<Constants, CliError> {
        Constants::new(self.hbar, self.gamma, self.omega).ok_or_else(|| CliError {
            code: 2,
            message: "BadConstants: hbar, gamma, and omega must be positive and finite".into(),
        })
    }
}

#[derive(Args)]
pub struct GridArgs {
    /// Upper end of the dimensionless radial domain
    #[arg(long, default_value_t = 12.0)]
    pub rho_max: f64,
    /// Number of grid intervals (at least 100)
    #[arg(long, default_value_t = 2000)]
    pub npoints: usize,
}

impl GridArgs {
    pub fn grid(&self) -> Result<halfspin_core::RadialGrid, CliError> {
        halfspin_core::RadialGrid::new(self.rho_max, self.npoints).map_err(CliError::from)
    }
}

#[derive(Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Destination path (standard output when omitted)
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args)]
pub struct TableArgs {
    /// Largest lambda block to enumerate
    #[arg(long)]
    pub lambda_max: u32,
    /// Exit 3 if the enumeration differs from the bundled reference table
    #[arg(long)]
    pub golden_check: bool,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args)]
pub struct EigfnArgs {
    #[arg(long)]
    pub lambda: u32,
    /// Magnetic number as the integer 2m
    #[arg(long, allow_hyphen_values = true)]
    pub m2: i64,
    /// Evaluate at this physical radius (radial profile when omitted)
    #[arg(long)]
    pub r: Option<f64>,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub theta: f64,
    /// Report the dimensionless radial axis
    #[arg(long)]
    pub dimensionless: bool,
    #[command(flatten)]
    pub constants: ConstantArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args)]
pub struct DensityArgs {
    #[arg(long)]
    pub lambda: u32,
    /// Magnetic number as the integer 2m
    #[arg(long, allow_hyphen_values = true)]
    pub m2: i64,
    /// Report the dimensionless radial axis
    #[arg(long)]
    pub dimensionless: bool,
    #[command(flatten)]
    pub constants: ConstantArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args)]
pub struct RadiusArgs {
    #[arg(long)]
    pub lambda: u32,
    /// Magnetic number as the integer 2m
    #[arg(long, allow_hyphen_values = true)]
    pub m2: i64,
    /// Report the dimensionless mean radius instead of the physical one
    #[arg(long)]
    pub dimensionless: bool,
    #[command(flatten)]
    pub constants: ConstantArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Basis cutoff for the operator oracle (at least 4)
    #[arg(long, default_value_t = 8)]
    pub nmax: usize,
    /// Comma-separated list of structure constants to sweep
    #[arg(long, default_value = "1")]
    pub gamma: String,
    #[arg(long, default_value_t = 1.0)]
    pub hbar: f64,
    /// Largest lambda for the series-vs-finite-difference sweep
    #[arg(long, default_value_t = 10)]
    pub lambda_max: u32,
    #[command(flatten)]
    pub grid: GridArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleKind {
    /// Finite-difference eigenvalues against the analytic spectrum
    Fd,
    /// Closed-form and finite-difference checks of one series solution
    Series,
}

#[derive(Args)]
pub struct OracleArgs {
    #[arg(long, value_enum, default_value_t = OracleKind::Fd)]
    pub kind: OracleKind,
    /// Magnetic number as the integer 2m
    #[arg(long, allow_hyphen_values = true)]
    pub m2: i64,
    /// Number of eigenvalues (fd oracle)
    #[arg(long, default_value_t = 3)]
    pub count: usize,
    /// State selector (series oracle)
    #[arg(long)]
    pub lambda: Option<u32>,
    #[command(flatten)]
    pub constants: ConstantArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

/// Error carrying its process exit code.
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl From<halfspin_core::Error> for CliError {
    fn from(err: halfspin_core::Error) -> Self {
        CliError {
            code: 2,
            message: err.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Table(args) => commands::table(&args),
        Command::Eigfn(args) => commands::eigfn(&args),
        Command::Density(args) => commands::density(&args),
        Command::Radius(args) => commands::radius(&args),
        Command::Verify(args) => verify::run(&args),
        Command::Oracle(args) => commands::oracle(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
