//! Command-line front end: compute single values, sweep c-grids, run the
//! verification suite, and dump Bessel zeros, with machine-readable output.

// negated comparisons like `!(x > 0.0)` reject NaN along with out-of-range values
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod output;
mod run;

use clap::{Args, Parser, Subcommand, ValueEnum};
use output::Format;

#[derive(Parser)]
#[command(
    name = "zvar",
    about = "Barnes and Bessel zeta functions and the variation of their derivatives at zero",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one quantity at one parameter value.
    Compute(ComputeArgs),
    /// Run the identity / cross-method verification suites.
    Verify(VerifyArgs),
    /// Evaluate a quantity over a grid of parameter values.
    Sweep(SweepArgs),
    /// Print the first N positive zeros of J_0.
    Zeros(ZerosArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    /// ζ_c'(0)
    ZetaCPrime0,
    /// d/dc ζ_c'(0)
    DzetaDc,
    /// ζ_c(0)
    ZetaCAt0,
    /// ξ_c'(0)
    XiCPrime0,
    /// d/dc ξ_c'(0)
    DxiDc,
    /// ξ_0 at 2s (takes --s)
    Xi0,
    /// d/dα ζ'_{S_α}(0) for the sector of angle π/c
    SectorVariation,
}

impl Quantity {
    pub fn as_str(self) -> &'static str {
        match self {
            Quantity::ZetaCPrime0 => "zeta-c-prime0",
            Quantity::DzetaDc => "dzeta-dc",
            Quantity::ZetaCAt0 => "zeta-c-at0",
            Quantity::XiCPrime0 => "xi-c-prime0",
            Quantity::DxiDc => "dxi-dc",
            Quantity::Xi0 => "xi0",
            Quantity::SectorVariation => "sector-variation",
        }
    }

    /// The grid/argument variable is s rather than c.
    pub fn takes_s(self) -> bool {
        matches!(self, Quantity::Xi0)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Auto,
    Integral,
    Sector,
    Closed,
}

#[derive(Args)]
pub struct ComputeArgs {
    /// Quantity to compute.
    #[arg(long, value_enum)]
    quantity: Quantity,
    /// Parameter c (for every quantity except xi0).
    #[arg(long)]
    c: Option<f64>,
    /// Argument s (xi0 only).
    #[arg(long)]
    s: Option<f64>,
    #[arg(long, value_enum, default_value = "auto")]
    method: Method,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Required accuracy: records whose error estimate exceeds this are
    /// treated as numerical failures.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Write the record to a file instead of standard output.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    All,
    Identities,
    CrossMethods,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    suite: Suite,
    /// Override every check tolerance.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    quantity: Quantity,
    /// Lower end of the grid (c, or s for xi0).
    #[arg(long)]
    c_min: f64,
    /// Upper end of the grid.
    #[arg(long)]
    c_max: f64,
    /// Grid step, > 0.
    #[arg(long)]
    step: f64,
    #[arg(long, value_enum, default_value = "auto")]
    method: Method,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Required accuracy: rows whose error estimate exceeds this are marked
    /// as errors.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Worker threads (default: ZVAR_JOBS or the number of cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Write the table to a file instead of standard output.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
pub struct ZerosArgs {
    /// How many zeros to print.
    #[arg(long)]
    count: u32,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

// Exit codes: 0 success, 1 verification/sweep failure, 2 usage error,
// 3 numerical failure.
fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Compute(args) => run::compute(&args),
        Command::Verify(args) => run::verify(&args),
        Command::Sweep(args) => run::sweep(&args),
        Command::Zeros(args) => run::zeros(&args),
    };
    std::process::exit(code);
}
