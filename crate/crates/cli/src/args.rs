use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact values of divergent alternating series from the intersection of
/// their odd and even partial-sum polynomials.
#[derive(Debug, Parser)]
#[command(name = "antilimit", version)]
pub struct Cli {
    /// Decimal digits for approximate output and numeric checks.
    #[arg(long, global = true, default_value_t = 50)]
    pub precision: u32,

    #[arg(long, global = true, value_enum, default_value_t = Format::Md)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Md,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Eta,
    Beta,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Tables,
    Oracle,
    Hardy,
    Functional,
    All,
}

/// Fit controls shared by the commands that characterize a series.
#[derive(Clone, Debug, Args)]
pub struct FitArgs {
    /// Largest polynomial degree tried before giving up.
    #[arg(long, default_value_t = 64)]
    pub max_degree: usize,

    /// Extra partial sums each fitted polynomial must reproduce.
    #[arg(long = "verify", default_value_t = 3)]
    pub verify_count: usize,

    /// Skip the alternating-divergent classification gate.
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Value assigned to a series, with its intersection points.
    Value {
        /// Series text, e.g. `eta(-3)` or `2*beta(-1)+prepend(1,eta(-2))`.
        #[arg(allow_hyphen_values = true)]
        series: String,
        #[command(flatten)]
        fit: FitArgs,
    },
    /// Characteristic polynomials of a series.
    Poly {
        /// Series text, e.g. `eta(-3)` or `2*beta(-1)+prepend(1,eta(-2))`.
        #[arg(allow_hyphen_values = true)]
        series: String,
        #[command(flatten)]
        fit: FitArgs,
    },
    /// One row of polynomials and value per s, e.g. `table eta -1..-10`.
    Table {
        #[arg(value_enum)]
        family: FamilyArg,
        /// Integer range `a..b` of orders, each <= -1.
        #[arg(allow_hyphen_values = true)]
        range: String,
    },
    /// Every real and complex intersection point with its residual.
    Roots {
        /// Series text, e.g. `eta(-3)` or `2*beta(-1)+prepend(1,eta(-2))`.
        #[arg(allow_hyphen_values = true)]
        series: String,
        #[command(flatten)]
        fit: FitArgs,
    },
    /// Value of one summand of `a+b` given the other.
    Deduce {
        /// The combined series, e.g. `eta(-1)+eta(0)`.
        #[arg(allow_hyphen_values = true)]
        series: String,
        /// The summand whose value is known.
        #[arg(long, allow_hyphen_values = true)]
        known: String,
        /// Its value; computed from the series itself when omitted.
        #[arg(long, allow_hyphen_values = true)]
        value: Option<String>,
        #[command(flatten)]
        fit: FitArgs,
    },
    /// Run the verification suites; exits 1 if any case fails.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Seed for the randomized axiom cases.
        #[arg(long, default_value_t = 20240601)]
        seed: u64,
        /// Randomized cases per axiom.
        #[arg(long, default_value_t = 25)]
        cases: usize,
    },
    /// Sample both polynomials on a grid as CSV.
    Plot {
        /// Series text.
        #[arg(allow_hyphen_values = true)]
        series: String,
        /// Closed interval `a..b`, endpoints as integers, fractions or decimals.
        #[arg(long, allow_hyphen_values = true)]
        range: String,
        /// Number of evenly spaced grid points.
        #[arg(long, default_value_t = 201)]
        samples: usize,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        #[command(flatten)]
        fit: FitArgs,
    },
}
