//! `padebary` — build rational approximants from power-series coefficients,
//! evaluate them on grids, and regenerate the two bundled experiments.
//!
//! Exit codes: 0 on success, 2 on a numerical failure (singular or
//! degenerate configuration), 3 on invalid input (bad flags, malformed
//! files, series too short).

mod commands;
mod parse;
mod wire;

use clap::{Parser, Subcommand, ValueEnum};

/// Command-line front end for the padebary approximation library.
#[derive(Parser)]
#[command(name = "padebary", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFunction {
    /// tan(omega t) / (omega t); takes --omega.
    #[value(name = "tan-over-t")]
    TanOverT,
    /// ln(1 + t) / t.
    #[value(name = "log1p-over-t")]
    Log1pOverT,
    /// e^t.
    Exp,
    /// 1 / (1 - r t); takes --ratio.
    Geometric,
    /// Coefficients read from --file (series JSON or a bare JSON array).
    File,
}

#[derive(Clone, Copy, ValueEnum)]
enum ApproxKind {
    /// [p/q] quotient with both sides computed; takes --p, --q.
    Pade,
    /// (p/q) quotient with a prescribed denominator; takes --p, --b.
    Pta,
    /// Barycentric form 1 from node families; takes --poles, --zeros.
    Bpa1,
    /// Barycentric form 2 from node families; takes --poles, --zeros.
    Bpa2,
    /// Form-1 quotient with prescribed denominator weights; takes --poles, --zeros, --weights.
    Bpta1,
    /// Form-2 quotient with prescribed denominator weights; takes --poles, --zeros, --weights.
    Bpta2,
    /// Simple-pole sum of k+1 terms; takes --k.
    Pfpa,
}

#[derive(Clone, Copy, ValueEnum)]
enum Example {
    /// tan(4t)/(4t), p = q = 4, the first poles/zeros as nodes; writes
    /// figure1.csv and (perturbed rebuild) figure2.csv.
    Example1,
    /// ln(1+t)/t, p = q = 4, equidistant nodes in [-10,-1] and [-10,-2];
    /// writes figure3.csv.
    Example2,
}

#[derive(Subcommand)]
enum Command {
    /// Generate power-series coefficients and write them as JSON.
    Gen {
        /// Which series to generate.
        #[arg(long, value_enum)]
        function: GenFunction,
        /// Frequency for tan-over-t.
        #[arg(long, default_value_t = 1.0)]
        omega: f64,
        /// Ratio for geometric, as a complex scalar such as "2" or "1+0.5i".
        #[arg(long, default_value = "2", allow_hyphen_values = true)]
        ratio: String,
        /// Input path for --function file.
        #[arg(long)]
        file: Option<String>,
        /// Highest coefficient index to emit (series holds order+1 coefficients).
        #[arg(long)]
        order: Option<usize>,
        /// Output path for the series JSON.
        #[arg(long)]
        out: String,
    },
    /// Construct an approximant from a series and write it as tagged JSON.
    Approx {
        /// Construction to run.
        #[arg(long, value_enum)]
        kind: ApproxKind,
        /// Series JSON path, or an inline JSON value such as "[5,8,14,26]".
        #[arg(long)]
        series: String,
        /// Numerator grade.
        #[arg(long)]
        p: Option<usize>,
        /// Denominator grade.
        #[arg(long)]
        q: Option<usize>,
        /// Term count minus one for pfpa.
        #[arg(long)]
        k: Option<usize>,
        /// Prescribed denominator coefficients b_0..b_q for pta (comma-separated complex).
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        /// Numerator node family (comma-separated complex).
        #[arg(long, allow_hyphen_values = true)]
        poles: Option<String>,
        /// Denominator node family (comma-separated complex).
        #[arg(long, allow_hyphen_values = true)]
        zeros: Option<String>,
        /// Prescribed denominator weights for bpta1/bpta2 (comma-separated complex).
        #[arg(long, allow_hyphen_values = true)]
        weights: Option<String>,
        /// Output path for the approximant JSON.
        #[arg(long)]
        out: String,
    },
    /// Evaluate an approximant on a grid and write a CSV error report.
    Eval {
        /// Approximant JSON path.
        #[arg(long)]
        approx: String,
        /// Grid "start:stop:count" (inclusive, count >= 2).
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
        /// Analytic reference: tan-over-t:OMEGA, log1p-over-t, exp,
        /// geometric:R, or constant:V.
        #[arg(long = "ref", default_value = "constant:0")]
        reference: String,
        /// Output CSV path.
        #[arg(long)]
        out: String,
    },
    /// Print the power-series coefficients d_0..d_N of an approximant.
    Expand {
        /// Approximant JSON path.
        #[arg(long)]
        approx: String,
        /// Highest coefficient index to print.
        #[arg(long)]
        order: usize,
    },
    /// Rerun the tangent experiment from perturbed coefficients over many
    /// seeds and write a per-seed error summary CSV.
    Perturb {
        /// Uniform perturbation half-width applied to each coefficient.
        #[arg(long, default_value_t = 1e-4)]
        eps: f64,
        /// Seeds: a range "3..22" (inclusive) or a comma list "3,5,8".
        /// The default range avoids seeds whose perturbed series put an
        /// approximant pole so close to the origin that the rebuild is
        /// refused as numerically degenerate (such seeds are reported as
        /// failed rows and make the run exit with code 2).
        #[arg(long, default_value = "3..22")]
        seeds: String,
        /// Output CSV path.
        #[arg(long)]
        out: String,
    },
    /// Regenerate the bundled experiments as plot-ready CSV files.
    Reproduce {
        /// Which experiment to regenerate.
        #[arg(value_enum)]
        example: Example,
        /// Directory for the emitted CSV files.
        #[arg(long, default_value = ".")]
        out: String,
        /// Seed for the perturbed rebuild of example1 (default 42).
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Perturbation half-width for the perturbed rebuild of example1.
        #[arg(long, default_value_t = 1e-4)]
        eps: f64,
    },
}

/// CLI failure split along the exit-code contract.
#[derive(Debug)]
enum CliError {
    /// Exit 3: malformed flags, files, or out-of-contract requests.
    Input(String),
    /// Exit 2: a construction or expansion failed numerically.
    Numerical(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 3,
            CliError::Numerical(_) => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(msg) | CliError::Numerical(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<padebary::Error> for CliError {
    fn from(e: padebary::Error) -> Self {
        if e.is_input_error() {
            CliError::Input(e.to_string())
        } else {
            CliError::Numerical(e.to_string())
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Input(format!("malformed JSON: {e}"))
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand
                | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    if let Err(e) = commands::run(cli.command) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
