//! `trilin`: command-line front end to `trilin-core`.

mod commands;
mod exit;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use exit::Failure;

#[derive(Parser, Debug)]
#[command(name = "trilin", version, about = "Pump-depleted parametric amplification: symbolic expansion, closed forms and Fock-space oracle")]
struct Cli {
    /// Directory holding the printed-operator fixtures and SHA256SUMS.
    #[arg(long, global = true, default_value = "fixtures")]
    fixtures: PathBuf,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Heisenberg operator of one mode to a given χ-order, as canonical JSON.
    Expand(ExpandArgs),
    /// Exact verification checks; exit status 1 on any mismatch.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Closed-form quantities over a range of pump amplitudes, as CSV.
    Sweep(SweepArgs),
    /// All moments and variances at one parameter point.
    Moments(MomentsArgs),
    /// Error scaling of the closed forms against the Fock-space oracle.
    Compare(CompareArgs),
}

#[derive(Args, Debug)]
struct ExpandArgs {
    #[arg(long)]
    mode: String,
    #[arg(long)]
    order: u32,
    /// Output file; stdout if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Abort once an intermediate polynomial exceeds this many terms.
    #[arg(long, default_value_t = trilin_core::algebra::DEFAULT_TERM_CAP)]
    term_cap: usize,
}

#[derive(Subcommand, Debug)]
enum VerifyTarget {
    /// Order-8 operators against the checked-in printed expansions.
    AppendixA {
        /// a, b, c or all.
        #[arg(long, default_value = "all")]
        mode: String,
    },
    /// Pattern series against closed-form Taylor coefficients.
    Series {
        #[arg(long, default_value_t = trilin_core::series::DEFAULT_MAX_ORDER)]
        max_order: u32,
    },
    /// Integer-sequence table.
    Table1,
    /// Canonical commutators of the truncated operators.
    Commutators {
        #[arg(long, default_value_t = 8)]
        order: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Branch {
    Full,
    StrongPump,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long)]
    chi: f64,
    #[arg(long)]
    alpha_min: f64,
    #[arg(long)]
    alpha_max: f64,
    #[arg(long)]
    steps: usize,
    /// Comma-separated quantity names, e.g. V_xc,V_pc.
    #[arg(long, value_delimiter = ',', required = true)]
    quantities: Vec<String>,
    #[arg(long, value_enum, default_value_t = Branch::Full)]
    branch: Branch,
    /// Output file; stdout if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct MomentsArgs {
    #[arg(long)]
    alpha: f64,
    #[arg(long)]
    chi: f64,
    /// Also run the Fock-space oracle and report the differences.
    #[arg(long)]
    oracle: bool,
    #[arg(long)]
    json: bool,
    #[arg(long, default_value_t = trilin_core::fock::DEFAULT_TAIL_TOL)]
    tail_tol: f64,
}

#[derive(Args, Debug)]
struct CompareArgs {
    /// Smallest α of each scaling triplet (α, 2α, 4α).
    #[arg(long, default_value_t = 10.0)]
    alpha: f64,
    #[arg(long, value_delimiter = ',', default_values_t = vec![0.5, 1.0, 2.0])]
    chi_prime: Vec<f64>,
    #[arg(long, default_value_t = trilin_core::fock::DEFAULT_TAIL_TOL)]
    tail_tol: f64,
    /// Output file; stdout if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn configure_threads() -> Result<(), Failure> {
    let threads = match std::env::var("TRILIN_THREADS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => n,
            _ => return Err(Failure::Usage(format!("TRILIN_THREADS must be a positive integer, got '{v}'"))),
        },
        Err(_) => num_cpus::get_physical(),
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::Resource(format!("cannot start thread pool: {e}")))
}

fn run(cli: Cli) -> Result<(), Failure> {
    configure_threads()?;
    match cli.command {
        Command::Expand(a) => commands::expand(&a.mode, a.order, a.term_cap, a.out.as_deref()),
        Command::Verify { target } => match target {
            VerifyTarget::AppendixA { mode } => commands::verify_appendix_a(&mode, &cli.fixtures),
            VerifyTarget::Series { max_order } => commands::verify_series(max_order),
            VerifyTarget::Table1 => commands::verify_table1(),
            VerifyTarget::Commutators { order } => commands::verify_commutators(order),
        },
        Command::Sweep(a) => commands::sweep(
            &commands::SweepSpec {
                chi: a.chi,
                alpha_min: a.alpha_min,
                alpha_max: a.alpha_max,
                steps: a.steps,
                quantities: a.quantities,
                strong_pump: a.branch == Branch::StrongPump,
            },
            a.out.as_deref(),
        ),
        Command::Moments(a) => commands::moments(a.alpha, a.chi, a.oracle, a.json, a.tail_tol),
        Command::Compare(a) => commands::compare(a.alpha, &a.chi_prime, a.tail_tol, a.out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if let Some(msg) = f.message() {
                eprintln!("trilin: {msg}");
            }
            ExitCode::from(f.code())
        }
    }
}
