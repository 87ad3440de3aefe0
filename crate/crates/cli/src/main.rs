use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod input;

#[derive(Parser)]
#[command(name = "gmd", version, about = "Minimum distance functions, v-numbers and evaluation codes of graded ideals")]
struct Cli {
    /// Cap on worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum OrderArg {
    Lex,
    Grlex,
    Grevlex,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum KindArg {
    Delta,
    Fp,
    Hyp,
    Vasconcelos,
}

#[derive(Args, Clone, Copy, Debug, Default)]
pub struct Output {
    /// Print JSON instead of a table.
    #[arg(long, conflicts_with = "csv")]
    pub json: bool,
    /// Print CSV (matrix commands).
    #[arg(long)]
    pub csv: bool,
}

#[derive(Args, Clone, Copy, Debug, Default)]
pub struct Assertions {
    /// Take the ideal to be unmixed without proof.
    #[arg(long)]
    pub assert_unmixed: bool,
    /// Take the ideal to be radical without proof.
    #[arg(long)]
    pub assert_radical: bool,
    /// Take the ideal to be a complete intersection without proof.
    #[arg(long)]
    pub assert_ci: bool,
}

#[derive(Args, Clone, Debug)]
pub struct Common {
    /// Monomial order, overriding the one in the file.
    #[arg(long, value_enum)]
    pub order: Option<OrderArg>,
    /// Maximum number of candidates enumerated per cell.
    #[arg(long, env = "GMD_BUDGET", default_value_t = 10_000_000)]
    pub budget: u128,
    #[command(flatten)]
    pub assertions: Assertions,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension, degree, h-vector, regularity, v-number and socle degree.
    Invariants {
        file: PathBuf,
        /// Search cap for v-numbers when the regularity is unknown.
        #[arg(long, default_value_t = 50)]
        bound: u32,
        #[command(flatten)]
        common: Common,
    },
    /// A matrix of delta, fp, hyp or vasconcelos values.
    Matrix {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "delta")]
        kind: KindArg,
        #[arg(long, default_value_t = 1)]
        dmax: u32,
        #[arg(long, default_value_t = 1)]
        rmax: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Parameters and generalized Hamming weights of an evaluation code.
    Code {
        file: PathBuf,
        #[arg(long)]
        d: u32,
        #[arg(long, conflicts_with = "hierarchy")]
        r: Option<usize>,
        /// All weights from r = 1 to the dimension.
        #[arg(long)]
        hierarchy: bool,
        /// Compare with delta of the vanishing ideal.
        #[arg(long)]
        crosscheck: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Reduced Gröbner basis and Hilbert data of the ideal of a point set.
    VanishingIdeal {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Checks the applicable properties of the invariant matrices.
    Check {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        dmax: u32,
        #[arg(long, default_value_t = 2)]
        rmax: usize,
        #[arg(long, default_value_t = 50)]
        bound: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Minimum distance bounds and conjectures for complete intersections.
    CiProbe {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Prints a matrix saved with `matrix --json`.
    Render {
        file: PathBuf,
        #[arg(long)]
        csv: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global() {
            eprintln!("gmd: {e}");
            return ExitCode::from(1);
        }
    }
    let echo: Vec<String> = std::env::args().collect();
    let echo = echo.join(" ");
    let result = match cli.command {
        Command::Invariants { file, bound, common } => commands::invariants(&echo, &file, bound, &common),
        Command::Matrix {
            file,
            kind,
            dmax,
            rmax,
            common,
        } => commands::matrix(&echo, &file, kind, dmax, rmax, &common),
        Command::Code {
            file,
            d,
            r,
            hierarchy,
            crosscheck,
            common,
        } => commands::code(&echo, &file, d, r, hierarchy, crosscheck, &common),
        Command::VanishingIdeal { file, common } => commands::vanishing_ideal(&echo, &file, &common),
        Command::Check {
            file,
            dmax,
            rmax,
            bound,
            common,
        } => commands::check(&echo, &file, dmax, rmax, bound, &common),
        Command::CiProbe { file, common } => commands::ci_probe(&echo, &file, &common),
        Command::Render { file, csv } => commands::render(&file, csv),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("gmd: {e}");
            ExitCode::from(1)
        }
    }
}
