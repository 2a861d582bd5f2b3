mod commands;
mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use report::Format;

/// Exact orbifold Euler numbers and the inequalities built on them.
#[derive(Debug, Parser)]
#[command(name = "oe", version, about)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

/// A JSON document, from a file (`-` for stdin) or inline.
#[derive(Debug, Args)]
pub struct DocArgs {
    /// Read the input document from a file, or `-` for stdin.
    #[arg(long, value_name = "PATH", conflicts_with = "doc")]
    pub input: Option<PathBuf>,

    /// Inline input document.
    #[arg(long, value_name = "JSON")]
    pub doc: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Local orbifold Euler number of a singularity.
    Local {
        /// Coefficients of the branches of an ordinary point.
        #[arg(long, value_delimiter = ',', value_name = "A1,A2,...", conflicts_with_all = ["input", "doc"])]
        ordinary: Option<Vec<String>>,

        #[command(flatten)]
        doc: DocArgs,
    },
    /// Milnor and Tjurina numbers of plane curve germs.
    Germ {
        /// Polynomials in x and y, singular at the origin.
        #[arg(value_name = "POLY", conflicts_with_all = ["input", "doc"])]
        polys: Vec<String>,

        #[command(flatten)]
        doc: DocArgs,

        /// Truncation cap for the local algebra computation.
        #[arg(long, env = "OE_DEFAULT_CAP", default_value_t = orbeuler::germlab::DEFAULT_CAP)]
        cap: usize,

        /// Worker threads for evaluating several germs.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Global orbifold Euler number of a pair and the inequalities it feeds.
    Global {
        #[command(flatten)]
        doc: DocArgs,
    },
    /// The two counting inequalities for a line arrangement.
    Arrangement {
        /// Number of lines.
        #[arg(long, requires = "t", conflicts_with_all = ["input", "doc"])]
        k: Option<u64>,

        /// Point counts as `r:t_r` pairs.
        #[arg(long, value_delimiter = ',', value_name = "R:T", requires = "k")]
        t: Option<Vec<String>>,

        #[command(flatten)]
        doc: DocArgs,
    },
    /// Bounds on the number of cusps of a plane curve.
    Cusps {
        /// Degree of the curve.
        #[arg(long, requires = "alpha", conflicts_with = "optimize")]
        degree: Option<u64>,

        /// Weight of the curve in the pair.
        #[arg(long, requires = "degree")]
        alpha: Option<String>,

        /// Minimize the asymptotic ratio over a grid of weights.
        #[arg(long)]
        optimize: bool,

        /// Grid denominator for --optimize.
        #[arg(long, default_value_t = 10_000, requires = "optimize")]
        grid: u64,
    },
    /// Upper bound on the canonical degree of a curve.
    Bound {
        #[arg(long, allow_negative_numbers = true)]
        c1_sq: i64,

        #[arg(long, allow_negative_numbers = true)]
        c2: i64,

        /// Geometric genus of the curve.
        #[arg(long)]
        genus: u64,

        /// The curve has only ordinary singularities.
        #[arg(long)]
        ordinary: bool,
    },
    /// The singular-point inequality for a weighted curve on a surface.
    Check {
        #[command(flatten)]
        doc: DocArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Local { ordinary, doc } => commands::local(ordinary, &doc),
        Command::Germ { polys, doc, cap, jobs } => commands::germ(&polys, &doc, cap, jobs),
        Command::Global { doc } => commands::global(&doc),
        Command::Arrangement { k, t, doc } => commands::arrangement(k, t, &doc),
        Command::Cusps { degree, alpha, optimize, grid } => commands::cusps(degree, alpha, optimize, grid),
        Command::Bound { c1_sq, c2, genus, ordinary } => commands::bound(c1_sq, c2, genus, ordinary),
        Command::Check { doc } => commands::check(&doc),
    };
    match result {
        Ok(report) => {
            print!("{}", report.render(cli.format));
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
