use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dominion_lab::monoid::DEFAULT_ORDER_CAP;
use dominion_lab::{DominionMethod, VarietySignature};

mod commands;

/// Exact computations on finite commutative monoids.
#[derive(Debug, Parser)]
#[command(name = "dominion-lab", version)]
struct Cli {
    /// Largest monoid order accepted when reading files.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP)]
    order_cap: usize,

    /// Output style.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    /// One JSON object per line.
    Records,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Order, zero, element classes, SI status, monolith and variety.
    Analyze {
        path: PathBuf,
        /// Also report membership in and core of this variety, e.g. V(1,2).
        #[arg(long)]
        variety: Option<VarietySignature>,
    },
    /// Dominion of a submonoid.
    Dominion {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value = "both")]
        method: DominionMethod,
        #[command(flatten)]
        cap: CapArgs,
        /// Print a shortest zigzag for every dominion element.
        #[arg(long)]
        witnesses: bool,
    },
    /// Shortest zigzag over a submonoid with a given value.
    Zigzag {
        #[command(flatten)]
        pair: PairArgs,
        /// Value of the zigzag: an index or a label.
        #[arg(long)]
        target: String,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Amalgamated pushout of two copies of the ambient monoid.
    Pushout {
        #[command(flatten)]
        pair: PairArgs,
        /// Write the pushout here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Law checks over enumerated monoids.
    Laws {
        #[command(subcommand)]
        action: LawsAction,
    },
    /// All commutative monoids up to isomorphism.
    Enumerate {
        #[command(flatten)]
        filter: FilterArgs,
        /// Directory receiving one file per monoid.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum LawsAction {
    Run {
        #[command(flatten)]
        filter: FilterArgs,
        /// Run only this law.
        #[arg(long)]
        law: Option<String>,
    },
    /// List registered law names.
    List,
}

#[derive(Debug, Args)]
struct PairArgs {
    /// Monoid file.
    path: PathBuf,
    /// `elements i j ...` or `generate i j ...`; tokens are indices or labels.
    #[arg(required = true, num_args = 1.., allow_hyphen_values = false)]
    spec: Vec<String>,
}

#[derive(Debug, Args)]
struct CapArgs {
    /// Longest zigzag searched; defaults to DOMINION_LAB_CAP, else the
    /// square of the order.
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Debug, Args)]
struct FilterArgs {
    #[arg(long, default_value_t = 4)]
    max_order: usize,
    #[arg(long)]
    variety: Option<VarietySignature>,
    #[arg(long)]
    si_only: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(status) => status.into(),
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}
