use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qhom_core::chains::Variant;

/// Seed used by randomized checks unless `--seed` is given.
pub const DEFAULT_SEED: u64 = 20_240_601;

/// Largest chain group (in basis elements) handled without `--force`.
pub const DEFAULT_MAX_COLUMNS: usize = 20_000;

/// Environment variable holding the worker thread count.
pub const THREADS_ENV: &str = "QHOM_THREADS";

/// Quandle homology, cycle certificates and colored knot diagrams.
///
/// Quandles are named by catalog key (`dihedral:3`, `trivial:4`, `qs5`,
/// `qs6`, `alexander:3:T+1`, `small:4:2`) or by the path of a table file.
/// Diagram and chain arguments may name a bundled fixture such as
/// `fig3.adk`.
#[derive(Debug, Parser)]
#[command(name = "qhom", version)]
pub struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Chain-group dimension above which computations refuse to start.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_COLUMNS)]
    pub max_columns: usize,

    /// Ignore the dimension guard.
    #[arg(long, global = true)]
    pub force: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Inspect or check an operation table.
    #[command(subcommand)]
    Quandle(QuandleCmd),

    /// Homology group `H^v_n` as `Z^r + Z_d1 + …`.
    Homology(HomologyArgs),

    /// Boundaries, cycle and boundary tests, class coordinates.
    Chain(ChainArgs),

    /// Maps induced on homology.
    #[command(subcommand)]
    Hom(HomCmd),

    /// Colored diagrams: colorings, shadows, extraction and realization.
    #[command(subcommand)]
    Diagram(DiagramCmd),

    /// The long exact sequence of `0 → C^D → C^R → C^Q → 0`.
    #[command(subcommand)]
    Les(LesCmd),

    /// Re-run the reference computations and print a pass/fail table.
    Replay(ReplayArgs),
}

#[derive(Debug, Subcommand)]
pub enum QuandleCmd {
    /// Table, labels and orbits.
    Show { source: String },
    /// Axiom report; exits 4 with a witness when an axiom fails.
    Verify {
        source: String,
        /// Check the rack axioms only.
        #[arg(long)]
        rack: bool,
    },
}

#[derive(Debug, Args)]
pub struct HomologyArgs {
    pub quandle: String,
    pub variant: Variant,
    pub degree: usize,
    /// Write each generator cycle to `DIR/g<i>.chn`.
    #[arg(long, value_name = "DIR")]
    pub emit_generators: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ChainAction {
    Boundary,
    IsCycle,
    IsBoundary,
    Class,
}

#[derive(Debug, Args)]
pub struct ChainArgs {
    pub action: ChainAction,
    pub quandle: String,
    pub variant: Variant,
    pub chain: PathBuf,
    /// Where `is-boundary` writes the witness chain.
    #[arg(long, value_name = "FILE")]
    pub witness: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum HomCmd {
    /// Matrix of `f_*` on `H^v_n` against the stored generators.
    Induced {
        map: PathBuf,
        variant: Variant,
        degree: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum DiagramCmd {
    /// Structural report for a diagram file.
    Validate { diagram: PathBuf },
    /// Number of colorings (shadow colorings for circle diagrams).
    Colorings {
        diagram: PathBuf,
        quandle: String,
        /// Print every coloring.
        #[arg(long)]
        list: bool,
    },
    /// Extend a coloring to the regions from one seeded region.
    Shadow {
        diagram: PathBuf,
        quandle: String,
        coloring: PathBuf,
        #[arg(long)]
        region: String,
        #[arg(long)]
        element: String,
        #[arg(long, short, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Chain represented by a colored diagram.
    Extract {
        diagram: PathBuf,
        coloring: PathBuf,
        #[arg(long, default_value = "dihedral:3")]
        quandle: String,
        #[arg(long, short, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Colored diagram representing a 2-cycle; writes `PREFIX.adk` and `PREFIX.col`.
    Realize {
        chain: PathBuf,
        quandle: String,
        #[arg(long, default_value = "Q")]
        variant: Variant,
        #[arg(long, value_name = "PREFIX")]
        out: Option<PathBuf>,
    },
    /// Fundamental quandle presentation read off the diagram.
    Present {
        diagram: PathBuf,
        /// Also count homomorphisms into this quandle.
        #[arg(long)]
        count: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum LesCmd {
    /// Exactness at `H^R_n` and `H^Q_n`.
    Check { quandle: String, degree: usize },
    /// Connecting map `H^Q_n → H^D_{n−1}`.
    BoundaryMap { quandle: String, degree: usize },
}

#[derive(Debug, Args)]
pub struct ReplayArgs {
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Serve a catalog key from a table file, e.g. `--with qs6=table.qdl`.
    #[arg(long = "with", value_name = "KEY=FILE")]
    pub overrides: Vec<String>,
}
