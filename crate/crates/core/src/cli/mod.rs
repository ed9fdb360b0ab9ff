//! The `gtrans` command line.
//!
//! Exit codes: 0 on success, 1 on domain errors (bad input files, a failed
//! `--expect`, an exhausted search under `--require-complete`), 2 on usage
//! errors.

mod commands;

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::search::SearchBudget;
use crate::translations::Shift;

#[derive(Parser, Debug)]
#[command(name = "gtrans", version, about = "Neighborhood-preserving translations on graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write the edge list of a grid graph.
    Gen {
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Check whether a map is a candidate and whether it is perfect.
    Verify {
        #[command(flatten)]
        source: GraphSource,
        /// Translation map file (`v -> w` or `v -> omega` per line).
        #[arg(long)]
        map: PathBuf,
        /// Exit with status 1 unless the map has this property.
        #[arg(long, value_enum)]
        expect: Option<Expectation>,
    },
    /// Classify a map as candidate, graphical or perfect, and compare it
    /// with the geometrical shifts when the graph is a grid.
    Classify {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        map: PathBuf,
        #[arg(long, value_enum)]
        expect: Option<Expectation>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Find the candidates with the largest domain.
    Search {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Keep at most this many witnesses.
        #[arg(long, default_value_t = 64)]
        witness_cap: usize,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: u16,
        /// Start from the shift along the first dimension as a known lower
        /// bound (noncyclic grids only).
        #[arg(long)]
        seed_lower_bound: bool,
        /// Exit with status 1 if the search runs out of budget.
        #[arg(long)]
        require_complete: bool,
        /// Write each witness to `DIR/witness_NNN.map`.
        #[arg(long, value_name = "DIR")]
        out_dir: Option<PathBuf>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// List every perfect translation.
    Perfect {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, value_name = "DIR")]
        out_dir: Option<PathBuf>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Report the orbit of every vertex under a map.
    Orbits {
        #[arg(long)]
        map: PathBuf,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Move a signal along a map or a repeated grid shift.
    Translate {
        #[command(flatten)]
        mover: MapOrShift,
        /// Signal CSV, one value per line.
        #[arg(long)]
        signal: PathBuf,
        /// Value written at vertices that receive nothing.
        #[arg(long, default_value_t = 0.0)]
        fill: f64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Spectral translation: convolution with the impulse at a vertex.
    Spectral {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        signal: PathBuf,
        /// Destination vertex, as an index or as grid coordinates `x,y,..`.
        #[arg(long)]
        to_vertex: String,
        /// Multiply the result by sqrt(n).
        #[arg(long)]
        scaled: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Compare a graphical and a spectral translation of a signal.
    Compare {
        /// The untranslated signal.
        #[arg(long)]
        signal: PathBuf,
        #[arg(long)]
        graphical: PathBuf,
        #[arg(long)]
        spectral: PathBuf,
        /// Magnitude above which an entry counts towards the support.
        #[arg(long, default_value_t = crate::spectral::SUPPORT_THRESHOLD)]
        threshold: f64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Shift an image graphically and spectrally and write both results.
    DemoImage {
        /// Plain PGM (P2) input. Without it a synthetic picture is used.
        #[arg(long, conflicts_with = "synthetic")]
        pgm: Option<PathBuf>,
        /// Size of the synthetic picture, e.g. `32x32`.
        #[arg(long, default_value = "32x32", value_name = "WxH")]
        synthetic: String,
        #[arg(long, default_value = "+e1", allow_hyphen_values = true)]
        shift: Shift,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        steps: u32,
        #[arg(long, default_value_t = 0.0)]
        fill: f64,
        #[arg(long)]
        scaled: bool,
        /// Directory receiving original.pgm, graphical.pgm, spectral.pgm and
        /// report.txt.
        #[arg(long, default_value = ".", value_name = "DIR")]
        out_dir: PathBuf,
    },
    /// Render a map as a Graphviz digraph.
    ExportDot {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        map: PathBuf,
        /// Also draw the graph's edges.
        #[arg(long)]
        with_edges: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Search noncyclic grids for largest candidates that are not
    /// geometrical shifts.
    ConjectureScan {
        /// Grids to scan, e.g. `6x6 7x6`.
        #[arg(long = "grid", value_name = "SPEC", required = true, num_args = 1..)]
        grids: Vec<String>,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: u16,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Args, Debug)]
pub struct GridArgs {
    /// Grid lengths, e.g. `6x5`.
    #[arg(long, value_name = "SPEC")]
    pub grid: String,
    /// Wrap every dimension around.
    #[arg(long)]
    pub cyclic: bool,
}

#[derive(Args, Debug)]
pub struct GraphSource {
    /// Edge-list file.
    #[arg(long, conflicts_with = "grid", required_unless_present = "grid")]
    pub graph: Option<PathBuf>,
    /// Grid lengths, e.g. `6x5`.
    #[arg(long, value_name = "SPEC")]
    pub grid: Option<String>,
    #[arg(long, requires = "grid")]
    pub cyclic: bool,
}

#[derive(Args, Debug)]
pub struct MapOrShift {
    #[arg(long, conflicts_with_all = ["shift", "grid"], required_unless_present = "shift")]
    pub map: Option<PathBuf>,
    /// Grid shift such as `+e1` or `-e2`; needs `--grid`.
    #[arg(long, requires = "grid", allow_hyphen_values = true)]
    pub shift: Option<Shift>,
    #[arg(long, value_name = "SPEC")]
    pub grid: Option<String>,
    #[arg(long, requires = "grid")]
    pub cyclic: bool,
    /// Apply the shift this many times.
    #[arg(long, default_value_t = 1, requires = "shift")]
    pub steps: u32,
}

#[derive(Args, Debug)]
pub struct BudgetArgs {
    /// Stop after expanding this many search nodes.
    #[arg(long)]
    pub budget_nodes: Option<u64>,
    /// Stop after this many seconds.
    #[arg(long)]
    pub budget_seconds: Option<f64>,
    /// Refuse graphs with more vertices than this.
    #[arg(long)]
    pub max_vertices: Option<usize>,
}

impl BudgetArgs {
    pub fn budget(&self) -> SearchBudget {
        let default = SearchBudget::default();
        SearchBudget {
            max_vertices: self.max_vertices.unwrap_or(default.max_vertices),
            max_nodes: self.budget_nodes.unwrap_or(default.max_nodes),
            time_limit: self
                .budget_seconds
                .filter(|s| s.is_finite() && *s >= 0.0)
                .map_or(default.time_limit, Duration::from_secs_f64),
        }
    }
}

#[derive(Args, Debug)]
pub struct OutArgs {
    /// Output file; stdout when absent.
    #[arg(short = 'o', long = "output", value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expectation {
    NotCandidate,
    /// Any candidate.
    Candidate,
    /// Graphical or perfect.
    Graphical,
    Perfect,
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match commands::execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            1
        }
    }
}
