use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde::Serialize;

pub const DEFAULT_SEED: u64 = 7;

#[derive(Debug, Parser)]
#[command(
    name = "ropebound",
    version,
    about = "Finite type invariants of knots and links and ropelength lower bounds",
    propagate_version = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Common {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Seed for every random choice. Always echoed in the output.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build an arrow polynomial: C_2n (--conway N) or Z_{N;1} (--milnor N).
    Generate(GenerateArgs),
    /// Pair an arrow polynomial with a Gauss diagram.
    Pair(PairArgs),
    /// Conway coefficients of a knot, or linking numbers and Milnor
    /// invariants of a link.
    Invariants(InvariantsArgs),
    /// Lengths, thickness, projections and crossing averages of a polygonal
    /// link.
    Geometry(GeometryArgs),
    /// Evaluate the lower bounds for given invariant values.
    Bounds(BoundsArgs),
    /// Measure a polygonal link and check every applicable bound on it.
    Verify(VerifyArgs),
    /// Recompute the worked examples, or write the example inputs.
    Examples(ExamplesArgs),
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Caps {
    /// Largest n accepted for Z_{n;1}, Milnor invariants and C_2n.
    #[arg(long, value_name = "N")]
    pub cap_n: Option<usize>,
    /// Largest chord count accepted when enumerating chord diagrams for
    /// C_2n (2n chords).
    #[arg(long, value_name = "N")]
    pub cap_chords: Option<usize>,
}

#[derive(Debug, Clone, Args, Serialize)]
#[command(group(ArgGroup::new("family").required(true).args(["conway", "milnor"])))]
pub struct GenerateArgs {
    /// Half-degree n of the Conway polynomial C_2n.
    #[arg(long, value_name = "N")]
    pub conway: Option<usize>,
    /// Number of strings n of the Milnor polynomial Z_{n;1}.
    #[arg(long, value_name = "N")]
    pub milnor: Option<usize>,
    #[command(flatten)]
    pub caps: Caps,
}

#[derive(Debug, Clone, Args, Serialize)]
#[command(group(ArgGroup::new("polynomial").required(true).args(["poly_file", "conway", "milnor"])))]
pub struct PairArgs {
    /// Gauss code file.
    #[arg(long, value_name = "PATH")]
    pub gauss: PathBuf,
    /// Polynomial file in the dump format written by `generate`.
    #[arg(long, value_name = "PATH")]
    pub poly_file: Option<PathBuf>,
    #[arg(long, value_name = "N")]
    pub conway: Option<usize>,
    #[arg(long, value_name = "N")]
    pub milnor: Option<usize>,
    #[command(flatten)]
    pub caps: Caps,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct InvariantsArgs {
    /// Gauss code file.
    #[arg(long, value_name = "PATH")]
    pub gauss: PathBuf,
    /// Conway coefficient c_2n to compute for a knot (repeatable).
    #[arg(long, value_name = "N")]
    pub c2n: Vec<usize>,
    /// Compute c_2 .. c_2N for a knot.
    #[arg(long, value_name = "N")]
    pub conway: Option<usize>,
    /// Milnor index sequence of a link, 1-based and comma separated with
    /// the last index j (repeatable). Defaults to 1,2,..,n for n >= 3.
    #[arg(long, value_name = "I,..,J")]
    pub mu: Vec<String>,
    #[command(flatten)]
    pub caps: Caps,
}

#[derive(Debug, Clone, Args, Serialize)]
#[command(group(ArgGroup::new("source").required(true).args(["polylink", "builtin"])))]
pub struct LinkSource {
    /// Polygonal link file (JSON with "components" and optional "name").
    #[arg(long, value_name = "PATH")]
    pub polylink: Option<PathBuf>,
    /// Built-in fixture, optionally with parameters: circle, hopf,
    /// borromean, torus_link:2,4, separated_circles:4.
    #[arg(long, value_name = "NAME[:P,..]")]
    pub builtin: Option<String>,
    /// Vertices per component for built-in fixtures.
    #[arg(long, value_name = "N", default_value_t = 256)]
    pub vertices: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
#[command(group(ArgGroup::new("directions").args(["samples", "grid"])))]
pub struct Sampling {
    /// Number of random projection directions (default 2000).
    #[arg(long, value_name = "N")]
    pub samples: Option<usize>,
    /// Number of Fibonacci-lattice directions instead of random ones.
    #[arg(long, value_name = "N")]
    pub grid: Option<usize>,
    /// Gauss integral quadrature points per component.
    #[arg(long, value_name = "N", default_value_t = 512)]
    pub resolution: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct GeometryArgs {
    #[command(flatten)]
    pub source: LinkSource,
    #[command(flatten)]
    pub sampling: Sampling,
    /// Projection direction for the reported diagram, as x,y,z.
    #[arg(long, value_name = "X,Y,Z", value_delimiter = ',', num_args = 3)]
    pub direction: Option<Vec<f64>>,
    /// Also write the polygonal link as JSON.
    #[arg(long, value_name = "PATH")]
    pub save_polylink: Option<PathBuf>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct BoundsArgs {
    /// JSON file with either {"knot": {...}} or {"link": {...}}.
    #[arg(long, value_name = "PATH")]
    pub input: PathBuf,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub source: LinkSource,
    #[command(flatten)]
    pub sampling: Sampling,
    /// Highest n for which a knot's c_2n enters the report.
    #[arg(long, value_name = "N", default_value_t = 2)]
    pub c2n: usize,
    /// Allowance on the polygonal thickness estimate.
    #[arg(long, value_name = "X", default_value_t = 0.02)]
    pub slack: f64,
    #[command(flatten)]
    pub caps: Caps,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ExamplesArgs {
    /// Write the example input files into this directory.
    #[arg(long, value_name = "DIR")]
    pub write: Option<PathBuf>,
}
