use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use edgeideal::bounds::BoundOptions;
use edgeideal::harness::{EdgeModel, GeneratorConfig, SUITE_DEFAULT_MAX_N};
use edgeideal::sdepth::DEFAULT_NODE_BUDGET;
use edgeideal::{Field, MAX_VERTICES};

#[derive(Debug, Parser)]
#[command(
    name = "edgeideal",
    version,
    about = "Stanley depth, Stanley regularity and bounds for edge ideals of clutters"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants of each instance: Stanley depth and regularity, depth, projdim, reg, size, cosize.
    Invariants(InstanceArgs),
    /// Invariants, combinatorial bounds and verdicts of each instance.
    Bounds(ReportArgs),
    /// The clutter of minimal vertex covers, whose edge ideal is the Alexander dual.
    Dual(DualArgs),
    /// Bound reports over instance files, exhaustive families and random draws, with a summary.
    Verify(VerifyArgs),
    /// Seeded random clutters in the instance format.
    Generate(GenerateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Records,
    Csv,
    Both,
}

/// Flags shared by every verb that runs the engines.
#[derive(Debug, Args)]
pub struct EngineArgs {
    /// Node budget for each Stanley depth search; exhausted searches report ranges.
    #[arg(long, env = "EDGEIDEAL_BUDGET", default_value_t = DEFAULT_NODE_BUDGET)]
    pub budget: u64,
    /// Coefficient field for Betti numbers: `q` or `p:<prime>`.
    #[arg(long, default_value = "q", value_parser = parse_field)]
    pub field: Field,
    /// Largest number of vertices accepted per instance.
    #[arg(long)]
    pub max_n: Option<usize>,
    /// Include witness partitions and covers in the records.
    #[arg(long)]
    pub witnesses: bool,
    /// Include wall-clock timings (records are then no longer reproducible byte for byte).
    #[arg(long)]
    pub timing: bool,
    /// Reject edge lists that are not antichains instead of minimalizing them.
    #[arg(long)]
    pub strict: bool,
}

impl EngineArgs {
    pub fn bound_options(&self) -> BoundOptions {
        BoundOptions {
            budget: self.budget,
            field: self.field,
            witnesses: self.witnesses,
            timing: self.timing,
            ..BoundOptions::default()
        }
    }
}

#[derive(Debug, Args)]
pub struct Output {
    /// Records destination; standard output when absent.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct InstanceArgs {
    /// Instance file, one JSON object per line; `-` reads standard input.
    pub input: PathBuf,
    #[command(flatten)]
    pub engine: EngineArgs,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct CsvArgs {
    /// What to write: per-instance records, the CSV summary, or both.
    #[arg(long, value_enum, default_value_t = Emit::Records)]
    pub emit: Emit,
    /// CSV destination; required with `--emit both`, standard output otherwise.
    #[arg(long)]
    pub csv_output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[command(flatten)]
    pub instances: InstanceArgs,
    #[command(flatten)]
    pub csv: CsvArgs,
}

#[derive(Debug, Args)]
pub struct DualArgs {
    /// Instance file; `-` reads standard input.
    pub input: PathBuf,
    #[arg(long)]
    pub strict: bool,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct ModelArgs {
    /// Smallest number of vertices.
    #[arg(long, default_value_t = 4)]
    pub n_min: usize,
    /// Largest number of vertices.
    #[arg(long, default_value_t = 8)]
    pub n_max: usize,
    /// Uniform model: edge size.
    #[arg(long, requires = "p", conflicts_with = "probs")]
    pub d: Option<usize>,
    /// Uniform model: probability of each `d`-subset.
    #[arg(long, requires = "d")]
    pub p: Option<f64>,
    /// Mixed model: comma-separated probabilities for subsets of size 1, 2, ...
    #[arg(long, value_delimiter = ',', default_value = "0.04,0.22,0.12,0.04")]
    pub probs: Vec<f64>,
}

impl ModelArgs {
    pub fn config(&self, seed: u64) -> GeneratorConfig {
        let model = match (self.d, self.p) {
            (Some(d), Some(p)) => EdgeModel::Uniform { d, p },
            _ => EdgeModel::Mixed { probs: self.probs.clone() },
        };
        GeneratorConfig { seed, n_min: self.n_min, n_max: self.n_max, model }
    }
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    /// Generator seed.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of clutters.
    #[arg(long, default_value_t = 10)]
    pub count: usize,
    #[command(flatten)]
    pub model: ModelArgs,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Instance files; `-` reads standard input.
    pub inputs: Vec<PathBuf>,
    /// Every clutter on 1..=N vertices.
    #[arg(long, value_name = "N")]
    pub exhaustive: Option<usize>,
    /// Every graph on 1..=N vertices, up to isomorphism.
    #[arg(long, value_name = "N")]
    pub graphs: Option<usize>,
    /// This many seeded random clutters.
    #[arg(long, value_name = "COUNT")]
    pub random: Option<usize>,
    /// Seed for `--random`.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub model: ModelArgs,
    /// Write the aggregate summary as JSON here as well as to standard error.
    #[arg(long)]
    pub summary: Option<PathBuf>,
    #[command(flatten)]
    pub engine: EngineArgs,
    #[command(flatten)]
    pub csv: CsvArgs,
    #[command(flatten)]
    pub out: Output,
}

impl VerifyArgs {
    pub fn max_n(&self) -> usize {
        self.engine.max_n.unwrap_or(SUITE_DEFAULT_MAX_N)
    }
}

/// Ceiling for single-instance verbs.
pub fn single_max_n(engine: &EngineArgs) -> usize {
    engine.max_n.unwrap_or(MAX_VERTICES)
}

fn parse_field(s: &str) -> Result<Field, String> {
    match s {
        "q" | "Q" => Ok(Field::Rationals),
        _ => {
            let p = s
                .strip_prefix("p:")
                .ok_or_else(|| format!("expected `q` or `p:<prime>`, got `{s}`"))?
                .parse::<u64>()
                .map_err(|e| e.to_string())?;
            Field::prime(p).map_err(|e| e.to_string())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fields() {
        assert_eq!(parse_field("q"), Ok(Field::Rationals));
        assert_eq!(parse_field("p:2"), Ok(Field::Prime(2)));
        assert!(parse_field("p:4").is_err());
        assert!(parse_field("r").is_err());
    }

    #[test]
    fn command_line_shape() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
