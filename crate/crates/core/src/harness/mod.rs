//! Instance files, random and exhaustive instance families, and the verification suite.

mod enumerate;
mod generate;
mod instance;
mod suite;

pub use enumerate::{all_clutters, all_graphs, cochordal_graphs, ALL_CLUTTERS_MAX_N, ALL_GRAPHS_MAX_N};
pub use generate::{generate, random_clutter, random_ideal, seeded_rng, EdgeModel, GeneratorConfig};
pub use instance::{
    parse_instances, parse_record, read_instances, serialize_instance, to_record, write_instances, Instance,
    InstanceError, InstanceRecord, ParseOptions,
};
pub use suite::{
    summarize, summary_csv, verify_suite, SuiteEntry, SuiteOptions, SuiteReport, SuiteSummary, SUITE_DEFAULT_MAX_N,
};

use crate::error::{Error, Result};

/// Environment variable overriding the default node budget.
pub const BUDGET_ENV: &str = "EDGEIDEAL_BUDGET";

/// The budget named by `BUDGET_ENV`, if set.
pub fn budget_from_env() -> Result<Option<u64>> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v.trim().parse().map(Some).map_err(|_| Error::InvalidParameter(format!("{BUDGET_ENV}={v}"))),
        Err(_) => Ok(None),
    }
}
