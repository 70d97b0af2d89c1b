//! Monte Carlo study of the Δ estimators: simulate sample pairs, estimate,
//! and summarise relative bias, relative RMSE and efficiency against the
//! kernel estimator.
//!
//! Replication `j` of a scenario draws from [`derive_substream`]`(seed, j)`
//! and results are folded in replication order, so reports do not depend
//! on how many threads ran them.

mod config;
mod metrics;
mod report;
mod scenario;

pub use crate::random::derive_substream;
pub use config::parse_config;
pub use metrics::{compute_metrics, Metrics, MseConvention};
pub use report::{csv_string, fixed6, read_csv, render_markdown, rows_from_reports, write_csv, ReportRow, CSV_HEADER};
pub use scenario::{
    default_id, run_replication, run_scenario, run_scenario_with, Execution, Scenario, ScenarioReport,
    DEFAULT_REPLICATIONS, DEFAULT_SIZES,
};
