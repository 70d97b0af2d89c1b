//! JSON description of a batch of scenarios.
//!
//! ```json
//! { "scenarios": [
//!     { "scale1": 1, "shape1": 3, "scale2": 1, "shape2": 4,
//!       "n1": 20, "n2": 30, "replications": 1000, "seed": 7,
//!       "estimators": ["kernel", "parametric_avg"],
//!       "fit_mode": "unrestricted", "mse_convention": "about_exact" } ] }
//! ```
//!
//! `seed` is mandatory. When both `n1` and `n2` are omitted the entry expands
//! over the default size grid. A bare top-level array is accepted as well.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::estimators::{EstimatorKind, FitMode};
use crate::overlap::DistributionPair;
use crate::simulation::metrics::MseConvention;
use crate::simulation::scenario::{default_id, Scenario, DEFAULT_REPLICATIONS, DEFAULT_SIZES};

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    scenarios: Vec<ScenarioEntry>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioEntry {
    #[serde(default)]
    id: Option<String>,
    scale1: f64,
    shape1: f64,
    scale2: f64,
    shape2: f64,
    #[serde(default)]
    n1: Option<usize>,
    #[serde(default)]
    n2: Option<usize>,
    #[serde(default = "default_replications")]
    replications: usize,
    seed: u64,
    #[serde(default = "default_estimators")]
    estimators: Vec<EstimatorKind>,
    #[serde(default = "default_fit_mode")]
    fit_mode: FitMode,
    #[serde(default)]
    mse_convention: MseConvention,
}

fn default_replications() -> usize {
    DEFAULT_REPLICATIONS
}

fn default_estimators() -> Vec<EstimatorKind> {
    vec![EstimatorKind::Kernel, EstimatorKind::ParametricAvg]
}

fn default_fit_mode() -> FitMode {
    FitMode::Unrestricted
}

/// Parses and validates a scenario batch. Errors carry the JSON path of the
/// offending field, e.g. `scenarios[2].seed`.
pub fn parse_config(text: &str) -> Result<Vec<Scenario>> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Config(format!("invalid JSON: {e}")))?;
    let (prefix, entries): (&str, Vec<ScenarioEntry>) = if value.is_array() {
        ("", deserialize_at(value)?)
    } else {
        let file: ConfigFile = deserialize_at(value)?;
        ("scenarios", file.scenarios)
    };
    let mut scenarios = Vec::new();
    for (i, entry) in entries.into_iter().enumerate() {
        let path = format!("{prefix}[{i}]");
        scenarios.extend(expand(entry, &path)?);
    }
    Ok(scenarios)
}

fn deserialize_at<T: for<'de> Deserialize<'de>>(value: serde_json::Value) -> Result<T> {
    serde_path_to_error::deserialize(value).map_err(|err| {
        let path = err.path().to_string();
        Error::Config(format!("{path}: {}", err.inner()))
    })
}

fn expand(entry: ScenarioEntry, path: &str) -> Result<Vec<Scenario>> {
    let field = |name: &str, e: Error| Error::Config(format!("{path}.{name}: {e}"));
    let pair =
        DistributionPair::from_params(entry.scale1, entry.shape1, entry.scale2, entry.shape2).map_err(
            |e| match &e {
                Error::InvalidParameter { .. } => {
                    let name = [
                        ("scale1", entry.scale1),
                        ("shape1", entry.shape1),
                        ("scale2", entry.scale2),
                        ("shape2", entry.shape2),
                    ]
                    .into_iter()
                    .find(|(_, v)| !(v.is_finite() && *v > 0.0))
                    .map(|(n, _)| n)
                    .unwrap_or("parameters");
                    field(name, e)
                }
                _ => field("parameters", e),
            },
        )?;
    let sizes: Vec<(usize, usize)> = match (entry.n1, entry.n2) {
        (Some(n1), Some(n2)) => vec![(n1, n2)],
        (None, None) => DEFAULT_SIZES.to_vec(),
        (Some(_), None) => return Err(Error::Config(format!("{path}.n2: missing while n1 is given"))),
        (None, Some(_)) => return Err(Error::Config(format!("{path}.n1: missing while n2 is given"))),
    };
    let expanded = sizes.len() > 1;
    sizes
        .into_iter()
        .map(|(n1, n2)| {
            let id = match (&entry.id, expanded) {
                (Some(id), false) => id.clone(),
                (Some(id), true) => format!("{id}_n1={n1}_n2={n2}"),
                (None, _) => default_id(&pair, n1, n2),
            };
            let scenario = Scenario {
                id,
                pair,
                n1,
                n2,
                replications: entry.replications,
                seed: entry.seed,
                estimators: entry.estimators.clone(),
                fit_mode: entry.fit_mode,
                mse_convention: entry.mse_convention,
            };
            scenario.validate().map_err(|e| Error::Config(format!("{path}: {e}")))?;
            Ok(scenario)
        })
        .collect()
}
