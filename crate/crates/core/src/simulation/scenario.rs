use rayon::prelude::*;

use crate::distributions::Sample;
use crate::error::{Error, Result};
use crate::estimators::{delta_kernel, delta_parametric, fit_pair, EstimatorKind, FitMode};
use crate::overlap::{delta_exact, DistributionPair, QuadratureSpec};
use crate::random::derive_substream;
use crate::simulation::metrics::{compute_metrics, Metrics, MseConvention};

/// Default replication count.
pub const DEFAULT_REPLICATIONS: usize = 1000;

/// Default `(n1, n2)` grid.
pub const DEFAULT_SIZES: [(usize, usize); 5] = [(10, 10), (20, 30), (30, 30), (50, 50), (100, 200)];

/// Largest tolerated share of failed replications.
const MAX_FAILURE_FRACTION: f64 = 0.05;

/// One cell of a simulation study.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub id: String,
    pub pair: DistributionPair<f64>,
    pub n1: usize,
    pub n2: usize,
    pub replications: usize,
    pub seed: u64,
    pub estimators: Vec<EstimatorKind>,
    pub fit_mode: FitMode,
    pub mse_convention: MseConvention,
}

impl Scenario {
    /// Scenario with the default replication count, the kernel and averaged
    /// parametric estimators, unrestricted fits and MSE about the exact value.
    pub fn new(pair: DistributionPair<f64>, n1: usize, n2: usize, seed: u64) -> Self {
        Self {
            id: default_id(&pair, n1, n2),
            pair,
            n1,
            n2,
            replications: DEFAULT_REPLICATIONS,
            seed,
            estimators: vec![EstimatorKind::Kernel, EstimatorKind::ParametricAvg],
            fit_mode: FitMode::Unrestricted,
            mse_convention: MseConvention::AboutExact,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidScenario(format!("{}: {msg}", self.id)));
        if self.replications == 0 {
            return fail("replications must be >= 1".into());
        }
        if self.estimators.is_empty() {
            return fail("estimator set is empty".into());
        }
        if self.n1 < 2 || self.n2 < 2 {
            return fail(format!("sample sizes must be >= 2, got ({}, {})", self.n1, self.n2));
        }
        if self.fit_mode == FitMode::NotApplicable {
            return fail("fit_mode must be unrestricted or equal_shape".into());
        }
        for (i, e) in self.estimators.iter().enumerate() {
            if self.estimators[..i].contains(e) {
                return fail(format!("estimator {e} listed twice"));
            }
        }
        Ok(())
    }
}

/// Stable identifier built from the parameters and sizes.
pub fn default_id(pair: &DistributionPair<f64>, n1: usize, n2: usize) -> String {
    format!(
        "a1={}_b1={}_a2={}_b2={}_n1={}_n2={}",
        pair.f1.scale(),
        pair.f1.shape(),
        pair.f2.scale(),
        pair.f2.shape(),
        n1,
        n2
    )
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioReport {
    pub scenario: Scenario,
    pub delta_exact: f64,
    /// One entry per requested estimator, in request order.
    pub metrics: Vec<(EstimatorKind, Metrics)>,
}

impl ScenarioReport {
    pub fn get(&self, kind: EstimatorKind) -> Option<&Metrics> {
        self.metrics.iter().find(|(k, _)| *k == kind).map(|(_, m)| m)
    }
}

/// How replications are scheduled. Results are identical either way.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Serial,
    /// Rayon pool with this many threads (0 means rayon's default).
    Parallel(usize),
}

/// Estimates of every requested estimator for replication `index`.
pub fn run_replication(scenario: &Scenario, index: u64) -> Result<Vec<f64>> {
    let mut stream = derive_substream(scenario.seed, index);
    let x: Sample<f64> = scenario.pair.f1.sample(scenario.n1, &mut stream)?;
    let y: Sample<f64> = scenario.pair.f2.sample(scenario.n2, &mut stream)?;
    let fitted = if scenario.estimators.iter().any(|e| e.is_parametric()) {
        Some(fit_pair(&x, &y, scenario.fit_mode)?)
    } else {
        None
    };
    scenario
        .estimators
        .iter()
        .map(|&kind| match (kind, &fitted) {
            (EstimatorKind::Kernel, _) => Ok(delta_kernel(&x, &y)?.value),
            (_, Some(f)) => Ok(delta_parametric(kind.variant(), f, &x, &y).value),
            (_, None) => unreachable!("parametric estimator without a fit"),
        })
        .collect()
}

pub fn run_scenario(scenario: &Scenario) -> Result<ScenarioReport> {
    run_scenario_with(scenario, Execution::Parallel(0))
}

pub fn run_scenario_with(scenario: &Scenario, execution: Execution) -> Result<ScenarioReport> {
    scenario.validate()?;
    let exact = delta_exact(&scenario.pair, &QuadratureSpec::default())?;
    let replicate = |j: usize| run_replication(scenario, j as u64);
    let outcomes: Vec<Result<Vec<f64>>> = match execution {
        Execution::Serial => (0..scenario.replications).map(replicate).collect(),
        Execution::Parallel(workers) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .map_err(|e| Error::InvalidScenario(format!("thread pool: {e}")))?;
            pool.install(|| (0..scenario.replications).into_par_iter().map(replicate).collect())
        }
    };
    aggregate(scenario, exact, outcomes)
}

/// Folds replicate outcomes, in replication order, into per-estimator metrics.
fn aggregate(scenario: &Scenario, exact: f64, outcomes: Vec<Result<Vec<f64>>>) -> Result<ScenarioReport> {
    let k = scenario.estimators.len();
    let mut columns: Vec<Vec<f64>> = vec![Vec::with_capacity(outcomes.len()); k];
    let mut failures = 0usize;
    let mut first_failure = None;
    for outcome in outcomes {
        match outcome {
            Ok(values) => {
                for (column, v) in columns.iter_mut().zip(values) {
                    column.push(v);
                }
            }
            Err(err) => {
                failures += 1;
                first_failure.get_or_insert_with(|| err.to_string());
            }
        }
    }
    let limit = MAX_FAILURE_FRACTION * scenario.replications as f64;
    if failures as f64 > limit || failures == scenario.replications {
        return Err(Error::TooManyFailures {
            failures,
            replications: scenario.replications,
            first: first_failure.unwrap_or_default(),
        });
    }
    let mut metrics = Vec::with_capacity(k);
    for (kind, column) in scenario.estimators.iter().zip(&columns) {
        let mut m = compute_metrics(column, exact, scenario.mse_convention)?;
        m.replicate_failures = failures;
        metrics.push((*kind, m));
    }
    if let Some(kernel_mse) = metrics
        .iter()
        .find(|(kind, _)| *kind == EstimatorKind::Kernel)
        .map(|(_, m)| m.mse)
    {
        for (_, m) in &mut metrics {
            let eff = kernel_mse / m.mse;
            m.eff_vs_kernel = (eff.is_finite() && eff > 0.0).then_some(eff);
        }
    }
    Ok(ScenarioReport {
        scenario: scenario.clone(),
        delta_exact: exact,
        metrics,
    })
}
