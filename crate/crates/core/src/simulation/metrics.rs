use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which centre the mean squared error is taken about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MseConvention {
    /// `sum (est - exact)^2 / R`: the usual mean squared error.
    #[default]
    AboutExact,
    /// `sum (est - mean)^2 / R`: dispersion about the simulation mean.
    AboutMean,
}

impl MseConvention {
    pub fn name(self) -> &'static str {
        match self {
            MseConvention::AboutExact => "about_exact",
            MseConvention::AboutMean => "about_mean",
        }
    }
}

/// Monte Carlo summary of one estimator in one scenario.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Metrics {
    pub mean: f64,
    pub mse: f64,
    /// Relative bias `(mean - exact) / exact`.
    pub rb: f64,
    /// Relative root MSE `sqrt(mse) / exact`.
    pub rrmse: f64,
    /// `mse(kernel) / mse(self)`, present when the kernel estimator ran.
    pub eff_vs_kernel: Option<f64>,
    pub replicate_failures: usize,
}

/// Aggregates replicate estimates against the exact value. Sums run in
/// slice order, so the result depends only on the order of `estimates`.
pub fn compute_metrics(estimates: &[f64], exact: f64, convention: MseConvention) -> Result<Metrics> {
    if estimates.is_empty() {
        return Err(Error::NoEstimates);
    }
    if !(exact > 0.0 && exact.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "exact",
            value: exact,
            reason: "must be finite and > 0",
        });
    }
    let count = estimates.len() as f64;
    let mean = estimates.iter().sum::<f64>() / count;
    let centre = match convention {
        MseConvention::AboutExact => exact,
        MseConvention::AboutMean => mean,
    };
    let mse = estimates.iter().map(|e| (e - centre) * (e - centre)).sum::<f64>() / count;
    Ok(Metrics {
        mean,
        mse,
        rb: (mean - exact) / exact,
        rrmse: mse.sqrt() / exact,
        eff_vs_kernel: None,
        replicate_failures: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_estimates_have_no_error() {
        for conv in [MseConvention::AboutExact, MseConvention::AboutMean] {
            let m = compute_metrics(&[0.3, 0.3, 0.3], 0.3, conv).unwrap();
            assert_eq!(m.rb, 0.0);
            assert_eq!(m.rrmse, 0.0);
        }
    }

    #[test]
    fn symmetric_spread_about_exact() {
        let a = compute_metrics(&[0.4, 0.6], 0.5, MseConvention::AboutExact).unwrap();
        assert!(a.rb.abs() < 1e-15);
        assert!((a.mse - 0.01).abs() < 1e-15);
        assert!((a.rrmse - 0.2).abs() < 1e-14);
        let b = compute_metrics(&[0.4, 0.6], 0.5, MseConvention::AboutMean).unwrap();
        assert!((b.mse - 0.01).abs() < 1e-15);
    }

    #[test]
    fn conventions_differ_under_bias() {
        let a = compute_metrics(&[0.6, 0.8], 0.5, MseConvention::AboutExact).unwrap();
        assert!((a.rb - 0.4).abs() < 1e-14);
        assert!((a.mse - 0.05).abs() < 1e-15);
        assert!((a.rrmse - 0.447_21).abs() < 1e-5);
        let b = compute_metrics(&[0.6, 0.8], 0.5, MseConvention::AboutMean).unwrap();
        assert!((b.mse - 0.01).abs() < 1e-15);
        assert!((b.rrmse - 0.2).abs() < 1e-14);
    }

    #[test]
    fn rrmse_squared_recovers_mse() {
        let m = compute_metrics(&[0.71, 0.52, 0.66, 0.93], 0.6774, MseConvention::AboutExact).unwrap();
        assert!((m.rrmse * m.rrmse * 0.6774 * 0.6774 - m.mse).abs() < 1e-12);
    }

    #[test]
    fn empty_and_invalid_inputs() {
        assert_eq!(
            compute_metrics(&[], 0.5, MseConvention::AboutExact),
            Err(Error::NoEstimates)
        );
        assert!(compute_metrics(&[0.5], 0.0, MseConvention::AboutExact).is_err());
    }
}
