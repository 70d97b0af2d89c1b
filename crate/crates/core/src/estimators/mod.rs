//! Sample-based estimators of the Weitzman coefficient.
//!
//! Because `E[min{f1, f2}(X) / f1(X)] = Δ` for `X ~ f1` (and symmetrically
//! for `Y ~ f2`), Δ is estimated by averaging the ratio over each sample
//! with fitted densities plugged in. The parametric estimators use Weibull
//! maximum-likelihood fits; the kernel estimator uses Gaussian KDEs in the
//! same averaged form.

mod kde;
mod parametric;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use kde::{silverman_bandwidth, KdeModel};
pub use parametric::{delta_kernel, delta_parametric, fit_pair, FittedPair};

/// Which sample(s) the moment form averages over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Mean over the first sample of `min{f1, f2} / f1`.
    X,
    /// Mean over the second sample of `min{f1, f2} / f2`.
    Y,
    /// Equal-weight average of the two.
    Avg,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::X => "x",
            Variant::Y => "y",
            Variant::Avg => "avg",
        }
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "x" => Ok(Variant::X),
            "y" => Ok(Variant::Y),
            "avg" => Ok(Variant::Avg),
            other => Err(format!("unknown variant {other:?} (expected x, y or avg)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EstimatorKind {
    ParametricX,
    ParametricY,
    ParametricAvg,
    Kernel,
}

impl EstimatorKind {
    pub const ALL: [EstimatorKind; 4] = [
        EstimatorKind::ParametricX,
        EstimatorKind::ParametricY,
        EstimatorKind::ParametricAvg,
        EstimatorKind::Kernel,
    ];

    pub fn parametric(variant: Variant) -> Self {
        match variant {
            Variant::X => EstimatorKind::ParametricX,
            Variant::Y => EstimatorKind::ParametricY,
            Variant::Avg => EstimatorKind::ParametricAvg,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            EstimatorKind::ParametricX => "parametric_x",
            EstimatorKind::ParametricY => "parametric_y",
            EstimatorKind::ParametricAvg => "parametric_avg",
            EstimatorKind::Kernel => "kernel",
        }
    }

    pub fn variant(self) -> Variant {
        match self {
            EstimatorKind::ParametricX => Variant::X,
            EstimatorKind::ParametricY => Variant::Y,
            EstimatorKind::ParametricAvg | EstimatorKind::Kernel => Variant::Avg,
        }
    }

    pub fn is_parametric(self) -> bool {
        self != EstimatorKind::Kernel
    }
}

impl fmt::Display for EstimatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EstimatorKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        EstimatorKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown estimator {s:?}"))
    }
}

/// How the parametric densities were fitted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FitMode {
    /// Four free parameters.
    Unrestricted,
    /// Two scales, one shared shape.
    EqualShape,
    /// Nonparametric estimate.
    NotApplicable,
}

impl FitMode {
    pub fn name(self) -> &'static str {
        match self {
            FitMode::Unrestricted => "unrestricted",
            FitMode::EqualShape => "equal_shape",
            FitMode::NotApplicable => "not_applicable",
        }
    }
}

impl fmt::Display for FitMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One estimate of Δ, always in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltaEstimate<T> {
    pub value: T,
    pub method: EstimatorKind,
    pub fit_mode: FitMode,
}
