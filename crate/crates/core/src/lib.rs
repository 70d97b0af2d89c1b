//! Overlap between two Weibull populations.
//!
//! * [`overlap`] computes the Weitzman (Δ), Matusita (ρ), Morisita (λ),
//!   Pianka and Kullback–Leibler overlap coefficients of two known Weibull
//!   densities by crossing-aware adaptive quadrature.
//! * [`estimators`] estimates Δ from two independent samples, either with
//!   maximum-likelihood Weibull fits plugged into a moment form or with
//!   Gaussian kernel density estimates.
//! * [`simulation`] runs seeded, thread-count-independent Monte Carlo
//!   studies of those estimators and renders CSV/Markdown reports.
//!
//! The numeric core is generic over [`Real`] (`f32` or `f64`); the aliases
//! below fix it to `f64`, which is what the simulation layer uses.
//!
//! ```
//! use weibull_overlap::{delta_exact, DistributionPair, QuadratureSpec};
//!
//! let pair = DistributionPair::from_params(1.0, 3.0, 1.0, 4.0).unwrap();
//! let delta = delta_exact(&pair, &QuadratureSpec::default()).unwrap();
//! assert!((delta - 0.8678).abs() < 5e-4);
//! ```

pub mod distributions;
pub mod error;
pub mod estimators;
pub mod overlap;
pub mod quadrature;
pub mod random;
pub mod roots;
pub mod scalar;
pub mod simulation;

pub use distributions::{fit_mle, fit_mle_equal_shape};
pub use error::{Error, Result};
pub use estimators::{delta_kernel, delta_parametric, fit_pair, EstimatorKind, FitMode, Variant};
pub use overlap::{coefficient_exact, crossings, delta_exact, ovl_exact, Coefficient};
pub use random::{derive_substream, RandomStream};
pub use scalar::Real;

pub type WeibullParams = distributions::WeibullParams<f64>;
pub type Sample = distributions::Sample<f64>;
pub type FitResult = distributions::FitResult<f64>;
pub type EqualShapeFit = distributions::EqualShapeFit<f64>;
pub type DistributionPair = overlap::DistributionPair<f64>;
pub type QuadratureSpec = overlap::QuadratureSpec<f64>;
pub type OvlValues = overlap::OvlValues<f64>;
pub type DeltaEstimate = estimators::DeltaEstimate<f64>;
pub type FittedPair = estimators::FittedPair<f64>;
pub type KdeModel = estimators::KdeModel<f64>;

pub type WeibullParams32 = distributions::WeibullParams<f32>;
pub type Sample32 = distributions::Sample<f32>;
pub type DistributionPair32 = overlap::DistributionPair<f32>;
pub type QuadratureSpec32 = overlap::QuadratureSpec<f32>;
