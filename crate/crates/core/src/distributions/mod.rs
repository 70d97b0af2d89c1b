//! Weibull primitives: density, distribution function, quantile, sampling
//! and maximum-likelihood fitting.

mod mle;
mod sample;
mod weibull;

pub use mle::{equal_shape_score, fit_mle, fit_mle_equal_shape, shape_score, EqualShapeFit, FitResult};
pub use sample::Sample;
pub use weibull::WeibullParams;
