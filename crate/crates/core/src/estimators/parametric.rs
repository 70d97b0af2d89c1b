use crate::distributions::{fit_mle, fit_mle_equal_shape, Sample, WeibullParams};
use crate::error::{Error, Result};
use crate::estimators::{DeltaEstimate, EstimatorKind, FitMode, KdeModel, Variant};
use crate::scalar::Real;

/// Fitted densities for the two populations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FittedPair<T> {
    pub f1: WeibullParams<T>,
    pub f2: WeibullParams<T>,
    pub mode: FitMode,
}

/// Maximum-likelihood fits of both samples under `mode`. A fit whose
/// score residual misses the convergence bound is reported as
/// [`Error::NonConvergence`].
pub fn fit_pair<T: Real>(x: &Sample<T>, y: &Sample<T>, mode: FitMode) -> Result<FittedPair<T>> {
    let not_converged = |iterations: usize, shape: T, score: T| Error::NonConvergence {
        iterations,
        last_shape: shape.as_f64(),
        last_score: score.as_f64(),
    };
    match mode {
        FitMode::Unrestricted => {
            let a = fit_mle(x)?;
            let b = fit_mle(y)?;
            for fit in [&a, &b] {
                if !fit.converged {
                    return Err(not_converged(fit.iterations, fit.params.shape(), fit.score_residual));
                }
            }
            Ok(FittedPair {
                f1: a.params,
                f2: b.params,
                mode,
            })
        }
        FitMode::EqualShape => {
            let fit = fit_mle_equal_shape(x, y)?;
            if !fit.converged {
                return Err(not_converged(fit.iterations, fit.shape(), fit.score_residual));
            }
            Ok(FittedPair {
                f1: fit.first,
                f2: fit.second,
                mode,
            })
        }
        FitMode::NotApplicable => Err(Error::InvalidParameter {
            name: "fit_mode",
            value: f64::NAN,
            reason: "parametric fits need unrestricted or equal_shape",
        }),
    }
}

/// Mean of `ratio` over `values`.
fn mean_ratio<T: Real>(values: &[T], ratio: impl Fn(T) -> T) -> T {
    values.iter().map(|&v| ratio(v)).sum::<T>() / T::from_count(values.len())
}

/// The three moment forms, given per-point ratios for each sample.
fn moment_form<T: Real>(
    variant: Variant,
    x: &Sample<T>,
    y: &Sample<T>,
    ratio_x: impl Fn(T) -> T,
    ratio_y: impl Fn(T) -> T,
) -> T {
    match variant {
        Variant::X => mean_ratio(x.values(), ratio_x),
        Variant::Y => mean_ratio(y.values(), ratio_y),
        Variant::Avg => {
            let half = T::lit(0.5);
            half * mean_ratio(x.values(), ratio_x) + half * mean_ratio(y.values(), ratio_y)
        }
    }
}

/// Parametric moment estimator of Δ with fitted densities plugged in.
///
/// The ratio `min{f1, f2} / f_i` is computed as `min{1, exp(ln f_j - ln f_i)}`
/// so that points deep in both tails, where the densities underflow, still
/// contribute their exact ratio.
pub fn delta_parametric<T: Real>(
    variant: Variant,
    fitted: &FittedPair<T>,
    x: &Sample<T>,
    y: &Sample<T>,
) -> DeltaEstimate<T> {
    let (f1, f2) = (fitted.f1, fitted.f2);
    let value = moment_form(
        variant,
        x,
        y,
        |v| (f2.ln_density(v) - f1.ln_density(v)).exp().min(T::one()),
        |v| (f1.ln_density(v) - f2.ln_density(v)).exp().min(T::one()),
    );
    DeltaEstimate {
        value,
        method: EstimatorKind::parametric(variant),
        fit_mode: fitted.mode,
    }
}

/// Kernel competitor: the averaged moment form with Gaussian KDEs (one
/// per sample, each with its own rule-of-thumb bandwidth) in place of the
/// parametric fits.
pub fn delta_kernel<T: Real>(x: &Sample<T>, y: &Sample<T>) -> Result<DeltaEstimate<T>> {
    let k1 = KdeModel::from_sample(x)?;
    let k2 = KdeModel::from_sample(y)?;
    let ratio = |own: &KdeModel<T>, other: &KdeModel<T>, v: T| {
        let a = own.pdf(v);
        let b = other.pdf(v);
        if a > T::zero() {
            a.min(b) / a
        } else {
            T::zero()
        }
    };
    let value = moment_form(Variant::Avg, x, y, |v| ratio(&k1, &k2, v), |v| ratio(&k2, &k1, v));
    Ok(DeltaEstimate {
        value,
        method: EstimatorKind::Kernel,
        fit_mode: FitMode::NotApplicable,
    })
}
