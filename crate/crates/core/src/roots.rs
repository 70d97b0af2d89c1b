//! One-dimensional root finding on a sign-changing bracket.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Where a safeguarded solve stopped.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootOutcome<T> {
    pub root: T,
    pub residual: T,
    pub iterations: usize,
    /// `true` when `|residual| <= tol`; `false` when the bracket shrank to
    /// adjacent floats first.
    pub converged: bool,
}

/// Newton iteration that falls back to bisection whenever the step leaves
/// the current bracket.
///
/// `f` returns the function value and its derivative. `lo` and `hi` must
/// bracket a sign change; the bracket is tightened every iteration so the
/// method cannot diverge.
pub fn safeguarded_newton<T, F>(
    mut f: F,
    start: T,
    mut lo: T,
    mut hi: T,
    tol: T,
    max_iter: usize,
) -> Result<RootOutcome<T>>
where
    T: Real,
    F: FnMut(T) -> (T, T),
{
    let (f_lo, _) = f(lo);
    let lo_positive = f_lo > T::zero();
    let mut x = if start > lo && start < hi {
        start
    } else {
        (lo + hi) / T::lit(2.0)
    };
    let mut value = T::nan();
    for iteration in 1..=max_iter {
        let (fx, dfx) = f(x);
        value = fx;
        if fx.abs() <= tol {
            return Ok(RootOutcome {
                root: x,
                residual: fx,
                iterations: iteration,
                converged: true,
            });
        }
        if (fx > T::zero()) == lo_positive {
            lo = x;
        } else {
            hi = x;
        }
        let mid = (lo + hi) / T::lit(2.0);
        if mid <= lo || mid >= hi {
            return Ok(RootOutcome {
                root: x,
                residual: fx,
                iterations: iteration,
                converged: false,
            });
        }
        let step = x - fx / dfx;
        x = if step.is_finite() && step > lo && step < hi {
            step
        } else {
            mid
        };
    }
    Err(Error::NonConvergence {
        iterations: max_iter,
        last_shape: x.as_f64(),
        last_score: value.as_f64(),
    })
}

/// Plain bisection for a sign change of `f` on `[lo, hi]`, stopping once
/// the bracket is no wider than `width`.
pub fn bisect<T, F>(mut f: F, mut lo: T, mut hi: T, width: T) -> T
where
    T: Real,
    F: FnMut(T) -> T,
{
    let lo_positive = f(lo) > T::zero();
    while hi - lo > width {
        let mid = (lo + hi) / T::lit(2.0);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == T::zero() {
            return mid;
        }
        if (fm > T::zero()) == lo_positive {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo + hi) / T::lit(2.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn newton_finds_cube_root() {
        let out = safeguarded_newton(|x: f64| (x * x * x - 2.0, 3.0 * x * x), 1.0, 0.0, 4.0, 1e-14, 100).unwrap();
        assert!(out.converged);
        assert!((out.root - 2f64.cbrt()).abs() < 1e-14);
    }

    #[test]
    fn newton_survives_flat_derivative() {
        // Newton from x = 0 would divide by zero; the bracket forces bisection.
        let out = safeguarded_newton(|x: f64| (x.powi(3) - 0.5, 3.0 * x * x), 0.0, -1.0, 1.0, 1e-13, 200).unwrap();
        assert!((out.root - 0.5f64.cbrt()).abs() < 1e-12);
    }

    #[test]
    fn newton_reports_cap() {
        let err = safeguarded_newton(|x: f64| (x - 0.3, 1.0e-30), 0.9, 0.0, 1.0, 0.0, 3).unwrap_err();
        assert!(matches!(err, Error::NonConvergence { iterations: 3, .. }));
    }

    #[test]
    fn bisection_hits_width() {
        let r = bisect(|x: f64| x.ln(), 0.5, 3.0, 1e-13);
        assert!((r - 1.0).abs() < 1e-13);
    }
}
