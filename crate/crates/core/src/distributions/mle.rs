//! Maximum-likelihood fitting through the shape profile score.
//!
//! For a sample `x` the profile score in the shape `b` is
//!
//! ```text
//! g(b) = n/b + sum ln x - n * sum(x^b ln x) / sum(x^b)
//! ```
//!
//! and the scale follows as `((1/n) sum x^b)^(1/b)`. `g` is strictly
//! decreasing, so a sign-change bracket always exists for non-degenerate
//! data. The sums are evaluated on centred logs with the largest term
//! factored out, which keeps them finite for any shape.

use crate::distributions::{Sample, WeibullParams};
use crate::error::{Error, Result};
use crate::roots::safeguarded_newton;
use crate::scalar::Real;

const MAX_ITERATIONS: usize = 100;
const MAX_BRACKET_STEPS: usize = 200;

/// Single-sample fit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitResult<T> {
    pub params: WeibullParams<T>,
    pub log_likelihood: T,
    pub iterations: usize,
    pub converged: bool,
    /// Profile score at the reported shape.
    pub score_residual: T,
}

/// Two-sample fit with one shape shared by both populations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EqualShapeFit<T> {
    pub first: WeibullParams<T>,
    pub second: WeibullParams<T>,
    /// Joint log-likelihood of both samples.
    pub log_likelihood: T,
    pub iterations: usize,
    pub converged: bool,
    pub score_residual: T,
}

impl<T: Real> EqualShapeFit<T> {
    #[inline]
    pub fn shape(&self) -> T {
        self.first.shape()
    }
}

/// Log-scale summary of one sample.
struct LogMoments<T> {
    n: T,
    mean: T,
    centered: Vec<T>,
    max: T,
    sum_sq: T,
}

impl<T: Real> LogMoments<T> {
    fn new(sample: &Sample<T>) -> Result<Self> {
        if sample.len() < 2 {
            return Err(Error::SampleTooSmall {
                required: 2,
                actual: sample.len(),
            });
        }
        let n = T::from_count(sample.len());
        let logs: Vec<T> = sample.values().iter().map(|x| x.ln()).collect();
        let mean = logs.iter().copied().sum::<T>() / n;
        let centered: Vec<T> = logs.iter().map(|&l| l - mean).collect();
        let max = centered.iter().copied().fold(T::neg_infinity(), T::max);
        let min = centered.iter().copied().fold(T::infinity(), T::min);
        if max - min <= T::zero() {
            return Err(Error::DegenerateSample(
                "all observations are equal; the shape estimate diverges",
            ));
        }
        let sum_sq = centered.iter().map(|&d| d * d).sum();
        Ok(Self {
            n,
            mean,
            centered,
            max,
            sum_sq,
        })
    }

    /// `(sum w, sum w d, sum w d^2)` with `w = exp(b (d - max))`.
    fn weighted_sums(&self, shape: T) -> (T, T, T) {
        let mut s0 = T::zero();
        let mut s1 = T::zero();
        let mut s2 = T::zero();
        for &d in &self.centered {
            let w = (shape * (d - self.max)).exp();
            s0 = s0 + w;
            s1 = s1 + w * d;
            s2 = s2 + w * d * d;
        }
        (s0, s1, s2)
    }

    /// Profile score and its derivative.
    fn score(&self, shape: T) -> (T, T) {
        let (s0, s1, s2) = self.weighted_sums(shape);
        let m1 = s1 / s0;
        let var = (s2 / s0 - m1 * m1).max(T::zero());
        (self.n * (shape.recip() - m1), -self.n * (shape.powi(-2) + var))
    }

    fn scale_for(&self, shape: T) -> T {
        let (s0, _, _) = self.weighted_sums(shape);
        (self.mean + self.max + (s0 / self.n).ln() / shape).exp()
    }
}

/// Moment-of-logs starting shape `pi / (sqrt 6 * sd)`.
fn initial_shape<T: Real>(sum_sq: T, dof: T) -> T {
    let sd = (sum_sq / dof).sqrt();
    T::PI() / (T::lit(6.0).sqrt() * sd)
}

fn solve_shape<T, F>(score: F, start: T) -> Result<(T, T, usize)>
where
    T: Real,
    F: Fn(T) -> (T, T),
{
    let two = T::lit(2.0);
    let mut lo = start;
    let mut hi = start;
    let mut steps = 0;
    while score(lo).0 <= T::zero() {
        lo = lo / two;
        steps += 1;
        if steps > MAX_BRACKET_STEPS || lo <= T::zero() {
            return Err(bracket_failure(lo, score(lo).0));
        }
    }
    while score(hi).0 >= T::zero() {
        hi = hi * two;
        steps += 1;
        if steps > MAX_BRACKET_STEPS || !hi.is_finite() {
            return Err(bracket_failure(hi, score(hi).0));
        }
    }
    let outcome = safeguarded_newton(&score, start, lo, hi, T::lit(T::SCORE_TOL), MAX_ITERATIONS)?;
    Ok((outcome.root, outcome.residual, outcome.iterations))
}

fn bracket_failure<T: Real>(shape: T, score: T) -> Error {
    Error::NonConvergence {
        iterations: MAX_BRACKET_STEPS,
        last_shape: shape.as_f64(),
        last_score: score.as_f64(),
    }
}

/// Profile score of `sample` at `shape`.
pub fn shape_score<T: Real>(sample: &Sample<T>, shape: T) -> Result<T> {
    Ok(LogMoments::new(sample)?.score(shape).0)
}

/// Pooled profile score of two samples sharing `shape`.
pub fn equal_shape_score<T: Real>(x: &Sample<T>, y: &Sample<T>, shape: T) -> Result<T> {
    Ok(LogMoments::new(x)?.score(shape).0 + LogMoments::new(y)?.score(shape).0)
}

/// Unrestricted maximum-likelihood fit of one sample.
pub fn fit_mle<T: Real>(sample: &Sample<T>) -> Result<FitResult<T>> {
    let moments = LogMoments::new(sample)?;
    let start = initial_shape(moments.sum_sq, moments.n - T::one());
    let (shape, residual, iterations) = solve_shape(|b| moments.score(b), start)?;
    let params = WeibullParams::new(moments.scale_for(shape), shape)?;
    Ok(FitResult {
        params,
        log_likelihood: params.log_likelihood(sample),
        iterations,
        converged: residual.abs() <= T::lit(T::CONVERGED_TOL),
        score_residual: residual,
    })
}

/// Maximum-likelihood fit of two samples under a common shape.
pub fn fit_mle_equal_shape<T: Real>(x: &Sample<T>, y: &Sample<T>) -> Result<EqualShapeFit<T>> {
    let mx = LogMoments::new(x)?;
    let my = LogMoments::new(y)?;
    let dof = mx.n + my.n - T::lit(2.0);
    let start = initial_shape(mx.sum_sq + my.sum_sq, dof);
    let pooled = |b: T| {
        let (gx, dx) = mx.score(b);
        let (gy, dy) = my.score(b);
        (gx + gy, dx + dy)
    };
    let (shape, residual, iterations) = solve_shape(pooled, start)?;
    let first = WeibullParams::new(mx.scale_for(shape), shape)?;
    let second = WeibullParams::new(my.scale_for(shape), shape)?;
    Ok(EqualShapeFit {
        first,
        second,
        log_likelihood: first.log_likelihood(x) + second.log_likelihood(y),
        iterations,
        converged: residual.abs() <= T::lit(T::CONVERGED_TOL),
        score_residual: residual,
    })
}
