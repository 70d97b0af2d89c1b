//! Maximum-likelihood fits against brute-force grid searches.

use weibull_overlap::distributions::{equal_shape_score, shape_score};
use weibull_overlap::*;

/// Log-likelihood over a scale grid for one shape, from per-shape sums.
struct ShapeSums {
    n: f64,
    sum_ln: f64,
    sum_pow: f64,
}

impl ShapeSums {
    fn new(x: &[f64], shape: f64) -> Self {
        Self {
            n: x.len() as f64,
            sum_ln: x.iter().map(|v| v.ln()).sum(),
            sum_pow: x.iter().map(|v| v.powf(shape)).sum(),
        }
    }

    fn log_likelihood(&self, scale: f64, shape: f64) -> f64 {
        self.n * shape.ln() - self.n * shape * scale.ln() + (shape - 1.0) * self.sum_ln
            - self.sum_pow / scale.powf(shape)
    }

    /// Scale maximizing the likelihood at this shape.
    fn best_scale(&self, shape: f64) -> f64 {
        (self.sum_pow / self.n).powf(shape.recip())
    }
}

fn draw(scale: f64, shape: f64, n: usize, seed: u64) -> Sample {
    let mut stream = RandomStream::new(seed);
    WeibullParams::new(scale, shape)
        .unwrap()
        .sample(n, &mut stream)
        .unwrap()
}

fn grid(lo: f64, hi: f64, step: f64) -> impl Iterator<Item = f64> {
    let n = ((hi - lo) / step).round() as usize;
    (0..=n).map(move |i| lo + step * i as f64)
}

#[test]
fn unrestricted_fit_dominates_fine_grid() {
    for (seed, (scale, shape)) in [(1.0, 2.0), (1.4, 3.1), (0.7, 1.3)].into_iter().enumerate() {
        let x = draw(scale, shape, 120, 40 + seed as u64);
        let fit = fit_mle(&x).unwrap();
        assert!(fit.converged);
        let (mut best, mut arg) = (f64::NEG_INFINITY, (0.0, 0.0));
        for b in grid(1.0, 5.0, 0.001) {
            let sums = ShapeSums::new(x.values(), b);
            for a in grid(0.5, 2.0, 0.001) {
                let ll = sums.log_likelihood(a, b);
                if ll > best {
                    best = ll;
                    arg = (a, b);
                }
            }
        }
        assert!(fit.log_likelihood >= best - 1e-9, "{} < {best}", fit.log_likelihood);
        assert!(
            (fit.params.scale() - arg.0).abs() <= 0.002,
            "{:?} vs {arg:?}",
            fit.params
        );
        assert!(
            (fit.params.shape() - arg.1).abs() <= 0.002,
            "{:?} vs {arg:?}",
            fit.params
        );
        let direct = fit.params.log_likelihood(&x);
        assert!((direct - fit.log_likelihood).abs() < 1e-9);
    }
}

#[test]
fn equal_shape_fit_dominates_profile_grid() {
    let x = draw(1.0, 2.6, 60, 3);
    let y = draw(1.7, 2.6, 90, 4);
    let fit = fit_mle_equal_shape(&x, &y).unwrap();
    assert!(fit.converged);
    let (mut best, mut arg) = (f64::NEG_INFINITY, 0.0);
    for b in grid(0.5, 8.0, 0.0005) {
        let sx = ShapeSums::new(x.values(), b);
        let sy = ShapeSums::new(y.values(), b);
        let ll = sx.log_likelihood(sx.best_scale(b), b) + sy.log_likelihood(sy.best_scale(b), b);
        if ll > best {
            best = ll;
            arg = b;
        }
    }
    assert!(fit.log_likelihood >= best - 1e-9);
    assert!((fit.shape() - arg).abs() <= 0.001);
    assert_eq!(fit.first.shape(), fit.second.shape());
    let direct = fit.first.log_likelihood(&x) + fit.second.log_likelihood(&y);
    assert!((direct - fit.log_likelihood).abs() < 1e-9);
    assert!(equal_shape_score(&x, &y, fit.shape()).unwrap().abs() < 1e-8);
}

#[test]
fn score_vanishes_at_fit() {
    let x = draw(2.0, 0.8, 300, 9);
    let fit = fit_mle(&x).unwrap();
    assert!(shape_score(&x, fit.params.shape()).unwrap().abs() < 1e-8);
    assert!(fit.score_residual.abs() < 1e-8);
    let sums = ShapeSums::new(x.values(), fit.params.shape());
    let rel = (fit.params.scale() - sums.best_scale(fit.params.shape())).abs() / fit.params.scale();
    assert!(rel < 1e-12);
}

#[test]
fn fits_recover_parameters_at_large_n() {
    let x = draw(3.0, 1.7, 50_000, 12);
    let fit = fit_mle(&x).unwrap();
    assert!((fit.params.scale() - 3.0).abs() < 0.03);
    assert!((fit.params.shape() - 1.7).abs() < 0.03);
}

#[test]
fn degenerate_samples_are_rejected() {
    let same = Sample::new(vec![2.0; 10]).unwrap();
    assert!(matches!(fit_mle(&same), Err(Error::DegenerateSample(_))));
    let single = Sample::new(vec![1.5]).unwrap();
    assert!(matches!(fit_mle(&single), Err(Error::SampleTooSmall { .. })));
}
