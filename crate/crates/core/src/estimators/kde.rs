use crate::distributions::Sample;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Rule-of-thumb bandwidth `1.06 * S * n^(-1/5)`, `S` the sample standard
/// deviation with divisor `n - 1`.
pub fn silverman_bandwidth<T: Real>(values: &[T]) -> Result<T> {
    let n = values.len();
    if n < 2 {
        return Err(Error::SampleTooSmall { required: 2, actual: n });
    }
    let count = T::from_count(n);
    let mean = values.iter().copied().sum::<T>() / count;
    let ss: T = values.iter().map(|&v| (v - mean) * (v - mean)).sum();
    let sd = (ss / (count - T::one())).sqrt();
    if sd.is_nan() || sd <= T::zero() {
        return Err(Error::DegenerateSample(
            "zero standard deviation; bandwidth would be zero",
        ));
    }
    Ok(T::lit(1.06) * sd * count.powf(T::lit(-0.2)))
}

/// Gaussian kernel density estimate.
#[derive(Debug, Clone, PartialEq)]
pub struct KdeModel<T> {
    points: Vec<T>,
    bandwidth: T,
}

impl<T: Real> KdeModel<T> {
    /// Points may be any finite reals; the estimate is not restricted to
    /// the positive half-line.
    pub fn new(points: Vec<T>, bandwidth: T) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::SampleTooSmall { required: 1, actual: 0 });
        }
        if let Some((index, &value)) = points.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(Error::InvalidObservation {
                index,
                value: value.as_f64(),
            });
        }
        if !(bandwidth > T::zero() && bandwidth.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "bandwidth",
                value: bandwidth.as_f64(),
                reason: "must be finite and > 0",
            });
        }
        Ok(Self { points, bandwidth })
    }

    /// Model over `sample` with the rule-of-thumb bandwidth.
    pub fn from_sample(sample: &Sample<T>) -> Result<Self> {
        let bandwidth = silverman_bandwidth(sample.values())?;
        Self::new(sample.values().to_vec(), bandwidth)
    }

    pub fn points(&self) -> &[T] {
        &self.points
    }

    pub fn bandwidth(&self) -> T {
        self.bandwidth
    }

    /// `(1/(n h)) sum phi((x - p_i)/h)`.
    pub fn pdf(&self, x: T) -> T {
        let half = T::lit(0.5);
        let inv_h = self.bandwidth.recip();
        let total: T = self
            .points
            .iter()
            .map(|&p| {
                let z = (x - p) * inv_h;
                (-half * z * z).exp()
            })
            .sum();
        let norm = (T::lit(2.0) * T::PI()).sqrt() * self.bandwidth * T::from_count(self.points.len());
        total / norm
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bandwidth_of_two_points() {
        let h = silverman_bandwidth(&[0.5f64, 1.5]).unwrap();
        let expected = 1.06 * 0.5f64.sqrt() * 2f64.powf(-0.2);
        assert!((h - expected).abs() < 1e-15);
        assert!((h - 0.652_507).abs() < 1e-6);
    }

    #[test]
    fn bandwidth_is_scale_equivariant() {
        let xs = [0.3f64, 1.1, 2.7, 0.9, 1.4];
        let scaled: Vec<f64> = xs.iter().map(|x| x * 7.5).collect();
        let h = silverman_bandwidth(&xs).unwrap();
        assert!((silverman_bandwidth(&scaled).unwrap() - 7.5 * h).abs() < 1e-14);
    }

    #[test]
    fn constant_sample_has_no_bandwidth() {
        assert!(matches!(
            silverman_bandwidth(&[2.0f64, 2.0, 2.0]),
            Err(Error::DegenerateSample(_))
        ));
        assert!(matches!(
            silverman_bandwidth(&[2.0f64]),
            Err(Error::SampleTooSmall { .. })
        ));
    }

    #[test]
    fn single_point_peak() {
        let m = KdeModel::new(vec![3.0f64], 1.0).unwrap();
        assert!((m.pdf(3.0) - 0.398_942_3).abs() < 1e-7);
    }

    #[test]
    fn symmetric_points_give_even_density() {
        let m = KdeModel::new(vec![-1.3f64, 1.3], 0.7).unwrap();
        for &x in &[0.1, 0.8, 2.5, 6.0] {
            assert!((m.pdf(x) - m.pdf(-x)).abs() < 1e-12);
        }
    }

    #[test]
    fn strictly_positive_in_reach() {
        let m = KdeModel::new(vec![1.0f64, 2.0], 0.5).unwrap();
        assert!(m.pdf(-5.0) > 0.0);
    }

    #[test]
    fn invalid_models() {
        assert!(KdeModel::<f64>::new(vec![], 1.0).is_err());
        assert!(KdeModel::new(vec![1.0f64], 0.0).is_err());
        assert!(KdeModel::new(vec![f64::NAN], 1.0).is_err());
    }
}
