use crate::distributions::Sample;
use crate::error::{Error, Result};
use crate::random::RandomStream;
use crate::scalar::Real;

/// Two-parameter Weibull law with density
/// `(shape/scale) (x/scale)^(shape-1) exp(-(x/scale)^shape)` on `x > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeibullParams<T> {
    scale: T,
    shape: T,
}

impl<T: Real> WeibullParams<T> {
    pub fn new(scale: T, shape: T) -> Result<Self> {
        check_positive("scale", scale)?;
        check_positive("shape", shape)?;
        Ok(Self { scale, shape })
    }

    /// Exponential law with the given mean.
    pub fn exponential(scale: T) -> Result<Self> {
        Self::new(scale, T::one())
    }

    /// Rayleigh law with parameter `sigma`, i.e. scale `sqrt(2) sigma`, shape 2.
    pub fn rayleigh(sigma: T) -> Result<Self> {
        Self::new(T::SQRT_2() * sigma, T::lit(2.0))
    }

    #[inline]
    pub fn scale(&self) -> T {
        self.scale
    }

    #[inline]
    pub fn shape(&self) -> T {
        self.shape
    }

    /// Same shape, scale multiplied by `factor`.
    pub fn rescaled(&self, factor: T) -> Result<Self> {
        Self::new(self.scale * factor, self.shape)
    }

    pub fn pdf(&self, x: T) -> Result<T> {
        check_support("pdf", x)?;
        Ok(self.density(x))
    }

    pub fn ln_pdf(&self, x: T) -> Result<T> {
        check_support("ln_pdf", x)?;
        Ok(self.ln_density(x))
    }

    pub fn cdf(&self, x: T) -> Result<T> {
        check_support("cdf", x)?;
        Ok(-(-(x / self.scale).powf(self.shape)).exp_m1())
    }

    pub fn quantile(&self, p: T) -> Result<T> {
        if !(p > T::zero() && p < T::one()) {
            return Err(Error::Domain {
                function: "quantile",
                value: p.as_f64(),
            });
        }
        Ok(self.scale * (-(-p).ln_1p()).powf(self.shape.recip()))
    }

    /// `n` variates by inverse transform, `scale * (-ln U)^(1/shape)`.
    pub fn sample(&self, n: usize, stream: &mut RandomStream) -> Result<Sample<T>> {
        let inv_shape = self.shape.recip();
        let values = (0..n)
            .map(|_| {
                let u: T = stream.open01();
                self.scale * (-u.ln()).powf(inv_shape)
            })
            .collect();
        Sample::new(values)
    }

    /// Density without the domain check; callers guarantee `x > 0`.
    #[inline]
    pub(crate) fn density(&self, x: T) -> T {
        let z = x / self.scale;
        self.shape / self.scale * z.powf(self.shape - T::one()) * (-z.powf(self.shape)).exp()
    }

    /// Log-density without the domain check.
    #[inline]
    pub(crate) fn ln_density(&self, x: T) -> T {
        self.ln_density_at_log(x.ln())
    }

    /// Log-density expressed through `u = ln x`; finite for every finite `u`
    /// even where the density itself underflows.
    #[inline]
    pub(crate) fn ln_density_at_log(&self, u: T) -> T {
        let v = u - self.scale.ln();
        (self.shape / self.scale).ln() + (self.shape - T::one()) * v - (self.shape * v).exp()
    }

    /// Log-likelihood of `sample` under these parameters.
    pub fn log_likelihood(&self, sample: &Sample<T>) -> T {
        sample.values().iter().map(|&x| self.ln_density(x)).sum()
    }
}

fn check_positive<T: Real>(name: &'static str, value: T) -> Result<()> {
    if !value.is_finite() {
        return Err(Error::InvalidParameter {
            name,
            value: value.as_f64(),
            reason: "must be finite",
        });
    }
    if value <= T::zero() {
        return Err(Error::InvalidParameter {
            name,
            value: value.as_f64(),
            reason: "must be > 0",
        });
    }
    Ok(())
}

fn check_support<T: Real>(function: &'static str, x: T) -> Result<()> {
    if x > T::zero() && !x.is_nan() {
        Ok(())
    } else {
        Err(Error::Domain {
            function,
            value: x.as_f64(),
        })
    }
}
