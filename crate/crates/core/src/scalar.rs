//! Floating-point abstraction shared by every numeric routine in the crate.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};
use rand::distributions::Open01;
use rand::Rng;

/// Real scalar the numeric core is written against: `f32` or `f64`.
///
/// The associated tolerances are the defaults used when a caller does not
/// supply its own; they are pinned to what each precision can actually reach.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Sum + Send + Sync + 'static
{
    /// Default absolute and relative quadrature tolerance.
    const QUAD_TOL: f64;
    /// Residual at which the shape score iteration stops.
    const SCORE_TOL: f64;
    /// Residual bound backing the `converged` flag of a fit.
    const CONVERGED_TOL: f64;

    /// Uniform variate on the open interval (0, 1).
    fn open01<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Lossless-enough conversion from an `f64` literal.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in target float")
    }

    #[inline]
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count representable in target float")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    const QUAD_TOL: f64 = 1e-9;
    const SCORE_TOL: f64 = 1e-10;
    const CONVERGED_TOL: f64 = 1e-8;

    #[inline]
    fn open01<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.sample(Open01)
    }
}

impl Real for f32 {
    const QUAD_TOL: f64 = 1e-5;
    const SCORE_TOL: f64 = 1e-4;
    const CONVERGED_TOL: f64 = 1e-2;

    #[inline]
    fn open01<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.sample(Open01)
    }
}
