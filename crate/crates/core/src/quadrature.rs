//! Globally adaptive 15-point Gauss–Kronrod quadrature.
//!
//! Integration starts from caller-supplied breakpoints so that known kinks
//! of the integrand always sit on panel boundaries. The panel with the
//! largest error estimate is bisected until the summed estimate meets
//! `max(abs_tol, rel_tol * |I|)`.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Default cap on the number of live subintervals.
pub const DEFAULT_MAX_INTERVALS: usize = 4000;

// Kronrod abscissae; odd indices (and the centre) are the 7-point Gauss nodes.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral<T> {
    pub value: T,
    pub error: T,
    pub intervals: usize,
}

#[derive(Debug, Clone, Copy)]
struct Panel<T> {
    a: T,
    b: T,
    value: T,
    error: T,
}

/// One Kronrod panel with a QUADPACK-style error estimate.
fn kronrod<T: Real, F: Fn(T) -> T>(f: &F, a: T, b: T) -> Panel<T> {
    let two = T::lit(2.0);
    let center = (a + b) / two;
    let half = (b - a) / two;
    let f_center = f(center);
    let mut res_k = f_center * T::lit(WGK[7]);
    let mut res_g = f_center * T::lit(WG[3]);
    let mut res_abs = res_k.abs();
    let mut fv1 = [T::zero(); 7];
    let mut fv2 = [T::zero(); 7];
    for j in 0..7 {
        let dx = half * T::lit(XGK[j]);
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        let wk = T::lit(WGK[j]);
        res_k = res_k + wk * (f1 + f2);
        res_abs = res_abs + wk * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_g = res_g + T::lit(WG[j / 2]) * (f1 + f2);
        }
    }
    let mean = res_k / two;
    let mut res_asc = T::lit(WGK[7]) * (f_center - mean).abs();
    for j in 0..7 {
        res_asc = res_asc + T::lit(WGK[j]) * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let scale = half.abs();
    let value = res_k * half;
    let res_abs = res_abs * scale;
    let res_asc = res_asc * scale;
    let mut error = ((res_k - res_g) * half).abs();
    if res_asc > T::zero() && error > T::zero() {
        let ratio = (T::lit(200.0) * error / res_asc).powf(T::lit(1.5));
        error = res_asc * ratio.min(T::one());
    }
    let floor = T::lit(50.0) * T::epsilon() * res_abs;
    if res_abs > T::min_positive_value() / (T::lit(50.0) * T::epsilon()) {
        error = error.max(floor);
    }
    Panel { a, b, value, error }
}

/// Integrates `f` over `[a, b]`.
pub fn integrate<T, F>(f: F, a: T, b: T, abs_tol: T, rel_tol: T) -> Result<Integral<T>>
where
    T: Real,
    F: Fn(T) -> T,
{
    integrate_pieces(f, &[a, b], abs_tol, rel_tol, DEFAULT_MAX_INTERVALS)
}

/// Integrates `f` over `[points[0], points[last]]`, never placing a node
/// across an interior breakpoint.
pub fn integrate_pieces<T, F>(f: F, points: &[T], abs_tol: T, rel_tol: T, max_intervals: usize) -> Result<Integral<T>>
where
    T: Real,
    F: Fn(T) -> T,
{
    let mut panels: Vec<Panel<T>> = points
        .windows(2)
        .filter(|w| w[1] > w[0])
        .map(|w| kronrod(&f, w[0], w[1]))
        .collect();
    if panels.is_empty() {
        return Ok(Integral {
            value: T::zero(),
            error: T::zero(),
            intervals: 0,
        });
    }
    loop {
        let value: T = panels.iter().map(|p| p.value).sum();
        let error: T = panels.iter().map(|p| p.error).sum();
        let tol = abs_tol.max(rel_tol * value.abs());
        if error <= tol {
            return Ok(Integral {
                value,
                error,
                intervals: panels.len(),
            });
        }
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.error.partial_cmp(&y.1.error).unwrap_or(std::cmp::Ordering::Equal))
            .map(|(i, _)| i)
            .unwrap_or(0);
        let Panel { a, b, .. } = panels[worst];
        let mid = (a + b) / T::lit(2.0);
        if panels.len() >= max_intervals || mid <= a || mid >= b || !error.is_finite() {
            return Err(Error::Accuracy {
                estimate: error.as_f64(),
                tolerance: tol.as_f64(),
                intervals: panels.len(),
            });
        }
        panels[worst] = kronrod(&f, a, mid);
        panels.push(kronrod(&f, mid, b));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomials_are_exact_on_one_panel() {
        let r = integrate(|x: f64| 3.0 * x * x - x + 2.0, -1.0, 2.0, 1e-12, 1e-12).unwrap();
        assert!((r.value - (8.0 + 1.0 - 1.5 + 6.0)).abs() < 1e-13);
        assert_eq!(r.intervals, 1);
    }

    #[test]
    fn gaussian_mass() {
        let phi = |x: f64| (-0.5 * x * x).exp() / (2.0 * std::f64::consts::PI).sqrt();
        let r = integrate(phi, -12.0, 12.0, 1e-12, 1e-12).unwrap();
        assert!((r.value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn kink_on_a_breakpoint() {
        let f = |x: f64| (x - 0.3).abs();
        let r = integrate_pieces(f, &[0.0, 0.3, 1.0], 1e-14, 1e-14, 100).unwrap();
        assert!((r.value - (0.045 + 0.245)).abs() < 1e-14);
    }

    #[test]
    fn endpoint_singularity_converges_adaptively() {
        let r = integrate(|x: f64| 1.0 / x.sqrt(), 0.0, 1.0, 1e-9, 1e-9).unwrap();
        assert!((r.value - 2.0).abs() < 1e-8);
        assert!(r.intervals > 1);
    }

    #[test]
    fn impossible_tolerance_is_reported() {
        let err = integrate_pieces(|x: f64| (1.0 / x).sin(), &[1e-6, 1.0], 1e-15, 0.0, 20).unwrap_err();
        assert!(matches!(err, Error::Accuracy { .. }));
    }

    #[test]
    fn empty_range() {
        let r = integrate(|x: f64| x, 1.0, 1.0, 1e-9, 1e-9).unwrap();
        assert_eq!(r.value, 0.0);
    }

    #[test]
    fn single_precision() {
        let r = integrate(|x: f32| x.exp(), 0.0, 1.0, 1e-5, 1e-5).unwrap();
        assert!((r.value - (std::f32::consts::E - 1.0)).abs() < 1e-5);
    }
}
