//! Exact overlap coefficients of two Weibull densities.
//!
//! Every integral is evaluated in `u = ln x`, where `dx = e^u du` and each
//! log-density is available in closed form. That keeps integrands finite
//! where the densities themselves underflow, and turns the power-law
//! behaviour near `x = 0` into exponential decay. The integration window is
//! the union of both densities' `[q(tail), q(1 - tail)]` ranges; the
//! crossings of the two densities are located first and used as panel
//! breakpoints so the kink of `min{f1, f2}` never falls inside a panel.

use std::fmt;
use std::str::FromStr;

use crate::distributions::WeibullParams;
use crate::error::{Error, Result};
use crate::quadrature::{integrate_pieces, DEFAULT_MAX_INTERVALS};
use crate::roots::bisect;
use crate::scalar::Real;

/// Log-spaced grid used to look for sign changes of `ln f1 - ln f2`.
pub const CROSSING_GRID: usize = 4096;

/// Width, in `ln x`, to which crossings are bisected (relative width in `x`).
const CROSSING_WIDTH: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistributionPair<T> {
    pub f1: WeibullParams<T>,
    pub f2: WeibullParams<T>,
}

impl<T: Real> DistributionPair<T> {
    pub fn new(f1: WeibullParams<T>, f2: WeibullParams<T>) -> Self {
        Self { f1, f2 }
    }

    /// Builds both components from `(scale, shape)` values.
    pub fn from_params(scale1: T, shape1: T, scale2: T, shape2: T) -> Result<Self> {
        Ok(Self::new(
            WeibullParams::new(scale1, shape1)?,
            WeibullParams::new(scale2, shape2)?,
        ))
    }

    pub fn swapped(&self) -> Self {
        Self::new(self.f2, self.f1)
    }

    /// Both scales multiplied by `factor`.
    pub fn rescaled(&self, factor: T) -> Result<Self> {
        Ok(Self::new(self.f1.rescaled(factor)?, self.f2.rescaled(factor)?))
    }
}

/// Accuracy controls for the exact coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec<T> {
    pub abs_tol: T,
    pub rel_tol: T,
    /// Probability mass cut from each tail of each density.
    pub tail_mass: T,
}

impl<T: Real> QuadratureSpec<T> {
    pub fn new(abs_tol: T, rel_tol: T, tail_mass: T) -> Result<Self> {
        for (name, value) in [("abs_tol", abs_tol), ("rel_tol", rel_tol), ("tail_mass", tail_mass)] {
            if !(value > T::zero() && value < T::one()) {
                return Err(Error::InvalidParameter {
                    name,
                    value: value.as_f64(),
                    reason: "must lie in (0, 1)",
                });
            }
        }
        Ok(Self {
            abs_tol,
            rel_tol,
            tail_mass,
        })
    }
}

impl<T: Real> Default for QuadratureSpec<T> {
    fn default() -> Self {
        Self {
            abs_tol: T::lit(T::QUAD_TOL),
            rel_tol: T::lit(T::QUAD_TOL),
            tail_mass: T::lit(1e-12),
        }
    }
}

/// The five overlap coefficients of one pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OvlValues<T> {
    pub delta: T,
    pub rho: T,
    pub lambda: T,
    pub pianka: T,
    pub kl: T,
}

impl<T: Real> OvlValues<T> {
    pub fn get(&self, kind: Coefficient) -> T {
        match kind {
            Coefficient::Delta => self.delta,
            Coefficient::Rho => self.rho,
            Coefficient::Lambda => self.lambda,
            Coefficient::Pianka => self.pianka,
            Coefficient::Kl => self.kl,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Coefficient {
    /// Weitzman: `∫ min{f1, f2}`.
    Delta,
    /// Matusita: `∫ sqrt(f1 f2)`.
    Rho,
    /// Morisita: `2 ∫ f1 f2 / (∫ f1² + ∫ f2²)`.
    Lambda,
    /// Pianka: `∫ f1 f2 / sqrt(∫ f1² ∫ f2²)`.
    Pianka,
    /// Kullback–Leibler: `1 / (1 + ∫ (f1 - f2) ln(f1 / f2))`.
    Kl,
}

impl Coefficient {
    pub const ALL: [Coefficient; 5] = [
        Coefficient::Delta,
        Coefficient::Rho,
        Coefficient::Lambda,
        Coefficient::Pianka,
        Coefficient::Kl,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Coefficient::Delta => "delta",
            Coefficient::Rho => "rho",
            Coefficient::Lambda => "lambda",
            Coefficient::Pianka => "pianka",
            Coefficient::Kl => "kl",
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Coefficient {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Coefficient::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| format!("unknown coefficient {s:?} (expected delta, rho, lambda, pianka or kl)"))
    }
}

/// Integration window `[lo, hi]` in `x`.
pub fn window<T: Real>(pair: &DistributionPair<T>, spec: &QuadratureSpec<T>) -> (T, T) {
    let (lo1, hi1) = density_window(&pair.f1, spec.tail_mass);
    let (lo2, hi2) = density_window(&pair.f2, spec.tail_mass);
    (lo1.min(lo2), hi1.max(hi2))
}

/// `q(tail)` and `q(1 - tail)` without forming `1 - tail`.
fn density_window<T: Real>(params: &WeibullParams<T>, tail: T) -> (T, T) {
    let inv = params.shape().recip();
    let lo = params.scale() * (-(-tail).ln_1p()).powf(inv);
    let hi = params.scale() * (-tail.ln()).powf(inv);
    (lo, hi)
}

fn log_window<T: Real>(pair: &DistributionPair<T>, spec: &QuadratureSpec<T>) -> (T, T) {
    let (lo, hi) = window(pair, spec);
    (lo.ln(), hi.ln())
}

/// Points in the integration window where `f1(x) = f2(x)`, ascending.
pub fn crossings<T: Real>(pair: &DistributionPair<T>, spec: &QuadratureSpec<T>) -> Vec<T> {
    let (u_lo, u_hi) = log_window(pair, spec);
    log_crossings(pair, u_lo, u_hi).into_iter().map(|u| u.exp()).collect()
}

fn log_crossings<T: Real>(pair: &DistributionPair<T>, u_lo: T, u_hi: T) -> Vec<T> {
    let diff = |u: T| pair.f1.ln_density_at_log(u) - pair.f2.ln_density_at_log(u);
    let step = (u_hi - u_lo) / T::from_count(CROSSING_GRID - 1);
    let grid_point = |i: usize| {
        if i == CROSSING_GRID - 1 {
            u_hi
        } else {
            u_lo + step * T::from_count(i)
        }
    };
    let sign = |v: T| {
        if v > T::zero() {
            1
        } else if v < T::zero() {
            -1
        } else {
            0
        }
    };
    let mut roots = Vec::new();
    let mut prev_u = grid_point(0);
    let mut prev_sign = sign(diff(prev_u));
    for i in 1..CROSSING_GRID {
        let u = grid_point(i);
        let s = sign(diff(u));
        if prev_sign * s < 0 {
            roots.push(bisect(diff, prev_u, u, T::lit(CROSSING_WIDTH)));
        } else if s == 0 && prev_sign != 0 && i < CROSSING_GRID - 1 {
            roots.push(u);
        }
        prev_u = u;
        prev_sign = s;
    }
    roots
}

/// Cumulative hazards `-ln S(x)` at which each density gets a panel anchor.
const ANCHOR_HAZARDS: [f64; 10] = [1e-9, 1e-6, 1e-3, 0.05, 0.29, 0.69, 1.39, 3.0, 6.9, 13.8];

/// Panel breakpoints in `ln x`: the ends, interior crossings when `kinks`
/// is set, and quantile anchors of both densities so that no narrow peak
/// hides inside one long panel.
fn breakpoints<T: Real>(pair: &DistributionPair<T>, u_lo: T, u_hi: T, kinks: bool) -> Vec<T> {
    let mut points = vec![u_lo, u_hi];
    if kinks {
        points.extend(log_crossings(pair, u_lo, u_hi));
    }
    for params in [pair.f1, pair.f2] {
        let (ln_scale, inv) = (params.scale().ln(), params.shape().recip());
        points.extend(ANCHOR_HAZARDS.iter().map(|&z| ln_scale + T::lit(z).ln() * inv));
    }
    points.retain(|&u| u >= u_lo && u <= u_hi);
    points.sort_by(|a, b| a.partial_cmp(b).unwrap());
    points.dedup_by(|a, b| *a - *b <= T::epsilon() * (T::one() + b.abs()));
    points
}

fn integrate_log<T, F>(integrand: F, points: &[T], spec: &QuadratureSpec<T>) -> Result<T>
where
    T: Real,
    F: Fn(T) -> T,
{
    Ok(integrate_pieces(integrand, points, spec.abs_tol, spec.rel_tol, DEFAULT_MAX_INTERVALS)?.value)
}

/// `∫ f(x) dx` of one density over its own window; 1 up to the cut tails.
pub fn density_mass<T: Real>(params: &WeibullParams<T>, spec: &QuadratureSpec<T>) -> Result<T> {
    let (lo, hi) = density_window(params, spec.tail_mass);
    integrate_log(
        |u: T| (params.ln_density_at_log(u) + u).exp(),
        &[lo.ln(), hi.ln()],
        spec,
    )
}

/// Weitzman coefficient `∫ min{f1, f2}`.
pub fn delta_exact<T: Real>(pair: &DistributionPair<T>, spec: &QuadratureSpec<T>) -> Result<T> {
    let (u_lo, u_hi) = log_window(pair, spec);
    let points = breakpoints(pair, u_lo, u_hi, true);
    integrate_log(
        |u: T| {
            let l1 = pair.f1.ln_density_at_log(u);
            let l2 = pair.f2.ln_density_at_log(u);
            (l1.min(l2) + u).exp()
        },
        &points,
        spec,
    )
}

/// Lower limit in `ln x` for an integrand behaving like `x^(rate - 1)` near
/// the origin: far enough down that the dropped mass is `O(tail / rate)`.
fn product_lower_limit<T: Real>(pair: &DistributionPair<T>, spec: &QuadratureSpec<T>, rate: T, u_lo: T) -> T {
    let anchor = pair.f1.scale().min(pair.f2.scale()).ln();
    u_lo.min(anchor + spec.tail_mass.ln() / rate)
}

fn check_square_integrable<T: Real>(pair: &DistributionPair<T>, kind: Coefficient) -> Result<()> {
    for params in [pair.f1, pair.f2] {
        if params.shape() <= T::lit(0.5) {
            return Err(Error::DivergentIntegral {
                coefficient: kind.name(),
                shape: params.shape().as_f64(),
            });
        }
    }
    Ok(())
}

/// `∫ f_a f_b` where `a`, `b` pick components of the pair.
fn product_integral<T: Real>(
    a: &WeibullParams<T>,
    b: &WeibullParams<T>,
    pair: &DistributionPair<T>,
    spec: &QuadratureSpec<T>,
) -> Result<T> {
    let (u_lo, u_hi) = log_window(pair, spec);
    let rate = a.shape() + b.shape() - T::one();
    let lower = product_lower_limit(pair, spec, rate, u_lo);
    integrate_log(
        |u: T| (a.ln_density_at_log(u) + b.ln_density_at_log(u) + u).exp(),
        &breakpoints(pair, lower, u_hi, false),
        spec,
    )
}

/// One coefficient by windowed adaptive quadrature.
pub fn coefficient_exact<T: Real>(
    kind: Coefficient,
    pair: &DistributionPair<T>,
    spec: &QuadratureSpec<T>,
) -> Result<T> {
    let (u_lo, u_hi) = log_window(pair, spec);
    match kind {
        Coefficient::Delta => delta_exact(pair, spec),
        Coefficient::Rho => integrate_log(
            |u: T| {
                let l1 = pair.f1.ln_density_at_log(u);
                let l2 = pair.f2.ln_density_at_log(u);
                ((l1 + l2) / T::lit(2.0) + u).exp()
            },
            &breakpoints(pair, u_lo, u_hi, true),
            spec,
        ),
        Coefficient::Lambda | Coefficient::Pianka => {
            check_square_integrable(pair, kind)?;
            let cross = product_integral(&pair.f1, &pair.f2, pair, spec)?;
            let sq1 = product_integral(&pair.f1, &pair.f1, pair, spec)?;
            let sq2 = product_integral(&pair.f2, &pair.f2, pair, spec)?;
            Ok(if kind == Coefficient::Lambda {
                T::lit(2.0) * cross / (sq1 + sq2)
            } else {
                cross / (sq1 * sq2).sqrt()
            })
        }
        Coefficient::Kl => {
            let divergence = integrate_log(
                |u: T| {
                    let l1 = pair.f1.ln_density_at_log(u);
                    let l2 = pair.f2.ln_density_at_log(u);
                    ((l1 + u).exp() - (l2 + u).exp()) * (l1 - l2)
                },
                &breakpoints(pair, u_lo, u_hi, true),
                spec,
            )?;
            Ok((T::one() + divergence).recip())
        }
    }
}

/// All five coefficients.
pub fn ovl_exact<T: Real>(pair: &DistributionPair<T>, spec: &QuadratureSpec<T>) -> Result<OvlValues<T>> {
    Ok(OvlValues {
        delta: delta_exact(pair, spec)?,
        rho: coefficient_exact(Coefficient::Rho, pair, spec)?,
        lambda: coefficient_exact(Coefficient::Lambda, pair, spec)?,
        pianka: coefficient_exact(Coefficient::Pianka, pair, spec)?,
        kl: coefficient_exact(Coefficient::Kl, pair, spec)?,
    })
}
