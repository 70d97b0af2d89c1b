use statrs::distribution::{Continuous, ContinuousCDF, Weibull as Reference};
use statrs::function::gamma::gamma;
use weibull_overlap::*;

#[test]
fn densities_match_reference_library() {
    for (scale, shape) in [(1.0, 3.0), (2.5, 0.7), (0.3, 12.0)] {
        let ours = WeibullParams::new(scale, shape).unwrap();
        let reference = Reference::new(shape, scale).unwrap();
        for x in [0.05, 0.4, 1.0, 2.2, 7.5] {
            let p = reference.pdf(x);
            assert!((ours.pdf(x).unwrap() - p).abs() <= 1e-12 * p.max(1.0));
            assert!((ours.cdf(x).unwrap() - reference.cdf(x)).abs() <= 1e-13);
        }
    }
}

#[test]
fn sample_mean_matches_gamma_moment() {
    let w = WeibullParams::new(1.0, 3.0).unwrap();
    let mut s = RandomStream::new(11);
    let x = w.sample(200_000, &mut s).unwrap();
    let mean = x.values().iter().sum::<f64>() / x.len() as f64;
    let expected = gamma(1.0 + 1.0 / 3.0);
    let sd = (gamma(1.0 + 2.0 / 3.0) - expected * expected).sqrt();
    assert!((mean - expected).abs() < 4.0 * sd / (x.len() as f64).sqrt());
}

#[test]
fn empirical_cdf_is_close() {
    let w = WeibullParams::new(2.0, 1.5).unwrap();
    let mut s = RandomStream::new(12);
    let mut x = w.sample(100_000, &mut s).unwrap().into_values();
    x.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = x.len() as f64;
    let d = x
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let c = w.cdf(v).unwrap();
            (c - i as f64 / n).abs().max(((i + 1) as f64 / n - c).abs())
        })
        .fold(0.0f64, f64::max);
    // 1% critical value of the Kolmogorov distribution.
    assert!(d < 1.63 / n.sqrt(), "D = {d}");
}

#[test]
fn quantile_inverts_cdf() {
    let w = WeibullParams::new(0.8, 4.2).unwrap();
    for i in 1..1000 {
        let p = i as f64 / 1000.0;
        assert!((w.cdf(w.quantile(p).unwrap()).unwrap() - p).abs() < 1e-10);
    }
    for p in [0.0, 1.0, 1.5, f64::NAN] {
        assert!(matches!(w.quantile(p), Err(Error::Domain { .. })));
    }
}

#[test]
fn streams_are_reproducible() {
    let w = WeibullParams::new(1.0, 2.0).unwrap();
    let a = w.sample(50, &mut derive_substream(9, 4)).unwrap();
    let b = w.sample(50, &mut derive_substream(9, 4)).unwrap();
    let c = w.sample(50, &mut derive_substream(9, 5)).unwrap();
    assert_eq!(a, b);
    assert_ne!(a, c);
}

#[test]
fn csv_round_trip() {
    let w = WeibullParams::new(1.0, 2.0).unwrap();
    let x = w.sample(30, &mut RandomStream::new(1)).unwrap();
    let back = Sample::from_csv_str(&x.to_csv_string()).unwrap();
    assert_eq!(x, back);
    let err = Sample::from_csv_str("value\n1.0\n-2\n").unwrap_err();
    assert!(err.to_string().contains('3'), "{err}");
}

#[test]
fn invalid_parameters_are_rejected() {
    assert!(WeibullParams::new(0.0, 1.0).is_err());
    assert!(WeibullParams::new(1.0, -1.0).is_err());
    assert!(WeibullParams::new(f64::NAN, 1.0).is_err());
    assert!(Sample::new(vec![1.0, 0.0]).is_err());
}
