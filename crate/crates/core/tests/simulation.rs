use weibull_overlap::simulation::*;
use weibull_overlap::*;

const CONFIG: &str = r#"{
  "scenarios": [
    {"scale1": 1, "shape1": 3, "scale2": 1.5, "shape2": 3, "n1": 20, "n2": 30,
     "replications": 60, "seed": 5, "estimators": ["kernel", "parametric_x", "parametric_avg"]},
    {"id": "eq", "scale1": 1, "shape1": 2, "scale2": 1.2, "shape2": 2, "n1": 15, "n2": 15,
     "replications": 40, "seed": 6, "fit_mode": "equal_shape", "mse_convention": "about_mean"}
  ]
}"#;

#[test]
fn config_to_report_round_trip() {
    let scenarios = parse_config(CONFIG).unwrap();
    assert_eq!(scenarios.len(), 2);
    assert_eq!(scenarios[1].id, "eq");
    assert_eq!(scenarios[1].fit_mode, FitMode::EqualShape);
    let reports: Vec<_> = scenarios.iter().map(|s| run_scenario(s).unwrap()).collect();
    let rows = rows_from_reports(&reports);
    assert_eq!(rows.len(), 5);
    let text = csv_string(&rows).unwrap();
    assert!(text.starts_with(&CSV_HEADER.join(",")));
    let back = read_csv(text.as_bytes()).unwrap();
    assert_eq!(back.len(), rows.len());
    for (a, b) in rows.iter().zip(&back) {
        assert_eq!(a.estimator, b.estimator);
        assert!((a.rb - b.rb).abs() <= 5e-7);
        assert_eq!(a.eff.is_some(), b.eff.is_some());
    }
    let md = render_markdown(&back);
    assert!(md.contains("RRMSE"));
}

#[test]
fn worker_count_does_not_change_results() {
    let s = Scenario::new(DistributionPair::from_params(1.0, 3.0, 1.0, 4.0).unwrap(), 20, 30, 42);
    let base = run_scenario_with(&s, Execution::Serial).unwrap();
    for workers in [1, 2, 8] {
        assert_eq!(run_scenario_with(&s, Execution::Parallel(workers)).unwrap(), base);
    }
}

#[test]
fn efficiency_is_mse_ratio() {
    let mut s = Scenario::new(DistributionPair::from_params(1.0, 2.0, 1.2, 1.8).unwrap(), 20, 30, 3);
    s.replications = 200;
    s.estimators = EstimatorKind::ALL.to_vec();
    let r = run_scenario(&s).unwrap();
    let kernel = r.get(EstimatorKind::Kernel).unwrap();
    assert_eq!(kernel.eff_vs_kernel, Some(1.0));
    for kind in [
        EstimatorKind::ParametricX,
        EstimatorKind::ParametricY,
        EstimatorKind::ParametricAvg,
    ] {
        let m = r.get(kind).unwrap();
        assert!((m.eff_vs_kernel.unwrap() * m.mse - kernel.mse).abs() < 1e-12);
    }
}

#[test]
fn replication_matches_direct_estimate() {
    let s = Scenario::new(DistributionPair::from_params(1.0, 3.0, 1.8, 3.0).unwrap(), 10, 10, 8);
    let values = run_replication(&s, 3).unwrap();
    let mut stream = derive_substream(8, 3);
    let x = s.pair.f1.sample(10, &mut stream).unwrap();
    let y = s.pair.f2.sample(10, &mut stream).unwrap();
    assert_eq!(values[0], delta_kernel(&x, &y).unwrap().value);
    let fitted = fit_pair(&x, &y, FitMode::Unrestricted).unwrap();
    assert_eq!(values[1], delta_parametric(Variant::Avg, &fitted, &x, &y).value);
}

#[test]
fn bad_configs_name_the_field() {
    let missing_seed = r#"{"scenarios": [{"scale1": 1, "shape1": 3, "scale2": 1, "shape2": 4}]}"#;
    let err = parse_config(missing_seed).unwrap_err().to_string();
    assert!(err.contains("seed"), "{err}");
    let bad = r#"[{"scale1": -1, "shape1": 3, "scale2": 1, "shape2": 4, "seed": 1, "n1": 5, "n2": 5}]"#;
    assert!(parse_config(bad).is_err());
    let unknown = r#"[{"scale1": 1, "shape1": 3, "scale2": 1, "shape2": 4, "seed": 1, "bogus": 2}]"#;
    assert!(parse_config(unknown).unwrap_err().to_string().contains("bogus"));
}

#[test]
fn missing_sizes_expand_to_default_grid() {
    let text = r#"[{"scale1": 1, "shape1": 3, "scale2": 1, "shape2": 4, "seed": 1}]"#;
    let scenarios = parse_config(text).unwrap();
    let sizes: Vec<_> = scenarios.iter().map(|s| (s.n1, s.n2)).collect();
    assert_eq!(sizes, DEFAULT_SIZES.to_vec());
    assert!(scenarios.iter().all(|s| s.replications == DEFAULT_REPLICATIONS));
}
