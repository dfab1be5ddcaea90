use uniconv::criteria::{Criterion, Status};
use uniconv::funcspace::{gallery, Gallery};
use uniconv::metrics::sup_deviation;
use uniconv::report::{
    classify, emit_curves, emit_report, ClassifyConfig, Format, Theorem, Uniformity,
};
use uniconv::{Error, Grid, Grid32, Interval, Stage};

fn geometric() -> Vec<u32> {
    (0..8).map(|k| 1 << k).collect()
}

fn report(id: &str) -> uniconv::report::ConvergenceReport {
    let (s, l) = gallery::<f64>(id).unwrap();
    classify(
        &s,
        &l,
        *s.domain(),
        &geometric(),
        &ClassifyConfig::default(),
    )
    .unwrap()
}

#[test]
fn gallery_classification_table() {
    use Theorem::*;
    let expected: [(&str, &[Theorem], Uniformity); 6] = [
        ("monotone_sqrt", &[Dini], Uniformity::UniformTrend),
        ("damped_sine", &[Thm1], Uniformity::UniformTrend),
        ("bump", &[Dini, Thm1], Uniformity::UniformTrend),
        ("convex_oscillating", &[Thm2], Uniformity::UniformTrend),
        ("tent_spike", &[], Uniformity::NonUniformTrend),
        ("fourier_sawtooth", &[], Uniformity::NonUniformTrend),
    ];
    for (id, must, uniformity) in expected {
        let r = report(id);
        for t in must {
            assert!(
                r.applicable_theorems.contains(t),
                "{}: {:?}",
                id,
                r.applicable_theorems
            );
        }
        if must.is_empty() {
            assert!(
                r.applicable_theorems.is_empty(),
                "{}: {:?}",
                id,
                r.applicable_theorems
            );
        }
        assert_eq!(r.uniformity, uniformity, "{}", id);
        assert!(
            !r.notes.iter().any(|n| n.starts_with("consistency")),
            "{}: {:?}",
            id,
            r.notes
        );
    }
}

#[test]
fn theorems_only_from_passing_verdicts() {
    for g in Gallery::ALL {
        let r = report(g.id());
        assert_eq!(r.verdicts.len(), 5);
        for t in &r.applicable_theorems {
            assert_eq!(r.status(t.criterion()), Some(Status::Pass));
            assert_eq!(
                r.status(Criterion::PointwiseConvergence),
                Some(Status::Pass)
            );
        }
    }
}

#[test]
fn convex_oscillating_deviations_are_one_over_n() {
    let r = report("convex_oscillating");
    assert_eq!(r.status(Criterion::DiniMonotone), Some(Status::Fail));
    for d in &r.deviations {
        assert!((d.sup_dev - 1.0 / d.n as f64).abs() < 1e-9);
        assert!((d.argmax_x - 1.0).abs() < 1e-12);
    }
}

#[test]
fn sqrt_json_has_half_at_four() {
    let json = emit_report(&report("monotone_sqrt"), Format::Json);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let d = v["deviations"]
        .as_array()
        .unwrap()
        .iter()
        .find(|d| d["n"] == 4)
        .unwrap();
    assert_eq!(d["sup_dev"].as_f64(), Some(0.5));
    assert_eq!(json, emit_report(&report("monotone_sqrt"), Format::Json));
}

#[test]
fn restricted_interval_is_reported() {
    let (s, l) = gallery::<f64>("damped_sine").unwrap();
    let iv = Interval::new(0.0, 1.0).unwrap();
    let r = classify(&s, &l, iv, &geometric(), &ClassifyConfig::default()).unwrap();
    assert_eq!(r.interval, (0.0, 1.0));
    // sin(x) peaks at the right end of [0, 1]
    assert!((r.deviations[0].argmax_x - 1.0).abs() < 1e-12);
    assert!((r.deviations[0].sup_dev - 1f64.sin() / 2.0).abs() < 1e-12);
}

#[test]
fn interval_outside_domain_is_an_input_error() {
    let (s, l) = gallery::<f64>("bump").unwrap();
    let iv = Interval::new(0.0, 2.0).unwrap();
    let e = classify(&s, &l, iv, &geometric(), &ClassifyConfig::default()).unwrap_err();
    assert_eq!(e.stage(), Stage::Input);
    assert!(matches!(e, Error::Analysis { .. }));
}

#[test]
fn single_precision_classification() {
    let (s, l) = gallery::<f32>("monotone_sqrt").unwrap();
    let config = ClassifyConfig::<f32> {
        tol_x: 1e-6,
        ..ClassifyConfig::default()
    };
    let r = classify(&s, &l, *s.domain(), &geometric(), &config).unwrap();
    assert!(r.applicable_theorems.contains(&Theorem::Dini));
    for d in &r.deviations {
        assert!((d.sup_dev - 1.0 / (d.n as f64).sqrt()).abs() < 1e-6);
    }
    let p = sup_deviation(&s, &l, 16, 1025, 1e-6f32).unwrap();
    assert_eq!(p.sup_dev, 0.25f32);
}

#[test]
fn curves_match_direct_evaluation() {
    let (s, l) = gallery::<f64>("monotone_sqrt").unwrap();
    let g = Grid::uniform(*s.domain(), 3).unwrap();
    let c = emit_curves(&s, &l, &[1], &g).unwrap();
    let expected = format!(
        "x,f,f_n1\n0,0,1\n0.5,{},{}\n1,1,{}\n",
        0.5f64.sqrt(),
        1.5f64.sqrt(),
        2f64.sqrt()
    );
    assert_eq!(c.curves, expected);

    let (s, l) = gallery::<f32>("monotone_sqrt").unwrap();
    let g = Grid32::uniform(*s.domain(), 2).unwrap();
    let c = emit_curves(&s, &l, &[1], &g).unwrap();
    assert_eq!(c.curves, format!("x,f,f_n1\n0,0,1\n1,1,{}\n", 2f32.sqrt()));
}

#[test]
fn tent_trend_csv_is_flat() {
    let (s, l) = gallery::<f64>("tent_spike").unwrap();
    let g = Grid::uniform(*s.domain(), 33).unwrap();
    let c = emit_curves(&s, &l, &[2, 4, 8], &g).unwrap();
    assert_eq!(c.trend, "n,sup_dev\n2,1\n4,1\n8,1\n");
}
