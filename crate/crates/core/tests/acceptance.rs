//! Acceptance gate. Prints one `[criterion N] PASS|FAIL` line per criterion
//! and exits non-zero if any criterion fails.

use std::f64::consts::{PI, TAU};
use std::panic;
use std::path::Path;
use std::process::Command;
use std::time::Instant;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use uniconv::criteria::{
    check_convexity, check_distributed_variation, check_equicontinuity, check_monotone_in_n,
    HypothesisVerdict, Status, DEFAULT_DELTA_LADDER, DEFAULT_WIDTH_LADDER,
};
use uniconv::exprlang::{parse, BinaryOp, Expression, UnaryOp};
use uniconv::funcspace::{gallery, Gallery, NRange};
use uniconv::metrics::{
    family_modulus, grid_deviation, modulus_of_continuity, refined_total_variation, sup_deviation,
    total_variation, windowed_variation,
};
use uniconv::report::{classify, ClassifyConfig, Uniformity};
use uniconv::{FunctionSequence, Grid, Interval};

type Outcome = Result<String, String>;

const BASE_M: usize = 4097;
const TOL_X: f64 = 1e-9;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pow2(lo: u32, hi: u32) -> Vec<u32> {
    (0..32)
        .map(|k| 1u32 << k)
        .filter(|&n| n >= lo && n <= hi)
        .collect()
}

fn sup(id: &str, n: u32) -> Result<(f64, f64), String> {
    let (s, l) = gallery::<f64>(id).map_err(|e| e.to_string())?;
    let p = sup_deviation(&s, &l, n, BASE_M, TOL_X).map_err(|e| e.to_string())?;
    Ok((p.sup_dev, p.argmax_x))
}

fn uniform(id: &str, m: usize) -> (FunctionSequence, Grid) {
    let (s, _) = gallery::<f64>(id).unwrap();
    let g = Grid::uniform(*s.domain(), m).unwrap();
    (s, g)
}

fn range(lo: u32, hi: u32) -> NRange {
    NRange::new(lo, hi).unwrap()
}

fn status(v: &HypothesisVerdict) -> Status {
    v.status
}

// 1. sqrt(x + 1/n) against sqrt(x): gap 1/sqrt(n) at x = 0.
fn criterion_1() -> Outcome {
    let mut worst = 0.0f64;
    for n in [1, 4, 25, 100] {
        let (d, x) = sup("monotone_sqrt", n)?;
        let expect = 1.0 / (n as f64).sqrt();
        ensure((d - expect).abs() <= 1e-6, || {
            format!("n={} sup {} vs {}", n, d, expect)
        })?;
        ensure(x.abs() <= 1e-6, || format!("n={} argmax {}", n, x))?;
        worst = worst.max((d - expect).abs());
    }
    Ok(format!("max |sup - 1/sqrt(n)| = {:.3e}", worst))
}

// 2. sin(x)/(1 + 1/n) against sin(x): sup 1/(n+1).
fn criterion_2() -> Outcome {
    let mut worst = 0.0f64;
    for n in [1, 9, 99] {
        let (d, _) = sup("damped_sine", n)?;
        let expect = 1.0 / (n as f64 + 1.0);
        ensure((d - expect).abs() <= 1e-9, || {
            format!("n={} sup {} vs {}", n, d, expect)
        })?;
        worst = worst.max((d - expect).abs());
    }
    Ok(format!("max |sup - 1/(n+1)| = {:.3e}", worst))
}

/// Maximizer of x/(1 + n x^2) on [0, 1] by golden-section search on the
/// closed form, independent of the artifact.
fn bump_oracle(n: u32) -> (f64, f64) {
    let f = |x: f64| x / (1.0 + n as f64 * x * x);
    let r = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (0.0f64, 1.0f64);
    while b - a > 1e-13 {
        let c = b - r * (b - a);
        let d = a + r * (b - a);
        if f(c) < f(d) {
            a = c;
        } else {
            b = d;
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

// 3. x/(1 + n x^2): stationary point 1/sqrt(n), value 1/(2 sqrt(n)).
fn criterion_3() -> Outcome {
    let mut worst_x = 0.0f64;
    for n in [16, 100, 400] {
        let (ox, od) = bump_oracle(n);
        let closed = (1.0 / (n as f64).sqrt(), 0.5 / (n as f64).sqrt());
        ensure(
            (ox - closed.0).abs() < 1e-6 && (od - closed.1).abs() < 1e-12,
            || format!("oracle disagrees with calculus at n={}", n),
        )?;
        let (d, x) = sup("bump", n)?;
        ensure((x - ox).abs() <= 1e-4, || {
            format!("n={} argmax {} vs {}", n, x, ox)
        })?;
        ensure((d - od).abs() <= 1e-6, || {
            format!("n={} sup {} vs {}", n, d, od)
        })?;
        worst_x = worst_x.max((x - ox).abs());
    }
    Ok(format!("max |argmax - oracle| = {:.3e}", worst_x))
}

// 4. Convex zig-zag: sup 1/n, convex, not monotone in n.
fn criterion_4() -> Outcome {
    for n in pow2(2, 64) {
        let (d, _) = sup("convex_oscillating", n)?;
        let expect = 1.0 / n as f64;
        ensure((d - expect).abs() <= 1e-9, || {
            format!("n={} sup {} vs {}", n, d, expect)
        })?;
    }
    let (s, g) = uniform("convex_oscillating", BASE_M);
    let conv = check_convexity(&s, range(2, 64), &g, 0.0).map_err(|e| e.to_string())?;
    ensure(conv.status == Status::Pass, || {
        format!("convexity {:?}", conv)
    })?;
    let mono = check_monotone_in_n(&s, range(2, 64), &g, 0.0).map_err(|e| e.to_string())?;
    ensure(mono.status == Status::Fail, || {
        format!("monotone {:?}", mono)
    })?;
    let inc = mono.evidence.get("increase_violation").unwrap_or(0.0);
    let dec = mono.evidence.get("decrease_violation").unwrap_or(0.0);
    ensure(inc > 0.0 && dec > 0.0, || {
        format!("witnesses inc {} dec {}", inc, dec)
    })?;
    Ok(format!(
        "sup = 1/n; convexity pass; monotone fail (up {:.3e} at n={}, down {:.3e} at n={})",
        inc,
        mono.evidence.get("increase_n").unwrap(),
        dec,
        mono.evidence.get("decrease_n").unwrap()
    ))
}

// 5. Tent spike: sup 1, variation 2 concentrated in width 2/n.
fn criterion_5() -> Outcome {
    let (s, g) = uniform("tent_spike", BASE_M);
    for n in pow2(2, 128) {
        let (d, _) = sup("tent_spike", n)?;
        ensure((d - 1.0).abs() <= 1e-6, || format!("n={} sup {}", n, d))?;
        let tv = refined_total_variation(&s, n, BASE_M).map_err(|e| e.to_string())?;
        ensure((tv.total_variation - 2.0).abs() <= 1e-3, || {
            format!("n={} total variation {}", n, tv.total_variation)
        })?;
        let w = windowed_variation(&s, n, &g, 2.0 / n as f64).map_err(|e| e.to_string())?;
        ensure(w.max_window_variation >= 2.0 - 1e-3, || {
            format!("n={} window variation {}", n, w.max_window_variation)
        })?;
    }
    let v = check_distributed_variation(&s, range(1, 128), &g, &DEFAULT_WIDTH_LADDER, 1.0 / 3.0)
        .map_err(|e| e.to_string())?;
    ensure(v.status == Status::Fail, || {
        format!("distributed variation {:?}", v.status)
    })?;
    let (s, l) = gallery::<f64>("tent_spike").unwrap();
    let r = classify(
        &s,
        &l,
        *s.domain(),
        &pow2(1, 128),
        &ClassifyConfig::default(),
    )
    .map_err(|e| e.to_string())?;
    ensure(r.applicable_theorems.is_empty(), || {
        format!("theorems {:?}", r.applicable_theorems)
    })?;
    ensure(r.uniformity == Uniformity::NonUniformTrend, || {
        format!("{:?}", r.uniformity)
    })?;
    Ok("sup 1, TV 2, window TV 2, thm3 fail, no theorem, non_uniform_trend".into())
}

/// Values of the dense-grid oracle computed with numpy (float64,
/// `linspace(0, 2pi, 2**17 + 1)`, running sum of `sin(kx)/k`).
const FROZEN_GIBBS: [(u32, f64); 6] = [
    (8, 0.9997406005883218),
    (16, 0.9994964599784227),
    (32, 0.9990081788446478),
    (64, 0.9980316172563083),
    (128, 0.9960784994774011),
    (256, 0.9921723069579362),
];

/// Brute-force `max |g_n - g|` on 2^17 + 1 points for the indices above.
fn gibbs_oracle() -> Vec<(u32, f64)> {
    let m = (1usize << 17) + 1;
    let xs: Vec<f64> = (0..m).map(|i| TAU * i as f64 / (m - 1) as f64).collect();
    let limit: Vec<f64> = xs
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            if i == 0 || i == m - 1 {
                0.0
            } else {
                (PI - x) / PI
            }
        })
        .collect();
    let mut partial = vec![0.0f64; m];
    let mut out = Vec::new();
    for k in 1..=256u32 {
        for (p, &x) in partial.iter_mut().zip(&xs) {
            *p += (k as f64 * x).sin() / k as f64;
        }
        if k >= 8 && k.is_power_of_two() {
            let dev = partial
                .iter()
                .zip(&limit)
                .map(|(p, g)| (2.0 / PI * p - g).abs())
                .fold(0.0, f64::max);
            out.push((k, dev));
        }
    }
    out
}

// 6. Fourier partial sums: deviation floor from a dense-grid oracle.
fn criterion_6() -> Outcome {
    let oracle = gibbs_oracle();
    for ((n, v), (fn_, fv)) in oracle.iter().zip(FROZEN_GIBBS) {
        ensure(*n == fn_ && (v - fv).abs() < 1e-9, || {
            format!("oracle n={} {} disagrees with frozen {}", n, v, fv)
        })?;
    }
    let floor = oracle.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
    ensure(floor > 0.0, || "oracle floor is not positive".into())?;
    let mut misses = Vec::new();
    let mut rows = Vec::new();
    for &(n, o) in &oracle {
        let (d, x) = sup("fourier_sawtooth", n)?;
        rows.push(format!("n={} artifact {:.10} oracle {:.10}", n, d, o));
        ensure(d >= floor, || {
            format!("n={} sup {} below floor {}", n, d, floor)
        })?;
        if (d - o).abs() > 1e-3 {
            misses.push(format!(
                "n={}: |{:.10} - {:.10}| = {:.3e} (argmax {:.3e})",
                n,
                d,
                o,
                (d - o).abs(),
                x
            ));
        }
    }
    if misses.is_empty() {
        Ok(format!("F = {:.10}; {}", floor, rows.join("; ")))
    } else {
        Err(format!(
            "F = {:.10}; off by more than 1e-3: {}",
            floor,
            misses.join("; ")
        ))
    }
}

// 7. Verdict table.
fn criterion_7() -> Outcome {
    let ladder = DEFAULT_DELTA_LADDER;
    let table: Vec<(&str, &str, Status, Status)> = {
        let (s, g) = uniform("monotone_sqrt", BASE_M);
        let dini = status(&check_monotone_in_n(&s, range(1, 64), &g, 0.0).unwrap());
        let (s, g) = uniform("damped_sine", BASE_M);
        let sine_thm1 = status(&check_equicontinuity(&s, range(1, 64), &g, &ladder).unwrap());
        let sine_thm2 = status(&check_convexity(&s, range(1, 8), &g, 1e-9).unwrap());
        let (s, g) = uniform("bump", BASE_M);
        let bump_thm1 = status(&check_equicontinuity(&s, range(1, 64), &g, &ladder).unwrap());
        let (s, g) = uniform("convex_oscillating", BASE_M);
        let conv = status(&check_convexity(&s, range(1, 32), &g, 1e-9).unwrap());
        let (s, g) = uniform("tent_spike", BASE_M);
        let tent_thm1 = status(&check_equicontinuity(&s, range(1, 64), &g, &ladder).unwrap());
        let tent_thm3 = status(
            &check_distributed_variation(&s, range(1, 128), &g, &DEFAULT_WIDTH_LADDER, 1.0 / 3.0)
                .unwrap(),
        );
        vec![
            ("monotone_sqrt", "dini", dini, Status::Pass),
            ("damped_sine", "thm1", sine_thm1, Status::Pass),
            ("bump", "thm1", bump_thm1, Status::Pass),
            ("convex_oscillating", "thm2", conv, Status::Pass),
            ("tent_spike", "thm1", tent_thm1, Status::Fail),
            ("tent_spike", "thm3", tent_thm3, Status::Fail),
            ("damped_sine", "thm2", sine_thm2, Status::Fail),
        ]
    };
    let wrong: Vec<String> = table
        .iter()
        .filter(|(.., got, want)| got != want)
        .map(|(id, t, got, want)| format!("{} {}: {} (want {})", id, t, got, want))
        .collect();
    ensure(wrong.is_empty(), || wrong.join("; "))?;
    Ok(format!("{} verdicts match", table.len()))
}

fn runner() -> TestRunner {
    let config = Config {
        cases: 1000,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn prop<S: Strategy>(
    name: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    runner()
        .run(&strategy, test)
        .map_err(|e| format!("{}: {}", name, e))
}

fn gallery_id() -> impl Strategy<Value = Gallery> {
    prop::sample::select(Gallery::ALL.to_vec())
}

fn expression() -> impl Strategy<Value = Expression> {
    let leaf = prop_oneof![
        (-8.0f64..8.0).prop_map(Expression::number),
        (0u32..20).prop_map(|k| Expression::number(k as f64 * 0.25)),
        Just(Expression::var_x()),
        Just(Expression::var_n()),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        let unary = prop::sample::select(vec![
            UnaryOp::Neg,
            UnaryOp::Sin,
            UnaryOp::Cos,
            UnaryOp::Sqrt,
            UnaryOp::Abs,
            UnaryOp::Exp,
            UnaryOp::Log,
        ]);
        let binary = prop::sample::select(vec![
            BinaryOp::Add,
            BinaryOp::Sub,
            BinaryOp::Mul,
            BinaryOp::Div,
            BinaryOp::Pow,
            BinaryOp::Min,
            BinaryOp::Max,
        ]);
        prop_oneof![
            (unary, inner.clone()).prop_map(|(op, e)| Expression::unary(op, e)),
            (binary, inner.clone(), inner).prop_map(|(op, l, r)| Expression::binary(op, l, r)),
        ]
    })
}

fn dyadic_values(max_len: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec((-4096i32..4096).prop_map(|k| k as f64 / 64.0), 2..max_len)
}

fn unit_grid(m: usize) -> Grid {
    Grid::uniform(Interval::new(0.0, 1.0).unwrap(), m).unwrap()
}

// 8. Property suites, 1000 cases each.
fn criterion_8() -> Outcome {
    prop(
        "variation additivity",
        dyadic_values(300)
            .prop_filter("needs an interior point", |v| v.len() >= 3)
            .prop_flat_map(|v| {
                let len = v.len();
                (Just(v), 1..len - 1)
            }),
        |(v, split)| {
            let whole = total_variation(&v).unwrap();
            let parts =
                total_variation(&v[..=split]).unwrap() + total_variation(&v[split..]).unwrap();
            prop_assert_eq!(whole, parts);
            Ok(())
        },
    )?;

    prop(
        "modulus monotone in delta",
        (dyadic_values(300), 0.0f64..1.0, 0.0f64..1.0),
        |(v, u1, u2)| {
            let g = unit_grid(v.len());
            let h = g.spacing().unwrap();
            let (lo, hi) = (u1.min(u2), u1.max(u2));
            let d1 = h + lo * (1.0 - h);
            let d2 = h + hi * (1.0 - h);
            let w1 = modulus_of_continuity(&g, &v, d1).unwrap();
            let w2 = modulus_of_continuity(&g, &v, d2).unwrap();
            prop_assert!(w1 <= w2, "omega({}) = {} > omega({}) = {}", d1, w1, d2, w2);
            Ok(())
        },
    )?;

    prop(
        "family dominance",
        (gallery_id(), 1u32..24, 0u32..8, 9usize..400, 0.0f64..1.0),
        |(id, lo, extra, m, u)| {
            let (s, _) = gallery::<f64>(id.id()).unwrap();
            let g = Grid::uniform(*s.domain(), m).unwrap();
            let h = g.spacing().unwrap();
            let delta = h + u * (s.domain().length() - h);
            let r = NRange::new(lo, lo + extra).unwrap();
            let fam = family_modulus(&s, r, &g, delta).unwrap();
            for n in r.iter() {
                let single = modulus_of_continuity(&g, &s.eval_on(n, &g).unwrap(), delta).unwrap();
                prop_assert!(
                    fam.omega >= single,
                    "n={} single {} > family {}",
                    n,
                    single,
                    fam.omega
                );
            }
            Ok(())
        },
    )?;

    let term = (-2.0f64..2.0, -20.0f64..20.0, -3.0f64..3.0);
    prop(
        "refinement monotone total variation",
        (prop::collection::vec(term, 1..4), 2usize..300),
        |(terms, m)| {
            let f = |x: f64| {
                terms
                    .iter()
                    .map(|(a, b, c)| a * (b * x + c).sin())
                    .sum::<f64>()
            };
            let g = unit_grid(m);
            let fine = g.refine();
            let coarse: Vec<f64> = g.points().iter().map(|&x| f(x)).collect();
            let refined: Vec<f64> = fine.points().iter().map(|&x| f(x)).collect();
            let (tc, tf) = (
                total_variation(&coarse).unwrap(),
                total_variation(&refined).unwrap(),
            );
            prop_assert!(
                tc <= tf + 1e-12 * (1.0 + tf),
                "coarse {} > refined {}",
                tc,
                tf
            );
            Ok(())
        },
    )?;

    prop(
        "sup bounds every grid deviation",
        (
            gallery_id(),
            1u32..48,
            prop::collection::vec(0.0f64..1.0, 0..60),
        ),
        |(id, n, inner)| {
            let (s, l) = gallery::<f64>(id.id()).unwrap();
            let iv = *s.domain();
            let mut pts: Vec<f64> = inner.iter().map(|u| iv.a() + u * iv.length()).collect();
            pts.push(iv.a());
            pts.push(iv.b());
            pts.sort_by(f64::total_cmp);
            pts.dedup();
            let g = Grid::from_points(iv, pts).unwrap();
            let on_grid = grid_deviation(&s, &l, n, &g)
                .unwrap()
                .into_iter()
                .fold(0.0, f64::max);
            let p = sup_deviation(&s, &l, n, 1025, TOL_X).unwrap();
            prop_assert!(
                p.sup_dev >= on_grid - 1e-12,
                "sup {} < grid max {}",
                p.sup_dev,
                on_grid
            );
            Ok(())
        },
    )?;

    let bases = vec![
        "sqrt(x + 1/n)",
        "(1 - 1/n) * x^2",
        "sin(n*x)/n",
        "x/(1 + n*x^2)",
        "abs(x - 1/n)",
        "exp(-n*x)",
        "max(0, 1 - n*abs(x - 0.5))",
    ];
    prop(
        "verdict scaling invariance",
        (
            prop::sample::select(bases),
            -6i32..7,
            3usize..200,
            1u32..10,
            1u32..6,
        ),
        |(base, k, m, lo, extra)| {
            let c = 2f64.powi(k);
            let iv = Interval::new(0.0, 1.0).unwrap();
            let plain = FunctionSequence::from_expression(base, parse(base).unwrap(), iv);
            let text = format!("{:?} * ({})", c, base);
            let scaled = FunctionSequence::from_expression(text.clone(), parse(&text).unwrap(), iv);
            let g = Grid::uniform(iv, m).unwrap();
            let r = NRange::new(lo, lo + extra).unwrap();
            let (m1, m2) = (
                check_monotone_in_n(&plain, r, &g, 0.0).unwrap(),
                check_monotone_in_n(&scaled, r, &g, 0.0).unwrap(),
            );
            prop_assert_eq!(m1.status, m2.status);
            let (w1, w2) = (
                m1.evidence.get("worst_violation").unwrap(),
                m2.evidence.get("worst_violation").unwrap(),
            );
            prop_assert_eq!(w1 * c, w2);
            let (c1, c2) = (
                check_convexity(&plain, r, &g, 0.0).unwrap(),
                check_convexity(&scaled, r, &g, 0.0).unwrap(),
            );
            prop_assert_eq!(c1.status, c2.status);
            Ok(())
        },
    )?;

    prop(
        "expression round trip",
        (expression(), -3.0f64..3.0, 1u32..50),
        |(e, x, n)| {
            let text = e.to_string();
            let back = parse(&text).map_err(|err| {
                TestCaseError::fail(format!("'{}' does not reparse: {}", text, err))
            })?;
            match (e.evaluate(x, n), back.evaluate(x, n)) {
                (Ok(a), Ok(b)) => {
                    prop_assert!(
                        (a - b).abs() <= 1e-12 * a.abs().max(1.0),
                        "{}: {} vs {}",
                        text,
                        a,
                        b
                    )
                }
                (Err(_), Err(_)) => {}
                (a, b) => prop_assert!(false, "{}: {:?} vs {:?}", text, a, b),
            }
            Ok(())
        },
    )?;
    Ok("7 suites x 1000 cases".into())
}

fn run_cli(args: &[&str]) -> Result<(), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_uniconv"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || {
        format!(
            "{:?} failed: {}",
            args,
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {}", path.display(), e))
}

fn close_12(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-12 * b.abs().max(1e-300) || a == b
}

// 9. Interface goldens.
fn criterion_9() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let p1 = dir.path().join("a.json");
    let p2 = dir.path().join("b.json");
    for p in [&p1, &p2] {
        run_cli(&[
            "analyze",
            "--seq",
            "monotone_sqrt",
            "--ns",
            "1..128:geometric",
            "--grid",
            "4097",
            "--format",
            "json",
            "--out",
            p.to_str().unwrap(),
        ])?;
    }
    let (a, b) = (read(&p1)?, read(&p2)?);
    ensure(!a.is_empty() && a.as_bytes() == b.as_bytes(), || {
        "JSON differs between runs".into()
    })?;

    let csv = dir.path().join("curves.csv");
    run_cli(&[
        "curves",
        "--seq",
        "monotone_sqrt",
        "--ns",
        "1",
        "--grid",
        "3",
        "--out",
        csv.to_str().unwrap(),
    ])?;
    let text = read(&csv)?;
    let mut lines = text.lines();
    ensure(lines.next() == Some("x,f,f_n1"), || {
        format!("header in {:?}", text)
    })?;
    let expected = [
        [0.0, 0.0, 1.0],
        [0.5, 0.5f64.sqrt(), 1.5f64.sqrt()],
        [1.0, 1.0, 2f64.sqrt()],
    ];
    for want in expected {
        let line = lines.next().ok_or("missing row")?;
        let got: Vec<f64> = line
            .split(',')
            .map(|c| c.parse().unwrap_or(f64::NAN))
            .collect();
        ensure(
            got.len() == 3 && got.iter().zip(want).all(|(g, w)| close_12(*g, w)),
            || format!("row {:?} vs {:?}", line, want),
        )?;
    }
    ensure(lines.next().is_none(), || "extra rows".into())?;
    let trend = read(&dir.path().join("curves_trend.csv"))?;
    ensure(trend == "n,sup_dev\n1,1\n", || format!("trend {:?}", trend))?;
    Ok("byte-identical JSON; curves rows match".into())
}

type Check = (u32, &'static str, fn() -> Outcome);

fn main() {
    let criteria: [Check; 9] = [
        (1, "sqrt gap 1/sqrt(n) at x = 0", criterion_1),
        (2, "damped sine sup 1/(n+1)", criterion_2),
        (3, "bump stationary point", criterion_3),
        (4, "convex zig-zag", criterion_4),
        (5, "tent spike counterexample", criterion_5),
        (6, "Fourier deviation floor", criterion_6),
        (7, "verdict table", criterion_7),
        (8, "property suites", criterion_8),
        (9, "interface goldens", criterion_9),
    ];
    let mut failed = 0;
    for (k, name, check) in criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(check).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {}", msg))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[criterion {}] PASS {} ({:.2}s): {}", k, name, secs, detail),
            Err(detail) => {
                failed += 1;
                println!("[criterion {}] FAIL {} ({:.2}s): {}", k, name, secs, detail);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
