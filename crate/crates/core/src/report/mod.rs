//! Classification of a sequence from its deviation trend and hypothesis
//! verdicts, plus JSON, text and CSV emission.

mod emit;

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::criteria::{
    convexity_on_samples, equicontinuity_on_samples, monotone_on_samples, window_table, Criterion,
    Evidence, HypothesisVerdict, Samples, Status, DECAY_PER_HALVING, DEFAULT_DELTA_LADDER,
    DEFAULT_ETA_LADDER, DEFAULT_WIDTH_LADDER, FAIL_SPAN,
};
use crate::error::{Error, Result, Stage};
use crate::funcspace::{FunctionSequence, Grid, Interval, LimitFunction, NRange};
use crate::metrics::{sup_deviation, DeviationProfile};
use crate::scalar::Scalar;

pub use emit::{emit_curves, emit_report, CurveFiles, Format};

/// Final deviation below `initial / UNIFORM_DROP` (with an eventually
/// non-increasing trend) counts as a uniform trend.
pub const UNIFORM_DROP: f64 = 10.0;
/// Final deviation at or above `initial * NON_UNIFORM_FLOOR` counts as a
/// non-uniform trend.
pub const NON_UNIFORM_FLOOR: f64 = 0.5;
/// Deviations at or below this are treated as zero.
pub const ZERO_DEVIATION: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Uniformity {
    UniformTrend,
    NonUniformTrend,
    Inconclusive,
}

impl Uniformity {
    pub fn as_str(self) -> &'static str {
        match self {
            Uniformity::UniformTrend => "uniform_trend",
            Uniformity::NonUniformTrend => "non_uniform_trend",
            Uniformity::Inconclusive => "inconclusive",
        }
    }
}

impl fmt::Display for Uniformity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    Dini,
    Thm1,
    Thm2,
    Thm3,
}

impl Theorem {
    pub fn as_str(self) -> &'static str {
        match self {
            Theorem::Dini => "dini",
            Theorem::Thm1 => "thm1",
            Theorem::Thm2 => "thm2",
            Theorem::Thm3 => "thm3",
        }
    }

    /// Criterion carrying this theorem's distinguishing hypothesis.
    pub fn criterion(self) -> Criterion {
        match self {
            Theorem::Dini => Criterion::DiniMonotone,
            Theorem::Thm1 => Criterion::Thm1Equicontinuity,
            Theorem::Thm2 => Criterion::Thm2Convexity,
            Theorem::Thm3 => Criterion::Thm3DistributedVariation,
        }
    }

    pub const ALL: [Theorem; 4] = [Theorem::Dini, Theorem::Thm1, Theorem::Thm2, Theorem::Thm3];
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Tolerances handed to the individual checks.
#[derive(Debug, Clone, PartialEq)]
pub struct Tolerances<T> {
    pub monotone: T,
    pub convexity: T,
    pub pointwise: T,
}

impl<T: Scalar> Default for Tolerances<T> {
    fn default() -> Self {
        Self {
            monotone: T::lit(1e-12),
            convexity: T::lit(1e-9),
            pointwise: T::lit(1e-2),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassifyConfig<T> {
    /// Points of the uniform sampling grid, also the base grid of the sup search.
    pub grid_size: usize,
    /// Bracket width at which the sup search stops refining.
    pub tol_x: T,
    pub delta_ladder: Vec<T>,
    pub width_ladder: Vec<T>,
    pub eta_ladder: Vec<T>,
    pub tolerances: Tolerances<T>,
    /// Number of equally spaced pointwise probes, endpoints included.
    pub probes: usize,
}

impl<T: Scalar> Default for ClassifyConfig<T> {
    fn default() -> Self {
        let lits = |v: &[f64]| v.iter().map(|&x| T::lit(x)).collect();
        Self {
            grid_size: 4097,
            tol_x: T::lit(1e-9),
            delta_ladder: lits(&DEFAULT_DELTA_LADDER),
            width_ladder: lits(&DEFAULT_WIDTH_LADDER),
            eta_ladder: lits(&DEFAULT_ETA_LADDER),
            tolerances: Tolerances::default(),
            probes: 9,
        }
    }
}

/// Outcome of [`classify`]. Numbers are stored as `f64` whatever scalar the
/// analysis ran in.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    pub sequence_id: String,
    pub interval: (f64, f64),
    pub ns: Vec<u32>,
    pub deviations: Vec<DeviationProfile<f64>>,
    pub verdicts: Vec<HypothesisVerdict>,
    pub uniformity: Uniformity,
    pub applicable_theorems: Vec<Theorem>,
    pub notes: Vec<String>,
}

impl ConvergenceReport {
    pub fn new(sequence_id: impl Into<String>, interval: (f64, f64), ns: Vec<u32>) -> Self {
        Self {
            sequence_id: sequence_id.into(),
            interval,
            ns,
            deviations: Vec::new(),
            verdicts: Vec::new(),
            uniformity: Uniformity::Inconclusive,
            applicable_theorems: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn verdict(&self, criterion: Criterion) -> Option<&HypothesisVerdict> {
        self.verdicts.iter().find(|v| v.criterion == criterion)
    }

    pub fn status(&self, criterion: Criterion) -> Option<Status> {
        self.verdict(criterion).map(|v| v.status)
    }
}

/// Trend rule on a deviation sequence ordered by increasing `n`.
///
/// * `uniform_trend`: the second half (from the middle entry on) is
///   non-increasing and the final value is below `initial / 10`;
/// * `non_uniform_trend`: the final value keeps at least half of the initial
///   value and is not zero;
/// * `inconclusive` otherwise, or with fewer than two entries.
pub fn uniformity_of(deviations: &[f64]) -> Uniformity {
    if deviations.len() < 2 || deviations.iter().any(|d| !d.is_finite()) {
        return Uniformity::Inconclusive;
    }
    let first = deviations[0];
    let last = deviations[deviations.len() - 1];
    let tail = &deviations[(deviations.len() - 1) / 2..];
    let settles = tail
        .windows(2)
        .all(|w| w[1] <= w[0] * (1.0 + 1e-12) + 1e-15);
    if settles && last < first / UNIFORM_DROP {
        Uniformity::UniformTrend
    } else if last >= first * NON_UNIFORM_FLOOR && last > ZERO_DEVIATION {
        Uniformity::NonUniformTrend
    } else {
        Uniformity::Inconclusive
    }
}

/// Runs the sup-norm trend and every hypothesis check on `interval`.
///
/// Deviations are computed for exactly the indices in `n_list`; the
/// hypothesis checks sample every index of the contiguous range
/// `min(n_list)..=max(n_list)`. Any failure is returned as
/// [`Error::Analysis`] carrying the report built so far.
pub fn classify<T: Scalar>(
    seq: &FunctionSequence<T>,
    lim: &LimitFunction<T>,
    interval: Interval<T>,
    n_list: &[u32],
    config: &ClassifyConfig<T>,
) -> Result<ConvergenceReport> {
    let mut report = ConvergenceReport::new(
        seq.id(),
        (interval.a().as_f64(), interval.b().as_f64()),
        n_list.to_vec(),
    );
    let abort = |report: ConvergenceReport, stage: Stage, e: Error| Error::Analysis {
        stage,
        source: Box::new(e),
        partial: Box::new(report),
    };

    let range = match validate(n_list, config) {
        Ok(r) => r,
        Err(e) => return Err(abort(report, Stage::Input, e)),
    };
    let prepared = seq
        .restricted(interval)
        .and_then(|s| Ok((s, lim.restricted(interval)?)));
    let (seq, lim) = match prepared {
        Ok(p) => p,
        Err(e) => return Err(abort(report, Stage::Input, e)),
    };

    match deviations(&seq, &lim, n_list, config) {
        Ok(d) => report.deviations = d,
        Err(e) => return Err(abort(report, Stage::Metric, e)),
    }
    let sup: Vec<f64> = report.deviations.iter().map(|d| d.sup_dev).collect();
    report.uniformity = uniformity_of(&sup);

    let grid = match Grid::uniform(interval, config.grid_size) {
        Ok(g) => g,
        Err(e) => return Err(abort(report, Stage::Input, e)),
    };
    if let Err(e) = run_criteria(&seq, &lim, range, &grid, config, &mut report) {
        return Err(abort(report, Stage::Criteria, e));
    }

    let pointwise = report.status(Criterion::PointwiseConvergence);
    report.applicable_theorems = Theorem::ALL
        .into_iter()
        .filter(|t| report.status(t.criterion()) == Some(Status::Pass))
        .filter(|_| pointwise == Some(Status::Pass))
        .collect();
    annotate(&mut report, pointwise);
    Ok(report)
}

fn validate<T: Scalar>(n_list: &[u32], config: &ClassifyConfig<T>) -> Result<NRange> {
    if n_list.len() < 4 {
        return Err(Error::Input(format!(
            "classification needs at least 4 indices, got {}",
            n_list.len()
        )));
    }
    if n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Input("indices must be strictly increasing".into()));
    }
    if config.probes < 1 {
        return Err(Error::Input(
            "at least one pointwise probe is required".into(),
        ));
    }
    if config.eta_ladder.is_empty() || config.eta_ladder.iter().any(|e| !(*e > T::zero())) {
        return Err(Error::Input(
            "eta ladder must be non-empty and positive".into(),
        ));
    }
    NRange::new(n_list[0], n_list[n_list.len() - 1])
}

fn deviations<T: Scalar>(
    seq: &FunctionSequence<T>,
    lim: &LimitFunction<T>,
    n_list: &[u32],
    config: &ClassifyConfig<T>,
) -> Result<Vec<DeviationProfile<f64>>> {
    let profiles: Vec<Result<DeviationProfile<T>>> = n_list
        .par_iter()
        .map(|&n| sup_deviation(seq, lim, n, config.grid_size, config.tol_x))
        .collect();
    profiles
        .into_iter()
        .map(|p| {
            p.map(|p| DeviationProfile {
                n: p.n,
                sup_dev: p.sup_dev.as_f64(),
                argmax_x: p.argmax_x.as_f64(),
                base_grid_size: p.base_grid_size,
                refinement_rounds: p.refinement_rounds,
            })
        })
        .collect()
}

fn run_criteria<T: Scalar>(
    seq: &FunctionSequence<T>,
    lim: &LimitFunction<T>,
    range: NRange,
    grid: &Grid<T>,
    config: &ClassifyConfig<T>,
    report: &mut ConvergenceReport,
) -> Result<()> {
    let (a, b) = (grid.interval().a(), grid.interval().b());
    let k = config.probes;
    let probes: Vec<T> = (0..k)
        .map(|i| match i {
            _ if k == 1 => a + (b - a) * T::lit(0.5),
            _ if i + 1 == k => b,
            _ => a + (b - a) * T::from_index(i as u32) / T::from_index((k - 1) as u32),
        })
        .collect();
    let tol = &config.tolerances;
    report.verdicts.push(crate::criteria::check_pointwise(
        seq,
        lim,
        &probes,
        range,
        tol.pointwise,
    )?);

    let samples = Samples::evaluate(seq, range, grid)?;
    if range.len() >= 2 {
        report
            .verdicts
            .push(monotone_on_samples(&samples, tol.monotone));
    } else {
        let mut ev = Evidence::new();
        ev.push("indices", range.len() as f64);
        report.verdicts.push(HypothesisVerdict::new(
            Criterion::DiniMonotone,
            Status::Inconclusive,
            ev,
        ));
    }
    report
        .verdicts
        .push(equicontinuity_on_samples(&samples, &config.delta_ladder)?);
    report
        .verdicts
        .push(convexity_on_samples(&samples, tol.convexity)?);
    report
        .verdicts
        .push(distributed_variation(&samples, config)?);
    Ok(())
}

/// Theorem 3 over the whole eta ladder. Every eta must pass for a pass; a
/// failure at the coarsest eta is a fail; anything else is inconclusive,
/// since finer etas can be limited by the narrowest ladder width.
fn distributed_variation<T: Scalar>(
    samples: &Samples<T>,
    config: &ClassifyConfig<T>,
) -> Result<HypothesisVerdict> {
    let widths = &config.width_ladder;
    let mut etas = config.eta_ladder.clone();
    etas.sort_by(|x, y| y.partial_cmp(x).unwrap_or(std::cmp::Ordering::Equal));
    let table = window_table(samples, widths)?;
    let mut per_eta = Vec::with_capacity(etas.len());
    for &eta in &etas {
        per_eta.push(crate::criteria::verdict_from_table(
            samples, widths, &table, eta,
        )?);
    }

    let first = &per_eta[0].evidence;
    let mut ev = Evidence::new();
    for (label, value) in first.iter() {
        if label.starts_with("width_")
            || label.starts_with("late_window_variation_")
            || label == "variation_bound"
        {
            ev.push(label, value);
        }
    }
    for (k, (eta, v)) in etas.iter().zip(&per_eta).enumerate() {
        ev.push(format!("eta_{}", k), eta.as_f64());
        let code = match v.status {
            Status::Pass => 1.0,
            Status::Inconclusive => 0.0,
            Status::Fail => -1.0,
        };
        ev.push(format!("status_{}", k), code);
        if let (Some(d), Some(n)) = (v.evidence.get("delta"), v.evidence.get("n_threshold")) {
            ev.push(format!("delta_{}", k), d);
            ev.push(format!("n_threshold_{}", k), n);
        }
    }
    let status = if per_eta.iter().all(HypothesisVerdict::passed) {
        Status::Pass
    } else if per_eta[0].status == Status::Fail {
        Status::Fail
    } else {
        Status::Inconclusive
    };
    Ok(HypothesisVerdict::new(
        Criterion::Thm3DistributedVariation,
        status,
        ev,
    ))
}

fn annotate(report: &mut ConvergenceReport, pointwise: Option<Status>) {
    report.notes.push(format!(
        "equicontinuity heuristic: pass needs the family modulus to shrink by {} per halving of delta; \
         fail needs it to stay above half its first value while delta shrinks {}x",
        DECAY_PER_HALVING, FAIL_SPAN
    ));
    report.notes.push(format!(
        "uniform trend: eventually non-increasing sup deviation ending below 1/{} of its first value",
        UNIFORM_DROP
    ));
    if pointwise != Some(Status::Pass) {
        report.notes.push(
            "pointwise convergence to the given limit was not witnessed at every probe; \
             no theorem is reported as applicable"
                .into(),
        );
    }
    for t in &report.applicable_theorems {
        if report.uniformity != Uniformity::UniformTrend {
            report.notes.push(format!(
                "consistency: {} applies but the deviation trend is {}; \
                 suspect a numerical artifact or a false positive hypothesis check",
                t, report.uniformity
            ));
        }
    }
}
