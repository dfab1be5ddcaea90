use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::criteria::HypothesisVerdict;
use crate::error::{Error, Result};
use crate::funcspace::{eval_sequence, FunctionSequence, Grid, LimitFunction};
use crate::metrics::{sup_deviation, SupOptions};
use crate::scalar::Scalar;

use super::ConvergenceReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            other => Err(Error::Input(format!(
                "unknown format '{}', expected json or text",
                other
            ))),
        }
    }
}

#[derive(serde::Serialize)]
struct IntervalView {
    a: f64,
    b: f64,
}

#[derive(serde::Serialize)]
struct DeviationView {
    n: u32,
    sup_dev: f64,
    argmax_x: f64,
}

impl Serialize for ConvergenceReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let deviations: Vec<DeviationView> = self
            .deviations
            .iter()
            .map(|d| DeviationView {
                n: d.n,
                sup_dev: d.sup_dev,
                argmax_x: d.argmax_x,
            })
            .collect();
        let mut s = serializer.serialize_struct("ConvergenceReport", 8)?;
        s.serialize_field("sequence_id", &self.sequence_id)?;
        s.serialize_field(
            "interval",
            &IntervalView {
                a: self.interval.0,
                b: self.interval.1,
            },
        )?;
        s.serialize_field("ns", &self.ns)?;
        s.serialize_field("deviations", &deviations)?;
        s.serialize_field("verdicts", &self.verdicts)?;
        s.serialize_field("uniformity", &self.uniformity)?;
        s.serialize_field("applicable_theorems", &self.applicable_theorems)?;
        s.serialize_field("notes", &self.notes)?;
        s.end()
    }
}

/// Serializes a report. JSON numbers use the shortest representation that
/// round-trips exactly; both formats end with a newline.
pub fn emit_report(report: &ConvergenceReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut out = serde_json::to_string_pretty(report).expect("report serializes");
            out.push('\n');
            out
        }
        Format::Text => text(report),
    }
}

fn text(r: &ConvergenceReport) -> String {
    let mut out = String::new();
    let ns: Vec<String> = r.ns.iter().map(u32::to_string).collect();
    let _ = writeln!(out, "sequence: {}", r.sequence_id);
    let _ = writeln!(out, "interval: [{}, {}]", r.interval.0, r.interval.1);
    let _ = writeln!(out, "ns: {}", ns.join(", "));
    let _ = writeln!(out);
    let _ = writeln!(out, "{:>8}  {:>24}  {:>24}", "n", "sup_dev", "argmax_x");
    for d in &r.deviations {
        let _ = writeln!(out, "{:>8}  {:>24}  {:>24}", d.n, d.sup_dev, d.argmax_x);
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "verdicts:");
    for v in &r.verdicts {
        verdict_text(&mut out, v);
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "uniformity: {}", r.uniformity);
    let theorems: Vec<&str> = r.applicable_theorems.iter().map(|t| t.as_str()).collect();
    let shown = if theorems.is_empty() {
        "none".to_string()
    } else {
        theorems.join(", ")
    };
    let _ = writeln!(out, "applicable theorems: {}", shown);
    if !r.notes.is_empty() {
        let _ = writeln!(out, "notes:");
        for n in &r.notes {
            let _ = writeln!(out, "  - {}", n);
        }
    }
    out
}

fn verdict_text(out: &mut String, v: &HypothesisVerdict) {
    let _ = writeln!(out, "  {:<28} {}", v.criterion.as_str(), v.status);
    for (label, value) in v.evidence.iter() {
        let _ = writeln!(out, "      {:<26} {}", label, value);
    }
}

/// Curve samples and the deviation trend, both as CSV text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveFiles {
    /// `x,f,f_n1,f_n2,...`, one row per grid point.
    pub curves: String,
    /// `n,sup_dev`, one row per index.
    pub trend: String,
}

/// Samples the limit and each requested `f_n` on `grid` and computes the
/// sup deviation of each `f_n` over the grid's interval. Indices are sorted
/// and deduplicated; numbers use the shortest round-trip decimal form.
pub fn emit_curves<T: Scalar>(
    seq: &FunctionSequence<T>,
    lim: &LimitFunction<T>,
    n_list: &[u32],
    grid: &Grid<T>,
) -> Result<CurveFiles> {
    let mut ns = n_list.to_vec();
    ns.sort_unstable();
    ns.dedup();
    let seq = seq.restricted(*grid.interval())?;
    let lim = lim.restricted(*grid.interval())?;

    let f = lim.eval_on(grid)?;
    let columns: Vec<Result<Vec<T>>> = ns
        .par_iter()
        .map(|&n| eval_sequence(&seq, n, grid))
        .collect();
    let columns = columns.into_iter().collect::<Result<Vec<_>>>()?;

    let mut curves = String::from("x,f");
    for n in &ns {
        let _ = write!(curves, ",f_n{}", n);
    }
    curves.push('\n');
    for (i, x) in grid.points().iter().enumerate() {
        let _ = write!(curves, "{},{}", x, f[i]);
        for col in &columns {
            let _ = write!(curves, ",{}", col[i]);
        }
        curves.push('\n');
    }

    let opts = SupOptions::<T>::default();
    let profiles: Vec<Result<_>> = ns
        .par_iter()
        .map(|&n| sup_deviation(&seq, &lim, n, opts.base_m, opts.tol_x))
        .collect();
    let mut trend = String::from("n,sup_dev\n");
    for p in profiles {
        let p = p?;
        let _ = writeln!(trend, "{},{}", p.n, p.sup_dev);
    }
    Ok(CurveFiles { curves, trend })
}
