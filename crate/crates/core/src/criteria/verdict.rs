use std::fmt;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::error::Result;
use crate::funcspace::{eval_sequence, FunctionSequence, Grid, NRange};
use crate::scalar::Scalar;

use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Criterion {
    #[serde(rename = "dini_monotone")]
    DiniMonotone,
    #[serde(rename = "thm1_equicontinuity")]
    Thm1Equicontinuity,
    #[serde(rename = "thm2_convexity")]
    Thm2Convexity,
    #[serde(rename = "thm3_distributed_variation")]
    Thm3DistributedVariation,
    #[serde(rename = "pointwise_convergence")]
    PointwiseConvergence,
}

impl Criterion {
    pub fn as_str(self) -> &'static str {
        match self {
            Criterion::DiniMonotone => "dini_monotone",
            Criterion::Thm1Equicontinuity => "thm1_equicontinuity",
            Criterion::Thm2Convexity => "thm2_convexity",
            Criterion::Thm3DistributedVariation => "thm3_distributed_variation",
            Criterion::PointwiseConvergence => "pointwise_convergence",
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Labeled numbers in insertion order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Evidence(Vec<(String, f64)>);

impl Evidence {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, label: impl Into<String>, value: impl Into<f64>) {
        self.0.push((label.into(), value.into()));
    }

    pub fn get(&self, label: &str) -> Option<f64> {
        self.0.iter().find(|(l, _)| l == label).map(|(_, v)| *v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, f64)> {
        self.0.iter().map(|(l, v)| (l.as_str(), *v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Serialize for Evidence {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HypothesisVerdict {
    pub criterion: Criterion,
    pub status: Status,
    pub evidence: Evidence,
}

impl HypothesisVerdict {
    pub fn new(criterion: Criterion, status: Status, evidence: Evidence) -> Self {
        Self {
            criterion,
            status,
            evidence,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// `f_n` on one grid for every `n` in a range, evaluated once and shared
/// between criteria.
#[derive(Debug, Clone)]
pub struct Samples<T> {
    pub range: NRange,
    pub grid: Grid<T>,
    pub values: Vec<Vec<T>>,
}

impl<T: Scalar> Samples<T> {
    pub fn evaluate(seq: &FunctionSequence<T>, range: NRange, grid: &Grid<T>) -> Result<Self> {
        let rows: Vec<Result<Vec<T>>> = range
            .to_vec()
            .into_par_iter()
            .map(|n| eval_sequence(seq, n, grid))
            .collect();
        let values = rows.into_iter().collect::<Result<Vec<_>>>()?;
        Ok(Self {
            range,
            grid: grid.clone(),
            values,
        })
    }

    pub fn row(&self, n: u32) -> &[T] {
        &self.values[(n - self.range.lo()) as usize]
    }

    /// Rows paired with their index, `n` ascending.
    pub fn rows(&self) -> impl Iterator<Item = (u32, &[T])> {
        self.range.iter().zip(self.values.iter().map(Vec::as_slice))
    }
}
