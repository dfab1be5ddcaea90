//! Intervals, sampling grids, function sequences and the built-in gallery.

mod gallery;
mod grid;
mod range;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exprlang::{EvalError, Expression};
use crate::scalar::Scalar;

pub use gallery::{Gallery, FOURIER_MAX_TERMS};
pub use grid::{Grid, Interval};
pub use range::NRange;

#[derive(Debug, Clone, PartialEq)]
pub enum SequenceBody {
    Expression(Expression),
    Builtin(Gallery),
}

/// A family `(n, x) -> f_n(x)` on a fixed domain.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionSequence<T> {
    id: String,
    body: SequenceBody,
    domain: Interval<T>,
}

impl<T: Scalar> FunctionSequence<T> {
    pub fn from_expression(id: impl Into<String>, expr: Expression, domain: Interval<T>) -> Self {
        Self {
            id: id.into(),
            body: SequenceBody::Expression(expr),
            domain,
        }
    }

    pub fn builtin(gallery: Gallery) -> Self {
        let (a, b) = gallery.domain();
        Self {
            id: gallery.id().to_string(),
            body: SequenceBody::Builtin(gallery),
            domain: Interval::new(a, b).expect("gallery domains are valid"),
        }
    }

    /// Same body on a sub-interval of the current domain.
    pub fn restricted(&self, domain: Interval<T>) -> Result<Self> {
        if !self.domain.contains_interval(&domain) {
            return Err(Error::Input(format!(
                "interval [{}, {}] is not inside the domain of '{}'",
                domain.a(),
                domain.b(),
                self.id
            )));
        }
        Ok(Self {
            domain,
            ..self.clone()
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn body(&self) -> &SequenceBody {
        &self.body
    }

    pub fn domain(&self) -> &Interval<T> {
        &self.domain
    }

    pub fn eval(&self, n: u32, x: T) -> Result<T, EvalError> {
        let r = match &self.body {
            SequenceBody::Expression(e) => e.evaluate(x, n),
            SequenceBody::Builtin(g) => g.eval_sequence(n, x),
        };
        r.map_err(|e| e.at_sample(x.as_f64(), n))
    }

    /// `f_n` at every grid point, in grid order.
    pub fn eval_on(&self, n: u32, grid: &Grid<T>) -> Result<Vec<T>> {
        eval_sequence(self, n, grid)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum LimitBody {
    Expression(Expression),
    Builtin(Gallery),
}

/// The pointwise limit `f`, independent of `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct LimitFunction<T> {
    id: String,
    body: LimitBody,
    domain: Interval<T>,
}

impl<T: Scalar> LimitFunction<T> {
    /// Fails when the expression mentions `n`.
    pub fn from_expression(
        id: impl Into<String>,
        expr: Expression,
        domain: Interval<T>,
    ) -> Result<Self> {
        if expr.depends_on_n() {
            return Err(Error::Input("limit expression must not depend on n".into()));
        }
        Ok(Self {
            id: id.into(),
            body: LimitBody::Expression(expr),
            domain,
        })
    }

    pub fn builtin(gallery: Gallery) -> Self {
        let (a, b) = gallery.domain();
        Self {
            id: format!("{}_limit", gallery.id()),
            body: LimitBody::Builtin(gallery),
            domain: Interval::new(a, b).expect("gallery domains are valid"),
        }
    }

    pub fn restricted(&self, domain: Interval<T>) -> Result<Self> {
        if !self.domain.contains_interval(&domain) {
            return Err(Error::Input(format!(
                "interval [{}, {}] is not inside the domain of '{}'",
                domain.a(),
                domain.b(),
                self.id
            )));
        }
        Ok(Self {
            domain,
            ..self.clone()
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn domain(&self) -> &Interval<T> {
        &self.domain
    }

    pub fn eval(&self, x: T) -> Result<T, EvalError> {
        let r = match &self.body {
            LimitBody::Expression(e) => e.evaluate(x, 1),
            LimitBody::Builtin(g) => g.eval_limit(x),
        };
        r.map_err(|e| {
            let mut e = e.at_sample(x.as_f64(), 0);
            e.n = None;
            e
        })
    }

    pub fn eval_on(&self, grid: &Grid<T>) -> Result<Vec<T>> {
        collect_in_order(grid.points().par_iter().map(|&x| self.eval(x)))
    }
}

/// Looks up a gallery entry by id.
pub fn gallery<T: Scalar>(id: &str) -> Result<(FunctionSequence<T>, LimitFunction<T>)> {
    let g: Gallery = id.parse()?;
    Ok((FunctionSequence::builtin(g), LimitFunction::builtin(g)))
}

/// Evaluates `f_n` on every grid point. The grid must lie inside the
/// sequence's domain.
pub fn eval_sequence<T: Scalar>(
    seq: &FunctionSequence<T>,
    n: u32,
    grid: &Grid<T>,
) -> Result<Vec<T>> {
    if !seq.domain.contains_interval(grid.interval()) {
        return Err(Error::Input(format!(
            "grid interval [{}, {}] lies outside the domain of '{}'",
            grid.interval().a(),
            grid.interval().b(),
            seq.id
        )));
    }
    collect_in_order(grid.points().par_iter().map(|&x| seq.eval(n, x)))
}

// The first error in grid order wins, so failures are reported deterministically.
fn collect_in_order<T: Send>(
    iter: impl IndexedParallelIterator<Item = Result<T, EvalError>>,
) -> Result<Vec<T>> {
    let results: Vec<Result<T, EvalError>> = iter.collect();
    results
        .into_iter()
        .map(|r| r.map_err(Error::from))
        .collect()
}
