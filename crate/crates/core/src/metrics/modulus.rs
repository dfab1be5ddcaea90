use std::collections::VecDeque;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::funcspace::{eval_sequence, FunctionSequence, Grid, NRange};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModulusScope {
    Single(u32),
    Family(NRange),
}

/// `omega(delta)` for one function or for a whole index range.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModulusEstimate<T> {
    pub delta: T,
    pub omega: T,
    pub scope: ModulusScope,
    /// Index attaining `omega`; smallest on ties.
    pub witness_n: u32,
}

/// Number of whole cells a `delta` window spans on a uniform grid.
pub fn window_cells<T: Scalar>(grid: &Grid<T>, delta: T) -> Result<usize> {
    let spacing = grid
        .spacing()
        .ok_or_else(|| Error::Metric("modulus of continuity needs a uniform grid".into()))?;
    // Slack absorbs rounding in delta/spacing for deltas that are exact multiples.
    let cells = (delta / spacing * T::lit(1.0 + 1e-9)).floor();
    if !(cells >= T::one()) {
        return Err(Error::Metric(format!(
            "delta {} is smaller than the grid spacing {}",
            delta, spacing
        )));
    }
    Ok(cells.to_usize().unwrap_or(usize::MAX).min(grid.len() - 1))
}

/// Exact grid modulus of continuity: the largest `|v_i - v_j|` over pairs of
/// grid points at most `delta` apart.
pub fn modulus_of_continuity<T: Scalar>(grid: &Grid<T>, values: &[T], delta: T) -> Result<T> {
    if values.len() != grid.len() {
        return Err(Error::Metric(format!(
            "{} values for a grid of {} points",
            values.len(),
            grid.len()
        )));
    }
    let cells = window_cells(grid, delta)?;
    Ok(window_oscillation(values, cells))
}

/// Largest `max - min` over all windows of `cells + 1` consecutive values,
/// using monotone deques for the running max and min.
pub fn window_oscillation<T: Scalar>(values: &[T], cells: usize) -> T {
    let span = cells + 1;
    let mut maxq: VecDeque<usize> = VecDeque::new();
    let mut minq: VecDeque<usize> = VecDeque::new();
    let mut best = T::zero();
    for (i, &v) in values.iter().enumerate() {
        while maxq.back().is_some_and(|&j| values[j] <= v) {
            maxq.pop_back();
        }
        maxq.push_back(i);
        while minq.back().is_some_and(|&j| values[j] >= v) {
            minq.pop_back();
        }
        minq.push_back(i);
        if maxq[0] + span <= i {
            maxq.pop_front();
        }
        if minq[0] + span <= i {
            minq.pop_front();
        }
        let osc = values[maxq[0]] - values[minq[0]];
        if osc > best {
            best = osc;
        }
    }
    best
}

/// `sup_n omega_n(delta)` over an index range.
pub fn family_modulus<T: Scalar>(
    seq: &FunctionSequence<T>,
    n_range: NRange,
    grid: &Grid<T>,
    delta: T,
) -> Result<ModulusEstimate<T>> {
    let cells = window_cells(grid, delta)?;
    let per_n: Vec<Result<T>> = n_range
        .to_vec()
        .into_par_iter()
        .map(|n| Ok(window_oscillation(&eval_sequence(seq, n, grid)?, cells)))
        .collect();
    let mut omega = T::zero();
    let mut witness_n = n_range.lo();
    for (n, r) in n_range.iter().zip(per_n) {
        let w = r?;
        if w > omega {
            omega = w;
            witness_n = n;
        }
    }
    Ok(ModulusEstimate {
        delta,
        omega,
        scope: ModulusScope::Family(n_range),
        witness_n,
    })
}
