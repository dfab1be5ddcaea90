use crate::error::{Error, Result};
use crate::funcspace::{FunctionSequence, Grid, NRange};
use crate::metrics::{total_variation, windowed_variation_of};
use crate::scalar::Scalar;

use super::verdict::{Criterion, Evidence, HypothesisVerdict, Samples, Status};

pub const DEFAULT_WIDTH_LADDER: [f64; 5] = [0.25, 0.125, 0.0625, 0.03125, 0.015625];
pub const DEFAULT_ETA_LADDER: [f64; 3] = [1.0 / 3.0, 0.1, 1.0 / 30.0];

/// Windowed variation must eventually stay below `eta` on narrow windows.
///
/// For each width `delta` in the ladder the worst windowed variation over
/// the top quartile of `n_range` is measured. The check passes when some
/// width keeps it below `eta`, and fails when every width lets it exceed
/// `eta`. On a pass the evidence carries the widest such `delta` and the
/// smallest `N` with `V_I(f_n) < eta` for all `n >= N` in the range.
pub fn check_distributed_variation<T: Scalar>(
    seq: &FunctionSequence<T>,
    n_range: NRange,
    grid: &Grid<T>,
    width_ladder: &[T],
    eta: T,
) -> Result<HypothesisVerdict> {
    validate(grid, width_ladder, eta)?;
    let samples = Samples::evaluate(seq, n_range, grid)?;
    distributed_variation_on_samples(&samples, width_ladder, eta)
}

fn validate<T: Scalar>(grid: &Grid<T>, widths: &[T], eta: T) -> Result<()> {
    if widths.is_empty() {
        return Err(Error::Criteria("width ladder is empty".into()));
    }
    if widths.windows(2).any(|w| !(w[0] > w[1])) {
        return Err(Error::Criteria(
            "width ladder must be strictly decreasing".into(),
        ));
    }
    if !(eta > T::zero()) {
        return Err(Error::Criteria("eta must be positive".into()));
    }
    let min_width = T::lit(2.0) * grid.max_cell() * T::lit(1.0 - 1e-9);
    if let Some(w) = widths.iter().find(|&&w| w < min_width) {
        return Err(Error::Criteria(format!(
            "window width {} is below twice the grid spacing {}",
            w,
            grid.max_cell()
        )));
    }
    Ok(())
}

/// Per-width table of windowed variations, `table[k][i]` for width `k` and
/// the `i`-th index of the range.
pub fn window_table<T: Scalar>(samples: &Samples<T>, widths: &[T]) -> Result<Vec<Vec<T>>> {
    widths
        .iter()
        .map(|&w| {
            samples
                .rows()
                .map(|(n, row)| {
                    windowed_variation_of(&samples.grid, row, n, w).map(|p| p.max_window_variation)
                })
                .collect()
        })
        .collect()
}

pub fn distributed_variation_on_samples<T: Scalar>(
    samples: &Samples<T>,
    width_ladder: &[T],
    eta: T,
) -> Result<HypothesisVerdict> {
    validate(&samples.grid, width_ladder, eta)?;
    let table = window_table(samples, width_ladder)?;
    verdict_from_table(samples, width_ladder, &table, eta)
}

pub(crate) fn verdict_from_table<T: Scalar>(
    samples: &Samples<T>,
    widths: &[T],
    table: &[Vec<T>],
    eta: T,
) -> Result<HypothesisVerdict> {
    let range = samples.range;
    let late_from = (range.top_quartile().lo() - range.lo()) as usize;
    let mut bound = T::zero();
    for row in &samples.values {
        bound = bound.max(total_variation(row)?);
    }

    let worst_late: Vec<T> = table
        .iter()
        .map(|col| col[late_from..].iter().fold(T::zero(), |m, &v| m.max(v)))
        .collect();

    let mut ev = Evidence::new();
    ev.push("eta", eta.as_f64());
    for (k, (w, v)) in widths.iter().zip(&worst_late).enumerate() {
        ev.push(format!("width_{}", k), w.as_f64());
        ev.push(format!("late_window_variation_{}", k), v.as_f64());
    }
    ev.push("variation_bound", bound.as_f64());

    let status = match worst_late.iter().position(|&v| v < eta) {
        Some(k) => {
            // Smallest N such that every n >= N stays below eta.
            let col = &table[k];
            let tail = col.iter().rev().take_while(|&&v| v < eta).count();
            let first_n = range.hi() + 1 - tail as u32;
            ev.push("delta", widths[k].as_f64());
            ev.push("n_threshold", first_n);
            Status::Pass
        }
        None if worst_late.iter().all(|&v| v > eta) => Status::Fail,
        None => Status::Inconclusive,
    };
    Ok(HypothesisVerdict::new(
        Criterion::Thm3DistributedVariation,
        status,
        ev,
    ))
}
