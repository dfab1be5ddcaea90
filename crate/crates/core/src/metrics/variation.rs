use crate::error::{Error, Result};
use crate::funcspace::{eval_sequence, FunctionSequence, Grid};
use crate::scalar::Scalar;

/// Full-interval variation next to the most concentrated window.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VariationProfile<T> {
    pub n: u32,
    pub total_variation: T,
    pub window_width: T,
    pub max_window_variation: T,
    pub window_left: T,
}

/// Variation of `f_n` estimated by grid doubling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VariationEstimate<T> {
    pub n: u32,
    pub total_variation: T,
    pub grid_size: usize,
    pub rounds: u32,
}

/// Relative change below which grid doubling stops.
pub const VARIATION_REL_TOL: f64 = 1e-6;

const MAX_VARIATION_POINTS: usize = 1 << 22;

/// Sum of absolute successive differences. A lower bound on the true
/// variation that can only grow when points are added.
pub fn total_variation<T: Scalar>(values: &[T]) -> Result<T> {
    if values.len() < 2 {
        return Err(Error::Metric(
            "total variation needs at least 2 values".into(),
        ));
    }
    Ok(values
        .windows(2)
        .fold(T::zero(), |acc, w| acc + (w[1] - w[0]).abs()))
}

/// Doubles the grid from `base_m` points until the variation changes by less
/// than [`VARIATION_REL_TOL`] relative in two consecutive rounds. A single
/// quiet round is not enough: a peak can sit equally far from the old and the
/// new grid points.
pub fn refined_total_variation<T: Scalar>(
    seq: &FunctionSequence<T>,
    n: u32,
    base_m: usize,
) -> Result<VariationEstimate<T>> {
    let mut grid = Grid::uniform(*seq.domain(), base_m)?;
    let mut tv = total_variation(&eval_sequence(seq, n, &grid)?)?;
    let mut rounds = 0;
    let mut quiet = 0;
    while grid.len() < MAX_VARIATION_POINTS {
        let finer = grid.refine();
        let next = total_variation(&eval_sequence(seq, n, &finer)?)?;
        rounds += 1;
        let settled = (next - tv).abs() <= T::lit(VARIATION_REL_TOL) * next.abs();
        grid = finer;
        tv = next;
        quiet = if settled { quiet + 1 } else { 0 };
        if quiet == 2 {
            break;
        }
    }
    Ok(VariationEstimate {
        n,
        total_variation: tv,
        grid_size: grid.len(),
        rounds,
    })
}

/// Slides a window of `width` over the grid and reports the window holding
/// the most variation.
pub fn windowed_variation<T: Scalar>(
    seq: &FunctionSequence<T>,
    n: u32,
    grid: &Grid<T>,
    width: T,
) -> Result<VariationProfile<T>> {
    let values = eval_sequence(seq, n, grid)?;
    windowed_variation_of(grid, &values, n, width)
}

/// [`windowed_variation`] on precomputed samples.
pub fn windowed_variation_of<T: Scalar>(
    grid: &Grid<T>,
    values: &[T],
    n: u32,
    width: T,
) -> Result<VariationProfile<T>> {
    if values.len() != grid.len() {
        return Err(Error::Metric(format!(
            "{} values for a grid of {} points",
            values.len(),
            grid.len()
        )));
    }
    let max_cell = grid.max_cell();
    if width < T::lit(2.0) * max_cell * T::lit(1.0 - 1e-9) {
        return Err(Error::Metric(format!(
            "window width {} is below twice the grid spacing {}",
            width, max_cell
        )));
    }
    let iv = grid.interval();
    let eps = max_cell * T::lit(1e-9);
    if width > iv.length() + eps {
        return Err(Error::Metric(format!(
            "window width {} exceeds the interval length {}",
            width,
            iv.length()
        )));
    }

    // prefix[j] = variation over points 0..=j
    let mut prefix = Vec::with_capacity(values.len());
    let mut acc = T::zero();
    prefix.push(acc);
    for w in values.windows(2) {
        acc = acc + (w[1] - w[0]).abs();
        prefix.push(acc);
    }
    let total = acc;

    let pts = grid.points();
    let mut best = (T::neg_infinity(), iv.a());
    let mut j = 0;
    for (i, &left) in pts.iter().enumerate() {
        let right = left + width;
        if right > iv.b() + eps {
            break;
        }
        j = j.max(i);
        while j + 1 < pts.len() && pts[j + 1] <= right + eps {
            j += 1;
        }
        let v = prefix[j] - prefix[i];
        if v > best.0 {
            best = (v, left);
        }
    }

    Ok(VariationProfile {
        n,
        total_variation: total,
        window_width: width,
        max_window_variation: best.0,
        window_left: best.1,
    })
}
