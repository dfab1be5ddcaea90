use crate::error::{Error, Result};
use crate::funcspace::{eval_sequence, FunctionSequence, Grid, LimitFunction};
use crate::scalar::Scalar;

/// Number of local maxima that get refined.
pub const REFINE_CANDIDATES: usize = 5;

const MAX_REFINE_ROUNDS: u32 = 200;

/// Estimated `sup |f_n - f|` for one `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeviationProfile<T> {
    pub n: u32,
    pub sup_dev: T,
    pub argmax_x: T,
    pub base_grid_size: usize,
    pub refinement_rounds: u32,
}

/// Base grid size and stopping width for [`sup_deviation`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SupOptions<T> {
    pub base_m: usize,
    pub tol_x: T,
}

impl<T: Scalar> Default for SupOptions<T> {
    fn default() -> Self {
        Self {
            base_m: 4097,
            tol_x: T::lit(1e-9),
        }
    }
}

/// Grid search for `sup |f_n - f|` followed by local refinement.
///
/// The deviation is sampled on `base_m` uniform points. The largest
/// [`REFINE_CANDIDATES`] local maxima are then refined by repeatedly probing
/// the midpoints of the two cells around the current best point and halving
/// the bracket until it is narrower than `tol_x`. The result is a lower bound
/// on the true supremum. Ties resolve to the smallest `x`.
pub fn sup_deviation<T: Scalar>(
    seq: &FunctionSequence<T>,
    lim: &LimitFunction<T>,
    n: u32,
    base_m: usize,
    tol_x: T,
) -> Result<DeviationProfile<T>> {
    if base_m < 33 {
        return Err(Error::Metric(format!(
            "base grid needs at least 33 points, got {}",
            base_m
        )));
    }
    if !(tol_x > T::zero()) {
        return Err(Error::Metric(
            "refinement tolerance must be positive".into(),
        ));
    }
    if !lim.domain().contains_interval(seq.domain()) {
        return Err(Error::Input(format!(
            "limit '{}' is not defined on the whole domain of '{}'",
            lim.id(),
            seq.id()
        )));
    }
    let grid = Grid::uniform(*seq.domain(), base_m)?;
    let fv = eval_sequence(seq, n, &grid)?;
    let lv = lim.eval_on(&grid)?;
    let points = grid.points();
    let mut dev = Vec::with_capacity(points.len());
    for ((&x, &f), &l) in points.iter().zip(&fv).zip(&lv) {
        dev.push(finite_gap(f, l, x, n)?);
    }

    let mut candidates: Vec<usize> = (0..dev.len())
        .filter(|&i| {
            (i == 0 || dev[i] >= dev[i - 1]) && (i + 1 == dev.len() || dev[i] >= dev[i + 1])
        })
        .collect();
    candidates.sort_by(|&i, &j| dev[j].partial_cmp(&dev[i]).unwrap().then(i.cmp(&j)));
    candidates.truncate(REFINE_CANDIDATES);

    let spacing = grid.spacing().expect("uniform grid");
    let domain = *seq.domain();
    let gap_at = |x: T| -> Result<T> {
        let f = seq.eval(n, x)?;
        let l = lim.eval(x)?;
        finite_gap(f, l, x, n)
    };

    let mut best = (T::neg_infinity(), T::zero());
    let mut rounds = 0;
    for &i in &candidates {
        let mut c = points[i];
        let mut v = dev[i];
        let mut h = spacing;
        let mut r = 0;
        while h + h >= tol_x && r < MAX_REFINE_ROUNDS {
            let half = h * T::lit(0.5);
            let mut local = (v, c);
            for trial in [c - half, c + half] {
                if trial < domain.a() || trial > domain.b() {
                    continue;
                }
                let tv = gap_at(trial)?;
                if better(tv, trial, local) {
                    local = (tv, trial);
                }
            }
            (v, c) = local;
            h = half;
            r += 1;
        }
        rounds += r;
        if better(v, c, best) {
            best = (v, c);
        }
    }

    Ok(DeviationProfile {
        n,
        sup_dev: best.0,
        argmax_x: best.1,
        base_grid_size: base_m,
        refinement_rounds: rounds,
    })
}

/// `|f_n - f|` evaluated on a given grid, without refinement.
pub fn grid_deviation<T: Scalar>(
    seq: &FunctionSequence<T>,
    lim: &LimitFunction<T>,
    n: u32,
    grid: &Grid<T>,
) -> Result<Vec<T>> {
    let fv = eval_sequence(seq, n, grid)?;
    let lv = lim.eval_on(grid)?;
    grid.points()
        .iter()
        .zip(fv.iter().zip(&lv))
        .map(|(&x, (&f, &l))| finite_gap(f, l, x, n))
        .collect()
}

fn better<T: Scalar>(v: T, x: T, than: (T, T)) -> bool {
    v > than.0 || (v == than.0 && x < than.1)
}

fn finite_gap<T: Scalar>(f: T, l: T, x: T, n: u32) -> Result<T> {
    let d = (f - l).abs();
    if d.is_finite() {
        Ok(d)
    } else {
        Err(Error::Metric(format!(
            "non-finite deviation at x = {}, n = {}",
            x, n
        )))
    }
}
