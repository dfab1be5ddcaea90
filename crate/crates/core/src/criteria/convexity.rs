use crate::error::{Error, Result};
use crate::funcspace::{FunctionSequence, Grid, NRange};
use crate::scalar::Scalar;

use super::verdict::{Criterion, Evidence, HypothesisVerdict, Samples, Status};

/// Discrete convexity of every `f_n`: second differences on a uniform grid
/// must be at least `-tol * max(1, max |f_n|)`.
pub fn check_convexity<T: Scalar>(
    seq: &FunctionSequence<T>,
    n_range: NRange,
    grid: &Grid<T>,
    tol: T,
) -> Result<HypothesisVerdict> {
    validate_grid(grid)?;
    let samples = Samples::evaluate(seq, n_range, grid)?;
    convexity_on_samples(&samples, tol)
}

fn validate_grid<T: Scalar>(grid: &Grid<T>) -> Result<()> {
    if !grid.is_uniform() || grid.len() < 3 {
        return Err(Error::Criteria(
            "convexity check needs a uniform grid with at least 3 points".into(),
        ));
    }
    Ok(())
}

pub fn convexity_on_samples<T: Scalar>(samples: &Samples<T>, tol: T) -> Result<HypothesisVerdict> {
    validate_grid(&samples.grid)?;
    let pts = samples.grid.points();
    let mut min_d2 = T::infinity();
    // (normalized margin, raw second difference, n, x, scale)
    let mut worst: Option<(T, T, u32, T, T)> = None;
    for (n, row) in samples.rows() {
        let scale = row.iter().fold(T::one(), |m, v| m.max(v.abs()));
        for (i, w) in row.windows(3).enumerate() {
            let d2 = w[0] - (w[1] + w[1]) + w[2];
            if d2 < min_d2 {
                min_d2 = d2;
            }
            if d2 < -tol * scale {
                let normalized = d2 / scale;
                if worst.is_none_or(|(m, ..)| normalized < m) {
                    worst = Some((normalized, d2, n, pts[i + 1], scale));
                }
            }
        }
    }
    let mut ev = Evidence::new();
    let status = match worst {
        None => {
            ev.push("min_second_difference", min_d2.as_f64());
            ev.push("tolerance", tol.as_f64());
            Status::Pass
        }
        Some((_, d2, n, x, scale)) => {
            ev.push("worst_second_difference", d2.as_f64());
            ev.push("witness_n", n);
            ev.push("witness_x", x.as_f64());
            ev.push("scale", scale.as_f64());
            ev.push("tolerance", tol.as_f64());
            Status::Fail
        }
    };
    Ok(HypothesisVerdict::new(Criterion::Thm2Convexity, status, ev))
}
