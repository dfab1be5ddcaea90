use crate::error::{Error, Result};
use crate::funcspace::{FunctionSequence, Grid, NRange};
use crate::scalar::Scalar;

use super::verdict::{Criterion, Evidence, HypothesisVerdict, Samples, Status};

/// Direction code stored under the `direction` evidence label.
pub const NON_INCREASING: f64 = -1.0;
pub const NON_DECREASING: f64 = 1.0;

/// Dini's hypothesis: `f_{n+1} <= f_n` everywhere (or `>=` everywhere),
/// checked on a grid for every consecutive pair in the range.
pub fn check_monotone_in_n<T: Scalar>(
    seq: &FunctionSequence<T>,
    n_range: NRange,
    grid: &Grid<T>,
    tol: T,
) -> Result<HypothesisVerdict> {
    if n_range.len() < 2 {
        return Err(Error::Criteria(
            "monotone check needs at least two indices".into(),
        ));
    }
    let samples = Samples::evaluate(seq, n_range, grid)?;
    Ok(monotone_on_samples(&samples, tol))
}

struct Worst<T> {
    amount: T,
    n: u32,
    x: T,
}

pub fn monotone_on_samples<T: Scalar>(samples: &Samples<T>, tol: T) -> HypothesisVerdict {
    let pts = samples.grid.points();
    let mut inc = Worst {
        amount: T::neg_infinity(),
        n: samples.range.lo(),
        x: pts[0],
    };
    let mut dec = Worst {
        amount: T::neg_infinity(),
        n: samples.range.lo(),
        x: pts[0],
    };
    let rows: Vec<(u32, &[T])> = samples.rows().collect();
    for pair in rows.windows(2) {
        let (n, cur) = pair[0];
        let (_, next) = pair[1];
        for ((&x, &a), &b) in pts.iter().zip(cur).zip(next) {
            let step = b - a;
            if step > inc.amount {
                inc = Worst { amount: step, n, x };
            }
            if -step > dec.amount {
                dec = Worst {
                    amount: -step,
                    n,
                    x,
                };
            }
        }
    }
    let non_increasing = inc.amount <= tol;
    let non_decreasing = dec.amount <= tol;

    let mut ev = Evidence::new();
    let status = if non_increasing || non_decreasing {
        // All-equal rows satisfy both; non-increasing is reported then.
        let (dir, worst) = if non_increasing {
            (NON_INCREASING, &inc)
        } else {
            (NON_DECREASING, &dec)
        };
        ev.push("direction", dir);
        ev.push("worst_violation", worst.amount.max(T::zero()).as_f64());
        ev.push("tolerance", tol.as_f64());
        Status::Pass
    } else {
        ev.push("increase_violation", inc.amount.as_f64());
        ev.push("increase_n", inc.n);
        ev.push("increase_x", inc.x.as_f64());
        ev.push("decrease_violation", dec.amount.as_f64());
        ev.push("decrease_n", dec.n);
        ev.push("decrease_x", dec.x.as_f64());
        ev.push("worst_violation", inc.amount.max(dec.amount).as_f64());
        ev.push("tolerance", tol.as_f64());
        Status::Fail
    };
    HypothesisVerdict::new(Criterion::DiniMonotone, status, ev)
}
