use crate::error::{Error, Result};
use crate::funcspace::{FunctionSequence, LimitFunction, NRange};
use crate::scalar::Scalar;

use super::verdict::{Criterion, Evidence, HypothesisVerdict, Status};

/// Minimum decay exponent `p` in `gap ~ n^-p` accepted as a convergence
/// witness when the final gap is still above the tolerance.
pub const MIN_DECAY_EXPONENT: f64 = 0.25;

/// Witnesses `f_n(x) -> f(x)` at each probe.
///
/// A probe passes when every gap in the top quartile of `n_range` stays at
/// or below the gap at the range midpoint, and the final gap is either below
/// `tol` or has shrunk from the midpoint at least like `n^-1/4`. A limit can
/// only be witnessed, never proven, so the outcome is pass or inconclusive.
pub fn check_pointwise<T: Scalar>(
    seq: &FunctionSequence<T>,
    lim: &LimitFunction<T>,
    probes: &[T],
    n_range: NRange,
    tol: T,
) -> Result<HypothesisVerdict> {
    if probes.is_empty() {
        return Err(Error::Criteria(
            "pointwise check needs at least one probe".into(),
        ));
    }
    if let Some(x) = probes.iter().find(|&&x| !seq.domain().contains(x)) {
        return Err(Error::Criteria(format!(
            "probe {} lies outside the domain",
            x
        )));
    }
    let mid = n_range.midpoint();
    let late = n_range.top_quartile();
    let rate = (T::from_index(mid) / T::from_index(n_range.hi())).powf(T::lit(MIN_DECAY_EXPONENT));
    let slack = T::lit(1e-9);

    let mut worst_final = (T::neg_infinity(), probes[0]);
    let mut failing: Option<(T, T, T)> = None;
    for &x in probes {
        let target = lim.eval(x)?;
        let gap = |n: u32| -> Result<T> { Ok((seq.eval(n, x)? - target).abs()) };
        let mid_gap = gap(mid)?;
        let mut bounded = true;
        let mut final_gap = T::zero();
        for n in late.iter() {
            let g = gap(n)?;
            if g > mid_gap * (T::one() + slack) + T::lit(1e-15) {
                bounded = false;
            }
            final_gap = g;
        }
        if final_gap > worst_final.0 {
            worst_final = (final_gap, x);
        }
        let shrinking = final_gap < tol || final_gap <= mid_gap * rate;
        if failing.is_none() && !(bounded && shrinking) {
            failing = Some((x, mid_gap, final_gap));
        }
    }

    let mut ev = Evidence::new();
    ev.push("probes", probes.len() as f64);
    ev.push("max_final_gap", worst_final.0.as_f64());
    ev.push("max_final_gap_x", worst_final.1.as_f64());
    ev.push("tolerance", tol.as_f64());
    let status = match failing {
        None => Status::Pass,
        Some((x, mid_gap, final_gap)) => {
            ev.push("unresolved_x", x.as_f64());
            ev.push("midpoint_gap", mid_gap.as_f64());
            ev.push("final_gap", final_gap.as_f64());
            Status::Inconclusive
        }
    };
    Ok(HypothesisVerdict::new(
        Criterion::PointwiseConvergence,
        status,
        ev,
    ))
}
