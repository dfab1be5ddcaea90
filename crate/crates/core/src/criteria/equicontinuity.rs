use crate::error::{Error, Result};
use crate::funcspace::{FunctionSequence, Grid, NRange};
use crate::metrics::{window_cells, window_oscillation};
use crate::scalar::Scalar;

use super::verdict::{Criterion, Evidence, HypothesisVerdict, Samples, Status};

/// Required decay of the family modulus per halving of delta for a pass.
pub const DECAY_PER_HALVING: f64 = 1.5;
/// Shrink factor of delta over which a non-decaying modulus counts as a failure.
pub const FAIL_SPAN: f64 = 64.0;
/// The modulus "stays above a floor" when the smallest-delta value keeps at
/// least this fraction of the largest-delta value.
pub const FAIL_FLOOR_FRACTION: f64 = 0.5;
/// Moduli below this are treated as zero.
pub const ZERO_MODULUS: f64 = 1e-9;

/// Default delta ladder; it is extended by halving to span [`FAIL_SPAN`].
pub const DEFAULT_DELTA_LADDER: [f64; 5] = [0.4, 0.2, 0.1, 0.05, 0.025];

/// Equicontinuity witnessed through the family modulus
/// `sup_n omega_n(delta)` along a decreasing ladder of deltas.
///
/// * pass: the modulus decays by at least [`DECAY_PER_HALVING`] per halving
///   of delta at every rung (or is already zero there);
/// * fail: delta shrinks by at least [`FAIL_SPAN`] while the modulus stays
///   above [`FAIL_FLOOR_FRACTION`] of its largest-delta value;
/// * inconclusive otherwise.
///
/// A ladder spanning less than [`FAIL_SPAN`] is extended by halving its last
/// rung while the rungs stay at least two grid cells wide.
pub fn check_equicontinuity<T: Scalar>(
    seq: &FunctionSequence<T>,
    n_range: NRange,
    grid: &Grid<T>,
    delta_ladder: &[T],
) -> Result<HypothesisVerdict> {
    validate_ladder(grid, delta_ladder)?;
    let samples = Samples::evaluate(seq, n_range, grid)?;
    equicontinuity_on_samples(&samples, delta_ladder)
}

fn validate_ladder<T: Scalar>(grid: &Grid<T>, ladder: &[T]) -> Result<()> {
    let spacing = grid
        .spacing()
        .ok_or_else(|| Error::Criteria("equicontinuity check needs a uniform grid".into()))?;
    if ladder.len() < 4 {
        return Err(Error::Criteria(
            "delta ladder needs at least 4 rungs".into(),
        ));
    }
    if ladder.windows(2).any(|w| !(w[0] > w[1])) {
        return Err(Error::Criteria(
            "delta ladder must be strictly decreasing".into(),
        ));
    }
    let min_delta = T::lit(2.0) * spacing * T::lit(1.0 - 1e-9);
    if let Some(d) = ladder.iter().find(|&&d| d < min_delta) {
        return Err(Error::Criteria(format!(
            "delta {} is below twice the grid spacing {}",
            d, spacing
        )));
    }
    Ok(())
}

/// Ladder after extension by halving.
pub fn extended_ladder<T: Scalar>(grid: &Grid<T>, ladder: &[T]) -> Vec<T> {
    let mut out = ladder.to_vec();
    let spacing = match grid.spacing() {
        Some(h) => h,
        None => return out,
    };
    let min_delta = T::lit(2.0) * spacing;
    let first = out[0];
    loop {
        let last = *out.last().expect("non-empty ladder");
        let next = last * T::lit(0.5);
        if first / last >= T::lit(FAIL_SPAN) * T::lit(1.0 - 1e-12) || next < min_delta {
            break;
        }
        out.push(next);
    }
    out
}

pub fn equicontinuity_on_samples<T: Scalar>(
    samples: &Samples<T>,
    delta_ladder: &[T],
) -> Result<HypothesisVerdict> {
    validate_ladder(&samples.grid, delta_ladder)?;
    let ladder = extended_ladder(&samples.grid, delta_ladder);
    let mut omegas = Vec::with_capacity(ladder.len());
    for &delta in &ladder {
        let cells = window_cells(&samples.grid, delta)?;
        let omega = samples
            .values
            .iter()
            .map(|row| window_oscillation(row, cells))
            .fold(T::zero(), T::max);
        omegas.push(omega);
    }

    let zero = T::lit(ZERO_MODULUS);
    let decays = ladder.windows(2).zip(omegas.windows(2)).all(|(d, w)| {
        if w[1] < zero {
            return true;
        }
        let halvings = (d[0] / d[1]).log2();
        w[0] >= w[1] * T::lit(DECAY_PER_HALVING).powf(halvings)
    });
    let span = ladder[0] / *ladder.last().unwrap();
    let (first, last) = (omegas[0], *omegas.last().unwrap());
    let stuck = span >= T::lit(FAIL_SPAN) * T::lit(1.0 - 1e-12)
        && last > zero
        && last >= first * T::lit(FAIL_FLOOR_FRACTION);

    let status = if decays {
        Status::Pass
    } else if stuck {
        Status::Fail
    } else {
        Status::Inconclusive
    };
    let mut ev = Evidence::new();
    for (k, (d, w)) in ladder.iter().zip(&omegas).enumerate() {
        ev.push(format!("delta_{}", k), d.as_f64());
        ev.push(format!("omega_{}", k), w.as_f64());
    }
    ev.push("ladder_span", span.as_f64());
    ev.push("decay_per_halving", DECAY_PER_HALVING);
    ev.push("fail_span", FAIL_SPAN);
    Ok(HypothesisVerdict::new(
        Criterion::Thm1Equicontinuity,
        status,
        ev,
    ))
}
