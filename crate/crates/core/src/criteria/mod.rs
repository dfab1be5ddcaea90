//! Numerical verdicts on the hypotheses of Dini's theorem and its
//! equicontinuity, convexity and distributed-variation generalizations.
//!
//! Each check returns a [`HypothesisVerdict`] whose evidence holds the raw
//! numbers behind the decision. The asymptotic conditions are judged with
//! fixed finite heuristics whose constants are exported here.

mod convexity;
mod equicontinuity;
mod monotone;
mod pointwise;
mod variation;
mod verdict;

pub use convexity::{check_convexity, convexity_on_samples};
pub use equicontinuity::{
    check_equicontinuity, equicontinuity_on_samples, extended_ladder, DECAY_PER_HALVING,
    DEFAULT_DELTA_LADDER, FAIL_FLOOR_FRACTION, FAIL_SPAN, ZERO_MODULUS,
};
pub use monotone::{check_monotone_in_n, monotone_on_samples, NON_DECREASING, NON_INCREASING};
pub use pointwise::{check_pointwise, MIN_DECAY_EXPONENT};
pub(crate) use variation::verdict_from_table;
pub use variation::{
    check_distributed_variation, distributed_variation_on_samples, window_table,
    DEFAULT_ETA_LADDER, DEFAULT_WIDTH_LADDER,
};
pub use verdict::{Criterion, Evidence, HypothesisVerdict, Samples, Status};
