//! Numerical diagnostics for uniform convergence of a pointwise convergent
//! sequence of continuous functions on a closed interval.
//!
//! The crate measures the sup-norm deviation `sup |f_n - f|` and checks the
//! hypotheses of Dini's theorem and of three generalizations of it
//! (equicontinuity, convexity, uniformly distributed bounded variation).
//! Everything numeric is generic over [`Scalar`] (`f32` or `f64`); the
//! aliases below fix the scalar to `f64`, which is what the CLI and the
//! serialized reports use.

// `!(a < b)` is used deliberately so that NaN is rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod criteria;
pub mod error;
pub mod exprlang;
pub mod funcspace;
pub mod metrics;
pub mod report;
pub mod scalar;

pub use error::{Error, Result, Stage};
pub use scalar::Scalar;

pub type Interval = funcspace::Interval<f64>;
pub type Grid = funcspace::Grid<f64>;
pub type FunctionSequence = funcspace::FunctionSequence<f64>;
pub type LimitFunction = funcspace::LimitFunction<f64>;
pub type DeviationProfile = metrics::DeviationProfile<f64>;
pub type ModulusEstimate = metrics::ModulusEstimate<f64>;
pub type VariationProfile = metrics::VariationProfile<f64>;
pub type ClassifyConfig = report::ClassifyConfig<f64>;

pub type Interval32 = funcspace::Interval<f32>;
pub type Grid32 = funcspace::Grid<f32>;
pub type FunctionSequence32 = funcspace::FunctionSequence<f32>;
pub type LimitFunction32 = funcspace::LimitFunction<f32>;
pub type DeviationProfile32 = metrics::DeviationProfile<f32>;
