use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::exprlang::{DomainKind, EvalError};
use crate::scalar::Scalar;

/// Largest index accepted by the Fourier partial sums.
pub const FOURIER_MAX_TERMS: u32 = 4096;

/// Built-in sequences with exact closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gallery {
    /// `sqrt(x + 1/n) -> sqrt(x)` on `[0, 1]`, decreasing in `n`.
    MonotoneSqrt,
    /// `sin(x) / (1 + 1/n) -> sin(x)` on `[0, 2pi]`.
    DampedSine,
    /// `x / (1 + n x^2) -> 0` on `[0, 1]`, peak `1/(2 sqrt n)` at `1/sqrt n`.
    Bump,
    /// `(1 - (-1)^n / n) x^2 -> x^2` on `[0, 1]`.
    ConvexOscillating,
    /// Height-1 tent supported on `[1 - 1/n, 1]`, converging to `0`.
    TentSpike,
    /// `(2/pi) sum_{k<=n} sin(kx)/k -> (pi - x)/pi` on `(0, 2pi)`, zero at both ends.
    FourierSawtooth,
}

impl Gallery {
    pub const ALL: [Gallery; 6] = [
        Gallery::MonotoneSqrt,
        Gallery::DampedSine,
        Gallery::Bump,
        Gallery::ConvexOscillating,
        Gallery::TentSpike,
        Gallery::FourierSawtooth,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Gallery::MonotoneSqrt => "monotone_sqrt",
            Gallery::DampedSine => "damped_sine",
            Gallery::Bump => "bump",
            Gallery::ConvexOscillating => "convex_oscillating",
            Gallery::TentSpike => "tent_spike",
            Gallery::FourierSawtooth => "fourier_sawtooth",
        }
    }

    /// Worked example number the sequence illustrates.
    pub fn example_number(self) -> u32 {
        match self {
            Gallery::MonotoneSqrt => 1,
            Gallery::DampedSine | Gallery::Bump => 2,
            Gallery::ConvexOscillating => 3,
            Gallery::TentSpike => 4,
            Gallery::FourierSawtooth => 5,
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Gallery::MonotoneSqrt => "sqrt(x + 1/n) -> sqrt(x) on [0,1]; decreasing in n",
            Gallery::DampedSine => "sin(x)/(1 + 1/n) -> sin(x) on [0,2pi]; equicontinuous",
            Gallery::Bump => "x/(1 + n x^2) -> 0 on [0,1]; equicontinuous, peak near 1/sqrt(n)",
            Gallery::ConvexOscillating => {
                "(1 - (-1)^n/n) x^2 -> x^2 on [0,1]; convex, zig-zag in n"
            }
            Gallery::TentSpike => {
                "unit tent on [1-1/n, 1] -> 0 on [0,1]; pointwise but not uniform"
            }
            Gallery::FourierSawtooth => {
                "(2/pi) sum sin(kx)/k -> (pi-x)/pi on [0,2pi]; overshoot persists"
            }
        }
    }

    /// Native domain as `(a, b)`.
    pub fn domain<T: Scalar>(self) -> (T, T) {
        match self {
            Gallery::DampedSine | Gallery::FourierSawtooth => (T::zero(), T::TAU()),
            _ => (T::zero(), T::one()),
        }
    }

    pub fn eval_sequence<T: Scalar>(self, n: u32, x: T) -> Result<T, EvalError> {
        if n == 0 {
            return Err(EvalError::builtin(DomainKind::IndexOutOfRange));
        }
        let one = T::one();
        let nf = T::from_index(n);
        let v = match self {
            Gallery::MonotoneSqrt => (x + one / nf).sqrt(),
            Gallery::DampedSine => x.sin() / (one + one / nf),
            Gallery::Bump => x / (one + nf * x * x),
            Gallery::ConvexOscillating => {
                // Below one for even n, above one for odd n.
                let sign = if n.is_multiple_of(2) { -one } else { one };
                (one + sign / nf) * x * x
            }
            Gallery::TentSpike => {
                // Explicit support test keeps the flat part exactly zero.
                if x >= one || x <= one - one / nf {
                    T::zero()
                } else {
                    let two_n = T::lit(2.0) * nf;
                    let peak = one - one / two_n;
                    (one - two_n * (x - peak).abs()).max(T::zero())
                }
            }
            Gallery::FourierSawtooth => {
                if n > FOURIER_MAX_TERMS {
                    return Err(EvalError::builtin(DomainKind::IndexOutOfRange));
                }
                let mut sum = T::zero();
                for k in 1..=n {
                    let kf = T::from_index(k);
                    sum = sum + (kf * x).sin() / kf;
                }
                T::lit(2.0) / T::PI() * sum
            }
        };
        if v.is_finite() {
            Ok(v)
        } else {
            Err(EvalError::builtin(DomainKind::NonFinite))
        }
    }

    pub fn eval_limit<T: Scalar>(self, x: T) -> Result<T, EvalError> {
        let v = match self {
            Gallery::MonotoneSqrt => x.sqrt(),
            Gallery::DampedSine => x.sin(),
            Gallery::Bump | Gallery::TentSpike => T::zero(),
            Gallery::ConvexOscillating => x * x,
            Gallery::FourierSawtooth => {
                let (a, b) = self.domain::<T>();
                if x <= a || x >= b {
                    T::zero()
                } else {
                    (T::PI() - x) / T::PI()
                }
            }
        };
        if v.is_finite() {
            Ok(v)
        } else {
            Err(EvalError::builtin(DomainKind::NonFinite))
        }
    }
}

impl fmt::Display for Gallery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Gallery {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Gallery::ALL
            .into_iter()
            .find(|g| g.id() == s)
            .ok_or_else(|| Error::Input(format!("unknown gallery id '{}'", s)))
    }
}
