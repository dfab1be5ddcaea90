use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Closed interval `[a, b]` with finite `a < b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval<T> {
    a: T,
    b: T,
}

impl<T: Scalar> Interval<T> {
    pub fn new(a: T, b: T) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() || a >= b {
            return Err(Error::Input(format!(
                "interval [{}, {}] must have finite endpoints with a < b",
                a, b
            )));
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> T {
        self.a
    }

    pub fn b(&self) -> T {
        self.b
    }

    pub fn length(&self) -> T {
        self.b - self.a
    }

    pub fn contains(&self, x: T) -> bool {
        x >= self.a && x <= self.b
    }

    pub fn contains_interval(&self, other: &Interval<T>) -> bool {
        self.contains(other.a) && self.contains(other.b)
    }
}

/// Strictly increasing sample points covering an interval, endpoints included.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid<T> {
    interval: Interval<T>,
    points: Vec<T>,
    spacing: Option<T>,
}

impl<T: Scalar> Grid<T> {
    /// `m` equally spaced points. Point `i` is `a + i*h`, so doubling the cell
    /// count reproduces every previous point bit for bit.
    pub fn uniform(interval: Interval<T>, m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::Input(format!(
                "grid needs at least 2 points, got {}",
                m
            )));
        }
        let cells = m - 1;
        let h = interval.length() / T::lit(cells as f64);
        let mut points: Vec<T> = (0..m).map(|i| interval.a + h * T::lit(i as f64)).collect();
        points[cells] = interval.b;
        Ok(Self {
            interval,
            points,
            spacing: Some(h),
        })
    }

    /// Arbitrary strictly increasing points from `a` to `b`.
    pub fn from_points(interval: Interval<T>, points: Vec<T>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::Input("grid needs at least 2 points".into()));
        }
        if points[0] != interval.a || points[points.len() - 1] != interval.b {
            return Err(Error::Input("grid must start at a and end at b".into()));
        }
        if points.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::Input(
                "grid points must be strictly increasing".into(),
            ));
        }
        Ok(Self {
            interval,
            points,
            spacing: None,
        })
    }

    pub fn interval(&self) -> &Interval<T> {
        &self.interval
    }

    pub fn points(&self) -> &[T] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Cell width when the grid was built uniformly.
    pub fn spacing(&self) -> Option<T> {
        self.spacing
    }

    pub fn is_uniform(&self) -> bool {
        self.spacing.is_some()
    }

    /// Widest cell.
    pub fn max_cell(&self) -> T {
        match self.spacing {
            Some(h) => h,
            None => self
                .points
                .windows(2)
                .map(|w| w[1] - w[0])
                .fold(T::zero(), T::max),
        }
    }

    /// Halves every cell. The result contains all current points.
    pub fn refine(&self) -> Self {
        if self.is_uniform() {
            return Self::uniform(self.interval, 2 * (self.len() - 1) + 1)
                .expect("refined grid is valid");
        }
        let half = T::lit(0.5);
        let mut points = Vec::with_capacity(2 * self.len() - 1);
        for w in self.points.windows(2) {
            points.push(w[0]);
            points.push(w[0] + (w[1] - w[0]) * half);
        }
        points.push(self.interval.b);
        Self {
            interval: self.interval,
            points,
            spacing: None,
        }
    }
}
