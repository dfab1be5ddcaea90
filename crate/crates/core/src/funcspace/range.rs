use std::fmt;

use crate::error::{Error, Result};

/// Contiguous, inclusive range of sequence indices `lo..=hi` with `lo >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NRange {
    lo: u32,
    hi: u32,
}

impl NRange {
    pub fn new(lo: u32, hi: u32) -> Result<Self> {
        if lo == 0 || lo > hi {
            return Err(Error::Input(format!("invalid index range {}..{}", lo, hi)));
        }
        Ok(Self { lo, hi })
    }

    pub fn lo(&self) -> u32 {
        self.lo
    }

    pub fn hi(&self) -> u32 {
        self.hi
    }

    pub fn len(&self) -> usize {
        (self.hi - self.lo) as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + Clone {
        self.lo..=self.hi
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }

    /// Lower midpoint.
    pub fn midpoint(&self) -> u32 {
        self.lo + (self.hi - self.lo) / 2
    }

    /// The last `ceil(len / 4)` indices.
    pub fn top_quartile(&self) -> NRange {
        let k = self.len().div_ceil(4) as u32;
        NRange {
            lo: self.hi + 1 - k,
            hi: self.hi,
        }
    }
}

impl fmt::Display for NRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}
