use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};

/// A binary fraction `numerator / 2^level` in `[0, 1)`.
///
/// Trailing zero bits are allowed, so `1/2` and `2/4` are distinct
/// representations of the same value; equality and hashing compare values.
#[derive(Debug, Clone, Copy)]
pub struct DyadicFraction {
    numerator: u64,
    level: u32,
}

impl DyadicFraction {
    pub const MAX_LEVEL: u32 = 63;

    pub const ZERO: DyadicFraction = DyadicFraction { numerator: 0, level: 0 };

    pub fn new(numerator: u64, level: u32) -> Result<Self> {
        if level > Self::MAX_LEVEL {
            return Err(Error::Capacity(format!(
                "dyadic level {level} exceeds {}",
                Self::MAX_LEVEL
            )));
        }
        if numerator >> level != 0 {
            return Err(Error::invalid(format!("numerator {numerator} is not below 2^{level}")));
        }
        Ok(Self { numerator, level })
    }

    pub fn numerator(self) -> u64 {
        self.numerator
    }

    pub fn level(self) -> u32 {
        self.level
    }

    /// Same value expressed with denominator `2^level`; `level` must not be
    /// below the current one.
    pub fn at_level(self, level: u32) -> Self {
        debug_assert!(level >= self.level && level <= Self::MAX_LEVEL);
        Self {
            numerator: self.numerator << (level - self.level),
            level,
        }
    }

    /// Lowest-terms form (odd numerator, or zero at level 0).
    pub fn canonical(self) -> Self {
        if self.numerator == 0 {
            return Self::ZERO;
        }
        let shift = self.numerator.trailing_zeros().min(self.level);
        Self {
            numerator: self.numerator >> shift,
            level: self.level - shift,
        }
    }

    /// Exact for every level up to 52.
    pub fn to_f64(self) -> f64 {
        self.numerator as f64 / (1u64 << self.level) as f64
    }
}

/// Digit-by-digit mod-2 addition of two binary fractions, i.e. the XOR of
/// their numerators once both are aligned to the finer level.
pub fn dyadic_xor(a: DyadicFraction, b: DyadicFraction) -> DyadicFraction {
    let level = a.level.max(b.level);
    DyadicFraction {
        numerator: a.at_level(level).numerator ^ b.at_level(level).numerator,
        level,
    }
}

impl std::ops::BitXor for DyadicFraction {
    type Output = DyadicFraction;

    fn bitxor(self, rhs: Self) -> Self {
        dyadic_xor(self, rhs)
    }
}

impl PartialEq for DyadicFraction {
    fn eq(&self, other: &Self) -> bool {
        let level = self.level.max(other.level);
        self.at_level(level).numerator == other.at_level(level).numerator
    }
}

impl Eq for DyadicFraction {}

impl Hash for DyadicFraction {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let c = self.canonical();
        c.numerator.hash(state);
        c.level.hash(state);
    }
}

impl fmt::Display for DyadicFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, 1u128 << self.level)
    }
}
