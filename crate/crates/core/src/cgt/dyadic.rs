use std::cmp::Ordering;
use std::fmt;

/// Largest magnitude a numerator (or integer) may take.
pub const MAX_MAGNITUDE: i64 = 1 << 62;
/// Largest power of two allowed in a denominator.
pub const MAX_EXPONENT: u32 = 62;

/// A dyadic rational `numerator / 2^exponent` in lowest terms.
///
/// The numerator is odd whenever the exponent is positive, and both fields
/// are bounded by [`MAX_MAGNITUDE`] and [`MAX_EXPONENT`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Dyadic {
    numerator: i64,
    exponent: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DyadicOverflow;

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic { numerator: 0, exponent: 0 };

    pub fn integer(n: i64) -> Result<Self, DyadicOverflow> {
        Self::new(n, 0)
    }

    /// Builds `numerator / 2^exponent`, reducing to lowest terms.
    pub fn new(numerator: i64, exponent: u32) -> Result<Self, DyadicOverflow> {
        Self::from_wide(numerator as i128, exponent)
    }

    fn from_wide(mut numerator: i128, mut exponent: u32) -> Result<Self, DyadicOverflow> {
        while exponent > 0 && numerator % 2 == 0 {
            numerator /= 2;
            exponent -= 1;
        }
        if exponent > MAX_EXPONENT || numerator.abs() > MAX_MAGNITUDE as i128 {
            return Err(DyadicOverflow);
        }
        Ok(Dyadic { numerator: numerator as i64, exponent })
    }

    pub fn numerator(self) -> i64 {
        self.numerator
    }

    pub fn exponent(self) -> u32 {
        self.exponent
    }

    pub fn is_integer(self) -> bool {
        self.exponent == 0
    }

    pub fn negated(self) -> Self {
        Dyadic { numerator: -self.numerator, exponent: self.exponent }
    }

    /// Largest integer not above `self * 2^k`.
    fn scaled_floor(self, k: u32) -> i128 {
        let n = self.numerator as i128;
        if k >= self.exponent {
            n << (k - self.exponent)
        } else {
            n >> (self.exponent - k)
        }
    }

    /// Simplest dyadic strictly between `lo` and `hi` (either bound may be
    /// absent). `Ok(None)` when the interval is empty.
    pub fn simplest_between(lo: Option<Dyadic>, hi: Option<Dyadic>) -> Result<Option<Dyadic>, DyadicOverflow> {
        if let (Some(l), Some(h)) = (lo, hi) {
            if l >= h {
                return Ok(None);
            }
        }
        let above_zero = lo.is_none_or(|l| l < Dyadic::ZERO);
        let below_zero = hi.is_none_or(|h| h > Dyadic::ZERO);
        if above_zero && below_zero {
            return Ok(Some(Dyadic::ZERO));
        }
        if !above_zero {
            // Interval lies in [lo, hi) with lo >= 0.
            let l = lo.expect("lower bound present");
            for k in 0..=MAX_EXPONENT + 1 {
                let candidate = Self::from_wide(l.scaled_floor(k) + 1, k)?;
                if hi.is_none_or(|h| candidate < h) {
                    return Ok(Some(candidate));
                }
            }
            Err(DyadicOverflow)
        } else {
            let mirrored = Self::simplest_between(hi.map(Dyadic::negated), lo.map(Dyadic::negated))?;
            Ok(mirrored.map(Dyadic::negated))
        }
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.exponent.max(other.exponent);
        let a = (self.numerator as i128) << (e - self.exponent);
        let b = (other.numerator as i128) << (e - other.exponent);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, 1u64 << self.exponent)
        }
    }
}
