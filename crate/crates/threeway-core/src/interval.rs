//! Validated closed intervals and the three primitive operations the rest of
//! the crate is built on: weighted-endpoint reduction to a scalar, scaling by
//! a nonnegative factor, and the pairwise possibility degree used to rank
//! interval-valued risks.

use crate::error::Error;

/// A closed interval `[lo, hi]` with `lo <= hi` and finite bounds.
///
/// One representation serves both membership grades (restricted to `[0, 1]`
/// via [`Interval::membership`]) and loss/risk magnitudes; range rules are
/// enforced by the constructor appropriate to the role. A zero-width interval
/// models a plain scalar.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    /// Builds an interval, rejecting non-finite or inverted bounds.
    pub fn new(lo: f64, hi: f64) -> Result<Self, Error> {
        if !lo.is_finite() || !hi.is_finite() {
            return Err(Error::NonFinite { lo, hi });
        }
        if lo > hi {
            return Err(Error::InvertedBounds { lo, hi });
        }
        Ok(Self { lo, hi })
    }

    /// Builds a membership interval, which must also lie inside `[0, 1]`.
    pub fn membership(lo: f64, hi: f64) -> Result<Self, Error> {
        let interval = Self::new(lo, hi)?;
        if lo < 0.0 || hi > 1.0 {
            return Err(Error::OutOfRange { lo, hi });
        }
        Ok(interval)
    }

    /// A zero-width interval standing in for the scalar `value`.
    pub fn point(value: f64) -> Result<Self, Error> {
        Self::new(value, value)
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    /// Collapses the interval to the scalar `(1 - theta) * lo + theta * hi`.
    ///
    /// Zero-width intervals reduce to their value for every theta, and the
    /// endpoints are returned exactly at theta = 0 and theta = 1; the result
    /// is clamped into `[lo, hi]` so downstream range assumptions survive
    /// rounding.
    pub fn reduce(&self, theta: Theta) -> f64 {
        let t = theta.value();
        if self.lo == self.hi || t == 0.0 {
            return self.lo;
        }
        if t == 1.0 {
            return self.hi;
        }
        ((1.0 - t) * self.lo + t * self.hi).clamp(self.lo, self.hi)
    }

    /// Multiplies both bounds by a nonnegative factor.
    pub fn scale(&self, factor: f64) -> Result<Self, Error> {
        if factor < 0.0 || factor.is_nan() {
            return Err(Error::NegativeScale(factor));
        }
        Ok(Self {
            lo: self.lo * factor,
            hi: self.hi * factor,
        })
    }

    /// Degree of possibility that `self >= other`.
    ///
    /// Piecewise in the ratio `(other.hi - self.lo) / (width(self) + width(other))`:
    /// 0 when the ratio is at least 1, 1 when it is at most 0, the complement
    /// otherwise. When both intervals are points the ratio is undefined and
    /// plain order decides: 1, 0.5 or 0 for greater, equal, less.
    pub fn possibility_ge(&self, other: &Interval) -> PossibilityDegree {
        let spread = self.width() + other.width();
        if spread == 0.0 {
            return PossibilityDegree(if self.lo > other.lo {
                1.0
            } else if self.lo == other.lo {
                0.5
            } else {
                0.0
            });
        }
        let ratio = (other.hi - self.lo) / spread;
        PossibilityDegree(if ratio >= 1.0 {
            0.0
        } else if ratio <= 0.0 {
            1.0
        } else {
            1.0 - ratio
        })
    }
}

impl core::fmt::Display for Interval {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Reduction weight in `[0, 1]`: 0 keeps lower bounds, 1 keeps upper bounds.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Theta(f64);

impl Theta {
    pub const HALF: Theta = Theta(0.5);

    pub fn new(value: f64) -> Result<Self, Error> {
        if !value.is_finite() || !(0.0..=1.0).contains(&value) {
            return Err(Error::ThetaOutOfRange(value));
        }
        Ok(Self(value))
    }

    pub fn value(&self) -> f64 {
        self.0
    }
}

impl Default for Theta {
    fn default() -> Self {
        Theta::HALF
    }
}

/// A possibility degree in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PossibilityDegree(pub(crate) f64);

impl PossibilityDegree {
    pub fn new(value: f64) -> Result<Self, Error> {
        if !value.is_finite() || !(0.0..=1.0).contains(&value) {
            return Err(Error::GradeOutOfRange(value));
        }
        Ok(Self(value))
    }

    pub fn value(&self) -> f64 {
        self.0
    }

    /// `1 - p`, the degree of the reversed comparison.
    pub fn complement(&self) -> Self {
        Self(1.0 - self.0)
    }
}
