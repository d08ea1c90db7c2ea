//! Modulo-1 arithmetic on the circle `R/Z`, represented by `[0, 1)`.

use std::fmt;

use thiserror::Error;

/// Largest magnitude for which every `f64` integer value fits exactly in an `i64`.
const EXACT_INT_LIMIT: f64 = 9_007_199_254_740_992.0; // 2^53

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum CircleError {
    #[error("non-finite value {0}")]
    NonFinite(f64),
    #[error("value {0} is outside the exact integer range")]
    Overflow(f64),
}

/// A point of the circle, stored as its representative in `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct CirclePoint(f64);

impl CirclePoint {
    pub const ZERO: CirclePoint = CirclePoint(0.0);

    /// Projects a finite real onto the circle.
    pub fn new(x: f64) -> Result<Self, CircleError> {
        frac(x)
    }

    /// Projection without the finiteness check, for hot loops whose inputs
    /// are already known to be finite.
    #[inline]
    pub fn wrap(x: f64) -> Self {
        debug_assert!(x.is_finite(), "wrap of non-finite value {x}");
        CirclePoint(wrap_unit(x))
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    /// Membership in the half-open circular arc `[a, b)`.
    #[inline]
    pub fn in_arc(self, a: CirclePoint, b: CirclePoint) -> bool {
        circle_interval_contains(a, b, self)
    }

    /// Shortest arc length between two points, in `[0, 1/2]`.
    pub fn distance(self, other: CirclePoint) -> f64 {
        let d = (self.0 - other.0).abs();
        d.min(1.0 - d)
    }
}

impl From<CirclePoint> for f64 {
    fn from(p: CirclePoint) -> f64 {
        p.0
    }
}

impl fmt::Display for CirclePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

#[inline]
pub(crate) fn wrap_unit(x: f64) -> f64 {
    let r = x - x.floor();
    // x - floor(x) rounds up to 1.0 for tiny negative x
    if r >= 1.0 {
        0.0
    } else {
        r
    }
}

/// Fractional part `x - floor(x)`, always in `[0, 1)`.
pub fn frac(x: f64) -> Result<CirclePoint, CircleError> {
    if !x.is_finite() {
        return Err(CircleError::NonFinite(x));
    }
    Ok(CirclePoint(wrap_unit(x)))
}

/// Greatest integer not exceeding `x`.
pub fn floor_int(x: f64) -> Result<i64, CircleError> {
    if !x.is_finite() {
        return Err(CircleError::NonFinite(x));
    }
    let f = x.floor();
    if f.abs() > EXACT_INT_LIMIT {
        return Err(CircleError::Overflow(x));
    }
    Ok(f as i64)
}

/// Is `x` in the circular half-open interval `[a, b)`?
///
/// When `a > b` the interval wraps through 0 and means `[a, 1) ∪ [0, b)`.
/// The degenerate interval `[a, a)` is empty.
#[inline]
pub fn circle_interval_contains(a: CirclePoint, b: CirclePoint, x: CirclePoint) -> bool {
    let (a, b, x) = (a.0, b.0, x.0);
    if a < b {
        a <= x && x < b
    } else if a > b {
        x >= a || x < b
    } else {
        false
    }
}
