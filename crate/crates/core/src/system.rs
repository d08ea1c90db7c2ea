//! Random circle homeomorphisms as skew products over a base system.

use crate::base::BaseSystem;
use crate::circle::{floor_int, CirclePoint};
use crate::error::{Error, Result};
use crate::fibre::{self, FibreFamily, LiftSpec, DEFAULT_VALIDATION_SAMPLES};

/// Everything the estimators need from a random circle homeomorphism:
/// the base step `σ`, the interval map `f̂_ω`, and a chosen lift `F_ω`
/// restricted to `[0, 1)`.
pub trait RandomCircleMap: Sync {
    fn base_step(&self, omega: CirclePoint) -> CirclePoint;

    fn interval_map(&self, omega: CirclePoint, x: CirclePoint) -> Result<CirclePoint>;

    /// `F_ω(x)` for `x ∈ [0, 1)`.
    fn lift_unit(&self, omega: CirclePoint, x: CirclePoint) -> Result<f64>;

    /// `F_ω(x)` for any real `x`, by the degree-one property.
    fn lift(&self, omega: CirclePoint, x: f64) -> Result<f64> {
        let base = floor_int(x)?;
        Ok(self.lift_unit(omega, CirclePoint::new(x)?)? + base as f64)
    }
}

impl<T: RandomCircleMap + ?Sized> RandomCircleMap for &T {
    fn base_step(&self, omega: CirclePoint) -> CirclePoint {
        (**self).base_step(omega)
    }

    fn interval_map(&self, omega: CirclePoint, x: CirclePoint) -> Result<CirclePoint> {
        (**self).interval_map(omega, x)
    }

    fn lift_unit(&self, omega: CirclePoint, x: CirclePoint) -> Result<f64> {
        (**self).lift_unit(omega, x)
    }
}

impl<T: RandomCircleMap + ?Sized + Send> RandomCircleMap for Box<T> {
    fn base_step(&self, omega: CirclePoint) -> CirclePoint {
        (**self).base_step(omega)
    }

    fn interval_map(&self, omega: CirclePoint, x: CirclePoint) -> Result<CirclePoint> {
        (**self).interval_map(omega, x)
    }

    fn lift_unit(&self, omega: CirclePoint, x: CirclePoint) -> Result<f64> {
        (**self).lift_unit(omega, x)
    }
}

/// A base system, a fibre family over it, and a lift of that family.
#[derive(Debug, Clone, PartialEq)]
pub struct SkewSystem {
    pub base: BaseSystem,
    pub fibre: FibreFamily,
    pub lift: LiftSpec,
}

impl SkewSystem {
    /// Builds the system after sampling-based validation of the family and lift.
    pub fn new(base: BaseSystem, fibre: FibreFamily, lift: LiftSpec) -> Result<Self> {
        fibre.validate(DEFAULT_VALIDATION_SAMPLES)?;
        lift.validate(&fibre, DEFAULT_VALIDATION_SAMPLES)?;
        Ok(SkewSystem { base, fibre, lift })
    }

    pub fn new_unchecked(base: BaseSystem, fibre: FibreFamily, lift: LiftSpec) -> Self {
        SkewSystem { base, fibre, lift }
    }

    /// The same dynamics under a different lift.
    pub fn with_lift(&self, lift: LiftSpec) -> Result<Self> {
        lift.validate(&self.fibre, DEFAULT_VALIDATION_SAMPLES)?;
        Ok(SkewSystem { lift, ..self.clone() })
    }
}

impl RandomCircleMap for SkewSystem {
    #[inline]
    fn base_step(&self, omega: CirclePoint) -> CirclePoint {
        self.base.step(omega)
    }

    #[inline]
    fn interval_map(&self, omega: CirclePoint, x: CirclePoint) -> Result<CirclePoint> {
        self.fibre.interval_map(omega, x)
    }

    #[inline]
    fn lift_unit(&self, omega: CirclePoint, x: CirclePoint) -> Result<f64> {
        fibre::lift_unit(&self.fibre, &self.lift, omega, x)
    }
}

/// The k-fold acceleration `(σᵏ, f⁽ᵏ⁾)`: one step is k steps of the inner system.
#[derive(Debug, Clone, PartialEq)]
pub struct Accelerated<S> {
    inner: S,
    k: usize,
}

impl<S: RandomCircleMap> Accelerated<S> {
    pub fn new(inner: S, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument("acceleration factor must be at least 1".into()));
        }
        Ok(Accelerated { inner, k })
    }

    pub fn factor(&self) -> usize {
        self.k
    }

    pub fn inner(&self) -> &S {
        &self.inner
    }
}

pub fn accelerate<S: RandomCircleMap>(inner: S, k: usize) -> Result<Accelerated<S>> {
    Accelerated::new(inner, k)
}

impl<S: RandomCircleMap> RandomCircleMap for Accelerated<S> {
    fn base_step(&self, omega: CirclePoint) -> CirclePoint {
        (0..self.k).fold(omega, |w, _| self.inner.base_step(w))
    }

    fn interval_map(&self, omega: CirclePoint, x: CirclePoint) -> Result<CirclePoint> {
        let mut w = omega;
        let mut y = x;
        for _ in 0..self.k {
            y = self.inner.interval_map(w, y)?;
            w = self.inner.base_step(w);
        }
        Ok(y)
    }

    fn lift_unit(&self, omega: CirclePoint, x: CirclePoint) -> Result<f64> {
        lift_iterate(&self.inner, omega, x.value(), self.k)
    }
}

/// The lifted family `F + a`, which is a lift of `f̂ + a mod 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Shifted<S> {
    inner: S,
    offset: f64,
}

impl<S: RandomCircleMap> Shifted<S> {
    pub fn new(inner: S, offset: f64) -> Result<Self> {
        if !offset.is_finite() {
            return Err(Error::InvalidArgument(format!("shift {offset} is not finite")));
        }
        Ok(Shifted { inner, offset })
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }
}

impl<S: RandomCircleMap> RandomCircleMap for Shifted<S> {
    fn base_step(&self, omega: CirclePoint) -> CirclePoint {
        self.inner.base_step(omega)
    }

    fn interval_map(&self, omega: CirclePoint, x: CirclePoint) -> Result<CirclePoint> {
        Ok(CirclePoint::new(self.inner.interval_map(omega, x)?.value() + self.offset)?)
    }

    fn lift_unit(&self, omega: CirclePoint, x: CirclePoint) -> Result<f64> {
        Ok(self.inner.lift_unit(omega, x)? + self.offset)
    }
}

/// `F⁽ⁿ⁾_ω(x) = F_{σⁿ⁻¹ω} ∘ … ∘ F_ω (x)`, with integer parts carried separately
/// from the fibre point as in the classical estimator loop.
pub fn lift_iterate<S: RandomCircleMap + ?Sized>(sys: &S, omega: CirclePoint, x: f64, n: usize) -> Result<f64> {
    let mut w = omega;
    let mut y = x;
    let mut turns: i64 = 0;
    for _ in 0..n {
        let fl = floor_int(y)?;
        turns += fl;
        y = sys.lift_unit(w, CirclePoint::wrap(y - fl as f64))?;
        w = sys.base_step(w);
    }
    Ok(turns as f64 + y)
}

/// `δ⁽ⁿ⁾(ω, x) = F⁽ⁿ⁾_ω(x) − x`.
pub fn displacement_n<S: RandomCircleMap + ?Sized>(sys: &S, omega: CirclePoint, x: f64, n: usize) -> Result<f64> {
    Ok(lift_iterate(sys, omega, x, n)? - x)
}
