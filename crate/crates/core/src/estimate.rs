//! Single-trajectory rotation number estimators.
//!
//! Three estimators, each O(n) time and O(1) memory:
//!
//! * classical: `(F⁽ⁿ⁾_ω(x₀) − x₀)/n` for a chosen lift `F`;
//! * binary coding: the fraction of steps that land on the right branch,
//!   tested as `f̂_ω(x) < f̂_ω(0)`;
//! * visit counting: the fraction of steps that land in the moving
//!   fundamental domain `[z, f̂_ω(z))`.
//!
//! The two counting estimators agree exactly when `z = 0`, and both stay
//! within `1/n` of the classical estimator taken with the standard lift.

use std::fmt;

use crate::circle::{circle_interval_contains, floor_int, CirclePoint};
use crate::error::{Error, Result};
use crate::system::RandomCircleMap;

/// Estimator selection.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Method {
    Classical,
    Binary,
    Visit { z: CirclePoint },
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Classical => "classical",
            Method::Binary => "binary",
            Method::Visit { .. } => "visit",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Visit { z } => write!(f, "visit(z = {z})"),
            m => f.write_str(m.name()),
        }
    }
}

/// Result of one estimator run.
#[derive(Debug, Clone, PartialEq)]
pub struct Estimate {
    pub method: Method,
    pub value: f64,
    pub n: usize,
    /// Raw event count for the counting estimators; `value == counter / n`.
    pub counter: Option<i64>,
    pub omega0: CirclePoint,
    pub x0: f64,
}

/// Where the base orbit starts relative to `ω₀`.
///
/// The cocycle convention applies `f_{σⁱω₀}` for `i = 0..n−1`. The shifted
/// convention sums over `i = 1..n` instead, which is the same as starting
/// the cocycle at `σω₀`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IndexConvention {
    #[default]
    Cocycle,
    Shifted,
}

impl IndexConvention {
    pub fn start<S: RandomCircleMap + ?Sized>(self, sys: &S, omega0: CirclePoint) -> CirclePoint {
        match self {
            IndexConvention::Cocycle => omega0,
            IndexConvention::Shifted => sys.base_step(omega0),
        }
    }
}

fn require_steps(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("number of iterations must be at least 1".into()));
    }
    Ok(())
}

/// Lazily iterates the classical loop, yielding `F⁽ⁱ⁾_ω₀(x₀) − x₀` after step `i`.
pub struct ClassicalRun<'a, S: ?Sized> {
    sys: &'a S,
    omega: CirclePoint,
    x: f64,
    turns: i64,
    x0: f64,
}

impl<'a, S: RandomCircleMap + ?Sized> ClassicalRun<'a, S> {
    pub fn new(sys: &'a S, omega0: CirclePoint, x0: f64) -> Result<Self> {
        if !x0.is_finite() {
            return Err(Error::InvalidArgument(format!("initial point {x0} is not finite")));
        }
        Ok(ClassicalRun { sys, omega: omega0, x: x0, turns: 0, x0 })
    }

    fn advance(&mut self) -> Result<f64> {
        let fl = floor_int(self.x)?;
        self.turns += fl;
        self.x = self.sys.lift_unit(self.omega, CirclePoint::wrap(self.x - fl as f64))?;
        self.omega = self.sys.base_step(self.omega);
        Ok(self.turns as f64 + self.x - self.x0)
    }
}

impl<S: RandomCircleMap + ?Sized> Iterator for ClassicalRun<'_, S> {
    type Item = Result<f64>;

    fn next(&mut self) -> Option<Result<f64>> {
        Some(self.advance())
    }
}

#[derive(Debug, Clone, Copy)]
enum CountRule {
    Binary,
    Visit(CirclePoint),
}

/// Lazily iterates a counting loop, yielding the running event count after each step.
pub struct CountingRun<'a, S: ?Sized> {
    sys: &'a S,
    omega: CirclePoint,
    x: CirclePoint,
    count: i64,
    rule: CountRule,
}

impl<'a, S: RandomCircleMap + ?Sized> CountingRun<'a, S> {
    pub fn binary(sys: &'a S, omega0: CirclePoint, x0: CirclePoint) -> Self {
        CountingRun { sys, omega: omega0, x: x0, count: 0, rule: CountRule::Binary }
    }

    pub fn visit(sys: &'a S, omega0: CirclePoint, x0: CirclePoint, z: CirclePoint) -> Self {
        CountingRun { sys, omega: omega0, x: x0, count: 0, rule: CountRule::Visit(z) }
    }

    fn advance(&mut self) -> Result<i64> {
        self.x = self.sys.interval_map(self.omega, self.x)?;
        let hit = match self.rule {
            CountRule::Binary => self.x < self.sys.interval_map(self.omega, CirclePoint::ZERO)?,
            CountRule::Visit(z) => {
                let y = self.sys.interval_map(self.omega, z)?;
                circle_interval_contains(z, y, self.x)
            }
        };
        if hit {
            self.count += 1;
        }
        self.omega = self.sys.base_step(self.omega);
        Ok(self.count)
    }
}

impl<S: RandomCircleMap + ?Sized> Iterator for CountingRun<'_, S> {
    type Item = Result<i64>;

    fn next(&mut self) -> Option<Result<i64>> {
        Some(self.advance())
    }
}

fn last<T>(run: impl Iterator<Item = Result<T>>, n: usize) -> Result<T> {
    let mut out = None;
    for item in run.take(n) {
        out = Some(item?);
    }
    out.ok_or_else(|| Error::InvalidArgument("number of iterations must be at least 1".into()))
}

/// `A_F(n, ω₀, x₀) = (F⁽ⁿ⁾_ω₀(x₀) − x₀)/n` for the system's lift.
pub fn classical_estimate<S: RandomCircleMap + ?Sized>(
    sys: &S,
    omega0: CirclePoint,
    x0: f64,
    n: usize,
) -> Result<Estimate> {
    require_steps(n)?;
    let disp = last(ClassicalRun::new(sys, omega0, x0)?, n)?;
    Ok(Estimate { method: Method::Classical, value: disp / n as f64, n, counter: None, omega0, x0 })
}

/// `B_f(n, ω₀, x₀)`: frequency of visits to the right branch.
pub fn binary_coding_estimate<S: RandomCircleMap + ?Sized>(
    sys: &S,
    omega0: CirclePoint,
    x0: CirclePoint,
    n: usize,
) -> Result<Estimate> {
    require_steps(n)?;
    let k = last(CountingRun::binary(sys, omega0, x0), n)?;
    Ok(counted(Method::Binary, k, n, omega0, x0))
}

/// `V_f(n, ω₀, x₀, z)`: frequency of visits to `[z, f̂_ω(z))`.
///
/// For `z ≠ 0` this converges to the rotation number only when the maps
/// have no fixed points; see [`fixed_point_clearance`].
pub fn visit_counting_estimate<S: RandomCircleMap + ?Sized>(
    sys: &S,
    omega0: CirclePoint,
    x0: CirclePoint,
    z: CirclePoint,
    n: usize,
) -> Result<Estimate> {
    require_steps(n)?;
    let k = last(CountingRun::visit(sys, omega0, x0, z), n)?;
    Ok(counted(Method::Visit { z }, k, n, omega0, x0))
}

fn counted(method: Method, k: i64, n: usize, omega0: CirclePoint, x0: CirclePoint) -> Estimate {
    Estimate { method, value: k as f64 / n as f64, n, counter: Some(k), omega0, x0: x0.value() }
}

/// Runs the selected estimator. Counting methods use `{x₀}` as the start point.
pub fn estimate<S: RandomCircleMap + ?Sized>(
    sys: &S,
    method: Method,
    omega0: CirclePoint,
    x0: f64,
    n: usize,
) -> Result<Estimate> {
    match method {
        Method::Classical => classical_estimate(sys, omega0, x0, n),
        Method::Binary => binary_coding_estimate(sys, omega0, CirclePoint::new(x0)?, n),
        Method::Visit { z } => visit_counting_estimate(sys, omega0, CirclePoint::new(x0)?, z, n),
    }
}

/// Running estimates `value(n′)` for `n′ = 1..=n`, computed in one pass.
pub fn running_estimates<S: RandomCircleMap + ?Sized>(
    sys: &S,
    method: Method,
    omega0: CirclePoint,
    x0: f64,
    n: usize,
) -> Result<Vec<f64>> {
    require_steps(n)?;
    let scale = |(i, v): (usize, f64)| v / (i + 1) as f64;
    match method {
        Method::Classical => ClassicalRun::new(sys, omega0, x0)?
            .take(n)
            .enumerate()
            .map(|(i, d)| d.map(|d| scale((i, d))))
            .collect(),
        Method::Binary | Method::Visit { .. } => {
            let x0 = CirclePoint::new(x0)?;
            let run = match method {
                Method::Visit { z } => CountingRun::visit(sys, omega0, x0, z),
                _ => CountingRun::binary(sys, omega0, x0),
            };
            run.take(n)
                .enumerate()
                .map(|(i, k)| k.map(|k| scale((i, k as f64))))
                .collect()
        }
    }
}

/// A new maximum of `F⁽ⁿ⁾_ω₀(x₀) − x₀`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Record {
    pub n: usize,
    pub value: f64,
}

/// The steps `n ≤ n_max` at which the displacement strictly exceeds every
/// earlier displacement, including the zero displacement at `n = 0`.
pub fn trajectory_records<S: RandomCircleMap + ?Sized>(
    sys: &S,
    omega0: CirclePoint,
    x0: f64,
    n_max: usize,
) -> Result<Vec<Record>> {
    require_steps(n_max)?;
    let mut best = 0.0;
    let mut out = Vec::new();
    for (i, disp) in ClassicalRun::new(sys, omega0, x0)?.take(n_max).enumerate() {
        let disp = disp?;
        if disp > best {
            best = disp;
            out.push(Record { n: i + 1, value: disp });
        }
    }
    Ok(out)
}

/// The standard lift of any system, rebuilt from its interval map.
#[derive(Debug, Clone)]
pub struct StandardLift<S>(pub S);

impl<S: RandomCircleMap> RandomCircleMap for StandardLift<S> {
    fn base_step(&self, omega: CirclePoint) -> CirclePoint {
        self.0.base_step(omega)
    }

    fn interval_map(&self, omega: CirclePoint, x: CirclePoint) -> Result<CirclePoint> {
        self.0.interval_map(omega, x)
    }

    fn lift_unit(&self, omega: CirclePoint, x: CirclePoint) -> Result<f64> {
        let fx = self.0.interval_map(omega, x)?;
        let f0 = self.0.interval_map(omega, CirclePoint::ZERO)?;
        Ok(if fx < f0 { fx.value() + 1.0 } else { fx.value() })
    }
}

/// The three estimators on identical inputs.
#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    /// Classical estimate with the standard lift.
    pub classical: Estimate,
    pub binary: Estimate,
    /// Visit counting with `z = 0`.
    pub visit: Estimate,
    pub counters_equal: bool,
    /// `|A − B|`.
    pub gap: f64,
    /// `1/n`.
    pub bound: f64,
}

impl Comparison {
    pub fn gap_within_bound(&self) -> bool {
        self.gap < self.bound
    }
}

pub fn estimator_compare<S: RandomCircleMap + ?Sized>(
    sys: &S,
    omega0: CirclePoint,
    x0: CirclePoint,
    n: usize,
) -> Result<Comparison> {
    let standard = StandardLift(sys);
    let classical = classical_estimate(&standard, omega0, x0.value(), n)?;
    let binary = binary_coding_estimate(sys, omega0, x0, n)?;
    let visit = visit_counting_estimate(sys, omega0, x0, CirclePoint::ZERO, n)?;
    let counters_equal = binary.counter == visit.counter;
    let gap = (classical.value - binary.value).abs();
    Ok(Comparison { classical, binary, visit, counters_equal, gap, bound: 1.0 / n as f64 })
}

/// Smallest circle distance `|f̂_ω(x) − x|` over a deterministic sample of
/// `samples × samples` points. Values near zero indicate fixed points.
pub fn fixed_point_clearance<S: RandomCircleMap + ?Sized>(sys: &S, samples: usize) -> Result<f64> {
    let mut best = f64::INFINITY;
    let side = samples.max(1);
    for omega in crate::fibre::sample_points(side) {
        for i in 0..side {
            let x = CirclePoint::wrap(i as f64 / side as f64);
            best = best.min(sys.interval_map(omega, x)?.distance(x));
        }
    }
    Ok(best)
}
