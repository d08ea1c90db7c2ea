//! Measure-preserving base dynamics on `[0, 1)`.
//!
//! All built-in systems preserve Lebesgue measure: rigid rotations,
//! interval exchange transformations, and the trivial one-point system
//! (which recovers the dynamics of a single deterministic circle map).

use crate::circle::CirclePoint;
use crate::error::{Error, Result};

const LENGTH_SUM_TOLERANCE: f64 = 1e-12;
const OFFSET_CHECK_TOLERANCE: f64 = 1e-15;

#[derive(Debug, Clone, PartialEq)]
pub enum BaseSystem {
    /// `ω ↦ ω + angle mod 1`.
    Rotation { angle: f64 },
    IntervalExchange(IntervalExchange),
    /// One-point noise space: `σ` is the identity.
    Singleton,
}

impl BaseSystem {
    /// Rotation by `angle`, reduced mod 1.
    pub fn rotation(angle: f64) -> Result<Self> {
        let angle = crate::circle::frac(angle)?.value();
        Ok(BaseSystem::Rotation { angle })
    }

    /// Rotation by the golden mean `(√5 − 1)/2`.
    pub fn golden_rotation() -> Self {
        BaseSystem::Rotation { angle: (5f64.sqrt() - 1.0) / 2.0 }
    }

    #[inline]
    pub fn step(&self, omega: CirclePoint) -> CirclePoint {
        match self {
            BaseSystem::Rotation { angle } => CirclePoint::wrap(omega.value() + angle),
            BaseSystem::IntervalExchange(iet) => iet.step(omega),
            BaseSystem::Singleton => omega,
        }
    }

    /// `σᵏ ω`.
    pub fn step_n(&self, omega: CirclePoint, k: usize) -> CirclePoint {
        (0..k).fold(omega, |w, _| self.step(w))
    }

    /// The first `n` points `ω₀, σω₀, …, σⁿ⁻¹ω₀` of the orbit.
    pub fn orbit(&self, start: CirclePoint, n: usize) -> Orbit<'_> {
        Orbit { sys: self, next: start, remaining: n }
    }
}

#[derive(Debug, Clone)]
pub struct Orbit<'a> {
    sys: &'a BaseSystem,
    next: CirclePoint,
    remaining: usize,
}

impl Iterator for Orbit<'_> {
    type Item = CirclePoint;

    fn next(&mut self) -> Option<CirclePoint> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let out = self.next;
        if self.remaining > 0 {
            self.next = self.sys.step(out);
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.remaining, Some(self.remaining))
    }
}

impl ExactSizeIterator for Orbit<'_> {}

/// A piecewise translation of `[0, 1)` that permutes the subintervals
/// `[s₀, s₁), [s₁, s₂), …` of given lengths.
///
/// `permutation[i]` is the zero-based position of source interval `i`
/// in the image order.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalExchange {
    lengths: Vec<f64>,
    permutation: Vec<usize>,
    starts: Vec<f64>,
    offsets: Vec<f64>,
}

impl IntervalExchange {
    pub fn new(lengths: Vec<f64>, permutation: Vec<usize>) -> Result<Self> {
        if lengths.is_empty() {
            return Err(Error::InvalidBase("interval exchange needs at least one interval".into()));
        }
        if lengths.len() != permutation.len() {
            return Err(Error::InvalidBase(format!(
                "{} lengths but permutation has {} entries",
                lengths.len(),
                permutation.len()
            )));
        }
        if let Some(bad) = lengths.iter().find(|l| !(l.is_finite() && **l > 0.0)) {
            return Err(Error::InvalidBase(format!("interval length {bad} is not positive")));
        }
        let total: f64 = lengths.iter().sum();
        if (total - 1.0).abs() > LENGTH_SUM_TOLERANCE {
            return Err(Error::InvalidBase(format!("interval lengths sum to {total}, not 1")));
        }
        let mut seen = vec![false; permutation.len()];
        for &p in &permutation {
            if p >= seen.len() || seen[p] {
                return Err(Error::InvalidBase(format!(
                    "{permutation:?} is not a permutation of 0..{}",
                    seen.len()
                )));
            }
            seen[p] = true;
        }
        let lengths: Vec<f64> = lengths.iter().map(|l| l / total).collect();

        let starts = prefix_starts(&lengths);
        let mut image_order = vec![0; lengths.len()];
        for (i, &p) in permutation.iter().enumerate() {
            image_order[p] = i;
        }
        let mut target = vec![0.0; lengths.len()];
        let mut acc = 0.0;
        for &i in &image_order {
            target[i] = acc;
            acc += lengths[i];
        }
        let offsets = starts.iter().zip(&target).map(|(s, t)| t - s).collect();
        Ok(IntervalExchange { lengths, permutation, starts, offsets })
    }

    pub fn lengths(&self) -> &[f64] {
        &self.lengths
    }

    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    /// Translation applied on each source interval.
    pub fn offsets(&self) -> &[f64] {
        &self.offsets
    }

    /// Left endpoints of the source intervals.
    pub fn breakpoints(&self) -> &[f64] {
        &self.starts
    }

    #[inline]
    pub fn step(&self, omega: CirclePoint) -> CirclePoint {
        let w = omega.value();
        let i = self.starts.partition_point(|&s| s <= w).saturating_sub(1);
        CirclePoint::wrap(w + self.offsets[i])
    }
}

fn prefix_starts(lengths: &[f64]) -> Vec<f64> {
    let mut acc = 0.0;
    lengths
        .iter()
        .map(|l| {
            let s = acc;
            acc += l;
            s
        })
        .collect()
}

/// The three-interval exchange with breakpoints `u = √3/3`, `v = √2/2`:
///
/// ```text
/// σ(ω) = ω + 1 − u       on [0, u)
///        ω + 1 − u − v   on [u, v)
///        ω − v           on [v, 1)
/// ```
pub fn three_interval_exchange() -> BaseSystem {
    let u = 3f64.sqrt() / 3.0;
    let v = 2f64.sqrt() / 2.0;
    let mut iet = IntervalExchange::new(vec![u, v - u, 1.0 - v], vec![2, 1, 0])
        .expect("three-interval exchange is well formed");
    let explicit = [1.0 - u, 1.0 - u - v, -v];
    for (derived, want) in iet.offsets.iter().zip(explicit) {
        assert!(
            (derived - want).abs() <= OFFSET_CHECK_TOLERANCE,
            "derived offset {derived} does not match {want}"
        );
    }
    iet.offsets = explicit.to_vec();
    iet.starts = vec![0.0, u, v];
    BaseSystem::IntervalExchange(iet)
}
