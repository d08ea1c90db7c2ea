//! Families of circle homeomorphisms indexed by the base point, and their lifts.
//!
//! A family is evaluated through its interval map `f̂_ω : [0,1) → [0,1)`, the
//! circle map read on the unit interval. `f̂_ω` has at most two increasing
//! branches; the right branch `J_ω` holds the points that wrap past 0 in one
//! step. Membership in `J_ω` is decided by comparing `f̂_ω(x)` with `f̂_ω(0)`,
//! so the preimage of 0 is never computed.

use std::f64::consts::TAU;
use std::fmt;

use crate::circle::{floor_int, CirclePoint};
use crate::error::{Error, Result};
use crate::expr::{parse_with_vars, Expr};

/// Number of `(ω, x)` pairs sampled when validating a family or lift.
pub const DEFAULT_VALIDATION_SAMPLES: usize = 256;
/// Grid size for the `|α(ω)| ≤ 1` check.
pub const DEFAULT_ALPHA_GRID: usize = 1000;

const EXPLICIT_LIFT_TOLERANCE: f64 = 1e-9;
const MONOTONE_SLACK: f64 = 1e-12;
const MONOTONE_POINTS: usize = 32;

#[derive(Debug, Clone, PartialEq)]
pub enum FibreFamily {
    /// `x ↦ x + α(ω)/(2π) sin(2πx) + β(ω) mod 1`, requiring `|α| ≤ 1`.
    Arnold { alpha: Expr, beta: Expr },
    /// `x ↦ x + β(ω) mod 1`.
    RigidRotation { beta: Expr },
    /// `x ↦ expr(ω, x) mod 1`.
    ExplicitCircleMap { expr: Expr },
}

impl FibreFamily {
    pub fn arnold(alpha: &str, beta: &str) -> Result<Self> {
        Ok(FibreFamily::Arnold {
            alpha: parse_with_vars(alpha, &["w"])?,
            beta: parse_with_vars(beta, &["w"])?,
        })
    }

    pub fn rigid_rotation(beta: &str) -> Result<Self> {
        Ok(FibreFamily::RigidRotation { beta: parse_with_vars(beta, &["w"])? })
    }

    pub fn explicit(expr: &str) -> Result<Self> {
        Ok(FibreFamily::ExplicitCircleMap { expr: parse_with_vars(expr, &["w", "x"])? })
    }

    /// `f̂_ω(x)`.
    #[inline]
    pub fn interval_map(&self, omega: CirclePoint, x: CirclePoint) -> Result<CirclePoint> {
        let (w, x) = (omega.value(), x.value());
        let y = match self {
            FibreFamily::Arnold { alpha, beta } => {
                x + alpha.eval_w(w)? / TAU * (TAU * x).sin() + beta.eval_w(w)?
            }
            FibreFamily::RigidRotation { beta } => x + beta.eval_w(w)?,
            FibreFamily::ExplicitCircleMap { expr } => expr.eval_wx(w, x)?,
        };
        Ok(CirclePoint::new(y)?)
    }

    /// `S_ω(x)`: 1 when `x` lies in the right interval `J_ω`, else 0.
    ///
    /// `J_ω` is empty when `f̂_ω(0) = 0`, and the test returns 0 everywhere.
    pub fn right_branch_indicator(&self, omega: CirclePoint, x: CirclePoint) -> Result<u32> {
        let fx = self.interval_map(omega, x)?;
        let f0 = self.interval_map(omega, CirclePoint::ZERO)?;
        Ok(u32::from(fx < f0))
    }

    /// The standard lift `F_ω(x) = f̂_ω({x}) + S_ω({x}) + ⌊x⌋`, pinned by `F_ω(0) ∈ [0,1)`.
    pub fn standard_lift(&self, omega: CirclePoint, x: f64) -> Result<f64> {
        let base = floor_int(x)?;
        let unit = CirclePoint::new(x)?;
        Ok(self.standard_lift_unit(omega, unit)? + base as f64)
    }

    /// The standard lift on `[0, 1)`.
    #[inline]
    pub fn standard_lift_unit(&self, omega: CirclePoint, x: CirclePoint) -> Result<f64> {
        let fx = self.interval_map(omega, x)?;
        let f0 = self.interval_map(omega, CirclePoint::ZERO)?;
        Ok(if fx < f0 { fx.value() + 1.0 } else { fx.value() })
    }

    /// Checks by sampling that each sampled `f̂_ω` is an orientation-preserving
    /// bijection, i.e. the standard lift is increasing on `[0, 1)` and gains
    /// less than 1 across it. For Arnold families also checks `|α| ≤ 1`.
    pub fn validate(&self, samples: usize) -> Result<()> {
        if let FibreFamily::Arnold { alpha, .. } = self {
            arnold_validate(alpha, DEFAULT_ALPHA_GRID)?.into_result()?;
        }
        for omega in sample_points(samples) {
            check_increasing(|x| self.standard_lift_unit(omega, x)).map_err(|msg| {
                Error::InvalidFamily(format!("map at ω = {} is not a circle homeomorphism: {msg}", omega))
            })?;
        }
        Ok(())
    }
}

impl fmt::Display for FibreFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FibreFamily::Arnold { alpha, beta } => write!(f, "arnold(alpha = {alpha}, beta = {beta})"),
            FibreFamily::RigidRotation { beta } => write!(f, "rotation(beta = {beta})"),
            FibreFamily::ExplicitCircleMap { expr } => write!(f, "explicit({expr})"),
        }
    }
}

/// How a lift of the family is selected.
#[derive(Debug, Clone, PartialEq)]
pub enum LiftSpec {
    /// `F_ω(0) ∈ [0, 1)`.
    Standard,
    /// `F_ω(q) ∈ [alpha, alpha + 1)`.
    QAlpha { q: f64, alpha: f64 },
    /// `F_ω(x) = expr(ω, x)` on `[0, 1)`, extended by `F_ω(x + 1) = F_ω(x) + 1`.
    Explicit(Expr),
}

impl LiftSpec {
    pub fn explicit(expr: &str) -> Result<Self> {
        Ok(LiftSpec::Explicit(parse_with_vars(expr, &["w", "x"])?))
    }

    /// Checks an explicit lift against the family by sampling: it must
    /// project onto `f̂_ω` and be increasing with gain below 1 on `[0, 1)`.
    pub fn validate(&self, fam: &FibreFamily, samples: usize) -> Result<()> {
        let LiftSpec::Explicit(expr) = self else {
            return match self {
                LiftSpec::QAlpha { q, alpha } if !(q.is_finite() && alpha.is_finite()) => {
                    Err(Error::InvalidLift(format!("(q, alpha) = ({q}, {alpha}) must be finite")))
                }
                _ => Ok(()),
            };
        };
        let n = samples.max(1);
        for (j, omega) in sample_points(n).into_iter().enumerate() {
            let x = CirclePoint::wrap((j as f64 + 0.5) * std::f64::consts::SQRT_2);
            let lifted = expr.eval_wx(omega.value(), x.value())?;
            let projected = CirclePoint::new(lifted)?;
            let want = fam.interval_map(omega, x)?;
            if projected.distance(want) > EXPLICIT_LIFT_TOLERANCE {
                return Err(Error::InvalidLift(format!(
                    "lift does not project onto the family at ω = {omega}, x = {x}: {} vs {}",
                    projected, want
                )));
            }
        }
        for omega in sample_points(n.min(64)) {
            check_increasing(|x| Ok(expr.eval_wx(omega.value(), x.value())?)).map_err(|msg| {
                Error::InvalidLift(format!("lift at ω = {omega} is not increasing: {msg}"))
            })?;
        }
        Ok(())
    }
}

impl fmt::Display for LiftSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LiftSpec::Standard => f.write_str("standard"),
            LiftSpec::QAlpha { q, alpha } => write!(f, "qalpha({q}, {alpha})"),
            LiftSpec::Explicit(e) => write!(f, "explicit({e})"),
        }
    }
}

/// The selected lift restricted to `[0, 1)`.
#[inline]
pub fn lift_unit(fam: &FibreFamily, spec: &LiftSpec, omega: CirclePoint, x: CirclePoint) -> Result<f64> {
    match spec {
        LiftSpec::Standard => fam.standard_lift_unit(omega, x),
        LiftSpec::QAlpha { q, alpha } => {
            Ok(fam.standard_lift_unit(omega, x)? + qalpha_shift(fam, omega, *q, *alpha)? as f64)
        }
        LiftSpec::Explicit(expr) => Ok(expr.eval_wx(omega.value(), x.value())?),
    }
}

/// `F_ω(x)` for any real `x`.
pub fn lift_eval(fam: &FibreFamily, spec: &LiftSpec, omega: CirclePoint, x: f64) -> Result<f64> {
    let base = floor_int(x)?;
    Ok(lift_unit(fam, spec, omega, CirclePoint::new(x)?)? + base as f64)
}

/// `Δ(x) = F_ω(x) − x`.
pub fn displacement(fam: &FibreFamily, spec: &LiftSpec, omega: CirclePoint, x: f64) -> Result<f64> {
    Ok(lift_eval(fam, spec, omega, x)? - x)
}

/// Integer `k(ω)` with `F^std_ω(q) + k(ω) ∈ [alpha, alpha + 1)`.
fn qalpha_shift(fam: &FibreFamily, omega: CirclePoint, q: f64, alpha: f64) -> Result<i64> {
    Ok(-floor_int(fam.standard_lift(omega, q)? - alpha)?)
}

/// Outcome of the `|α(ω)| ≤ 1` grid check.
#[derive(Debug, Clone, PartialEq)]
pub enum AlphaCheck {
    Ok,
    Violation { omega: f64, alpha: f64 },
}

impl AlphaCheck {
    pub fn into_result(self) -> Result<()> {
        match self {
            AlphaCheck::Ok => Ok(()),
            AlphaCheck::Violation { omega, alpha } => Err(Error::InvalidFamily(format!(
                "|alpha(w)| <= 1 violated: alpha({omega}) = {alpha}"
            ))),
        }
    }
}

/// Checks `|α(ωⱼ)| ≤ 1` on `ωⱼ = j/grid`, reporting the first violation.
pub fn arnold_validate(alpha: &Expr, grid: usize) -> Result<AlphaCheck> {
    if grid == 0 {
        return Err(Error::InvalidArgument("alpha grid must be at least 1".into()));
    }
    for j in 0..grid {
        let omega = j as f64 / grid as f64;
        let a = alpha.eval_w(omega)?;
        if a.abs() > 1.0 {
            return Ok(AlphaCheck::Violation { omega, alpha: a });
        }
    }
    Ok(AlphaCheck::Ok)
}

/// Deterministic, well-spread base points `{j φ}` with `ω₀ = 0`.
pub(crate) fn sample_points(n: usize) -> Vec<CirclePoint> {
    const PHI: f64 = 0.618_033_988_749_894_9;
    (0..n).map(|j| CirclePoint::wrap(j as f64 * PHI)).collect()
}

fn check_increasing<F>(lift: F) -> std::result::Result<(), String>
where
    F: Fn(CirclePoint) -> Result<f64>,
{
    let values = (0..MONOTONE_POINTS)
        .map(|i| lift(CirclePoint::wrap(i as f64 / MONOTONE_POINTS as f64)))
        .collect::<Result<Vec<f64>>>()
        .map_err(|e| e.to_string())?;
    for (i, pair) in values.windows(2).enumerate() {
        if pair[1] < pair[0] - MONOTONE_SLACK {
            return Err(format!(
                "decreases between x = {} and x = {}",
                i as f64 / MONOTONE_POINTS as f64,
                (i + 1) as f64 / MONOTONE_POINTS as f64
            ));
        }
    }
    if values[values.len() - 1] > values[0] + 1.0 + MONOTONE_SLACK {
        return Err("gains more than one turn over [0, 1)".into());
    }
    Ok(())
}
