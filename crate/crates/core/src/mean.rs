//! Partition-averaged mean rotation numbers and parameter sweeps.
//!
//! The mean rotation number is approximated by the Riemann sum
//! `R(n, m, x₀) = (1/m) Σⱼ A(n, ωⱼ, x₀)` over the uniform partition
//! `ωⱼ = j/m`, `j = 1..m`, where `ω_m = 1` is identified with 0.
//!
//! For the exact integral over the base, the error against the mean
//! rotation number is at most `1/n`; that band is reported as
//! `theorem_band`. The Riemann-sum discretisation error is not included
//! in it and is not quantified.

use rayon::prelude::*;

use crate::circle::CirclePoint;
use crate::error::{Error, Result};
use crate::estimate::{estimate, running_estimates, Method};
use crate::system::{RandomCircleMap, Shifted};

/// Neumaier's compensated summation.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.compensation += (self.sum - t) + v;
        } else {
            self.compensation += (v - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn total(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// Left-to-right compensated mean.
pub fn ordered_mean(values: &[f64]) -> f64 {
    let mut acc = CompensatedSum::default();
    values.iter().for_each(|&v| acc.add(v));
    acc.total() / values.len() as f64
}

#[derive(Debug, Clone, PartialEq)]
pub struct MeanEstimate {
    pub value: f64,
    pub n: usize,
    pub m: usize,
    pub x0: f64,
    pub method: Method,
    /// `1/n`.
    pub theorem_band: f64,
    /// Running means `R(n′, m, x₀)` for `n′ = 1..=n`, when requested.
    pub trace: Option<Vec<f64>>,
}

impl MeanEstimate {
    pub fn discretisation_note(&self) -> String {
        format!("unquantified (m = {})", self.m)
    }
}

/// The partition points `j/m` for `j = 1..m`, with the last one wrapped to 0.
pub fn partition_points(m: usize) -> Vec<CirclePoint> {
    (1..=m)
        .map(|j| if j == m { CirclePoint::ZERO } else { CirclePoint::wrap(j as f64 / m as f64) })
        .collect()
}

fn at_point(omega: CirclePoint) -> impl Fn(Error) -> Error {
    move |e| Error::AtBasePoint { omega: omega.value(), source: Box::new(e) }
}

/// Averages the chosen estimator over the uniform partition of size `m`.
///
/// Trajectories run in parallel; the reduction is compensated and always
/// in partition order, so the result does not depend on scheduling.
pub fn partition_mean<S: RandomCircleMap + ?Sized>(
    sys: &S,
    n: usize,
    m: usize,
    x0: f64,
    method: Method,
    trace: bool,
) -> Result<MeanEstimate> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidArgument(format!("need n >= 1 and m >= 1, got n = {n}, m = {m}")));
    }
    let points = partition_points(m);
    let (value, trace) = if trace {
        let runs: Vec<Vec<f64>> = points
            .par_iter()
            .map(|&w| running_estimates(sys, method, w, x0, n).map_err(at_point(w)))
            .collect::<Result<_>>()?;
        let means: Vec<f64> = (0..n)
            .map(|i| {
                let mut acc = CompensatedSum::default();
                runs.iter().for_each(|r| acc.add(r[i]));
                acc.total() / m as f64
            })
            .collect();
        (means[n - 1], Some(means))
    } else {
        let values: Vec<f64> = points
            .par_iter()
            .map(|&w| estimate(sys, method, w, x0, n).map(|e| e.value).map_err(at_point(w)))
            .collect::<Result<_>>()?;
        (ordered_mean(&values), None)
    };
    Ok(MeanEstimate { value, n, m, x0, method, theorem_band: 1.0 / n as f64, trace })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub grid: Vec<f64>,
    pub estimates: Vec<MeanEstimate>,
    pub n: usize,
    pub m: usize,
    pub x0: f64,
}

impl SweepResult {
    pub fn values(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.grid.iter().copied().zip(self.estimates.iter().map(|e| e.value))
    }
}

/// Evenly spaced grid of `points` values from `start` to `end` inclusive.
pub fn linear_grid(start: f64, end: f64, points: usize) -> Vec<f64> {
    match points {
        0 => Vec::new(),
        1 => vec![start],
        _ => (0..points)
            .map(|i| {
                if i == points - 1 {
                    end
                } else {
                    start + (end - start) * i as f64 / (points - 1) as f64
                }
            })
            .collect(),
    }
}

/// Mean rotation numbers of the lifted family `F + a` for each `a` in the grid.
pub fn parameter_sweep<S: RandomCircleMap + ?Sized>(
    sys: &S,
    grid: &[f64],
    n: usize,
    m: usize,
    x0: f64,
    method: Method,
) -> Result<SweepResult> {
    if grid.is_empty() {
        return Err(Error::InvalidArgument("parameter grid is empty".into()));
    }
    if let Some(bad) = grid.iter().find(|a| !(0.0..=1.0).contains(*a)) {
        return Err(Error::InvalidArgument(format!("grid value {bad} is outside [0, 1]")));
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidArgument("parameter grid must be strictly increasing".into()));
    }
    let estimates = grid
        .iter()
        .map(|&a| partition_mean(&Shifted::new(sys, a)?, n, m, x0, method, false))
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepResult { grid: grid.to_vec(), estimates, n, m, x0 })
}

/// Worst signed slack `max over n′ of |R(n′) − reference| − 1/n′`.
///
/// Negative means every running mean sits inside `reference ± 1/n′`.
pub fn bound_audit(estimate: &MeanEstimate, reference: f64) -> Result<f64> {
    let trace = estimate.trace.as_ref().ok_or(Error::MissingTrace)?;
    Ok(trace
        .iter()
        .enumerate()
        .map(|(i, v)| (v - reference).abs() - 1.0 / (i + 1) as f64)
        .fold(f64::NEG_INFINITY, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::BaseSystem;
    use crate::estimate::classical_estimate;
    use crate::fibre::{FibreFamily, LiftSpec};
    use crate::system::SkewSystem;

    fn rotation_over(base: BaseSystem, beta: &str) -> SkewSystem {
        SkewSystem::new(base, FibreFamily::rigid_rotation(beta).unwrap(), LiftSpec::Standard).unwrap()
    }

    #[test]
    fn partition_wraps_last_point() {
        let pts: Vec<f64> = partition_points(4).iter().map(|p| p.value()).collect();
        assert_eq!(pts, vec![0.25, 0.5, 0.75, 0.0]);
        assert_eq!(partition_points(1)[0].value(), 0.0);
    }

    #[test]
    fn constant_rotation_mean() {
        let sys = rotation_over(BaseSystem::golden_rotation(), "0.3");
        for (n, m) in [(1, 1), (10, 7), (200, 50)] {
            let e = partition_mean(&sys, n, m, 0.0, Method::Classical, false).unwrap();
            assert!((e.value - 0.3).abs() < 1e-13, "{}", e.value);
            assert_eq!(e.theorem_band, 1.0 / n as f64);
        }
    }

    #[test]
    fn single_point_partition_is_the_trajectory() {
        let sys = SkewSystem::new(
            crate::base::three_interval_exchange(),
            FibreFamily::arnold("sin(2*pi*w)/2", "frac(7*w)").unwrap(),
            LiftSpec::Standard,
        )
        .unwrap();
        let single = classical_estimate(&sys, CirclePoint::ZERO, 0.4, 300).unwrap();
        let mean = partition_mean(&sys, 300, 1, 0.4, Method::Classical, false).unwrap();
        assert_eq!(mean.value, single.value);
        let traced = partition_mean(&sys, 300, 1, 0.4, Method::Classical, true).unwrap();
        assert_eq!(traced.value, single.value);
    }

    #[test]
    fn mean_is_reproducible_and_ordered() {
        let sys = SkewSystem::new(
            BaseSystem::golden_rotation(),
            FibreFamily::arnold("sin(2*pi*w)", "frac(5*w^2)").unwrap(),
            LiftSpec::Standard,
        )
        .unwrap();
        let a = partition_mean(&sys, 200, 64, 0.0, Method::Classical, false).unwrap();
        let b = partition_mean(&sys, 200, 64, 0.0, Method::Classical, false).unwrap();
        assert_eq!(a.value.to_bits(), b.value.to_bits());
        let per_point: Vec<f64> = partition_points(64)
            .into_iter()
            .map(|w| classical_estimate(&sys, w, 0.0, 200).unwrap().value)
            .collect();
        assert_eq!(a.value.to_bits(), ordered_mean(&per_point).to_bits());
        let traced = partition_mean(&sys, 200, 64, 0.0, Method::Classical, true).unwrap();
        assert_eq!(traced.value.to_bits(), a.value.to_bits());
        assert_eq!(traced.trace.as_ref().unwrap().len(), 200);
    }

    #[test]
    fn invalid_arguments() {
        let sys = rotation_over(BaseSystem::Singleton, "0.3");
        assert!(partition_mean(&sys, 0, 3, 0.0, Method::Classical, false).is_err());
        assert!(partition_mean(&sys, 3, 0, 0.0, Method::Classical, false).is_err());
        assert!(parameter_sweep(&sys, &[], 3, 3, 0.0, Method::Classical).is_err());
        assert!(parameter_sweep(&sys, &[0.5, 0.5], 3, 3, 0.0, Method::Classical).is_err());
        assert!(parameter_sweep(&sys, &[0.5, 1.5], 3, 3, 0.0, Method::Classical).is_err());
    }

    #[test]
    fn errors_carry_base_point() {
        let sys = SkewSystem::new_unchecked(
            BaseSystem::Singleton,
            FibreFamily::rigid_rotation("1/(w - 0.5)").unwrap(),
            LiftSpec::Standard,
        );
        let err = partition_mean(&sys, 3, 2, 0.0, Method::Classical, false).unwrap_err();
        assert!(matches!(err, Error::AtBasePoint { omega, .. } if omega == 0.5), "{err:?}");
    }

    #[test]
    fn sweep_shift_by_one() {
        let sys = SkewSystem::new(
            BaseSystem::golden_rotation(),
            FibreFamily::arnold("0.8", "w/5").unwrap(),
            LiftSpec::Standard,
        )
        .unwrap();
        let s = parameter_sweep(&sys, &[0.0, 1.0], 100, 20, 0.0, Method::Classical).unwrap();
        assert!((s.estimates[1].value - s.estimates[0].value - 1.0).abs() < 1e-9);
        let plain = partition_mean(&sys, 100, 20, 0.0, Method::Classical, false).unwrap();
        assert_eq!(s.estimates[0].value, plain.value);
    }

    #[test]
    fn audit_of_constant_rotation() {
        let sys = rotation_over(BaseSystem::golden_rotation(), "0.25");
        let e = partition_mean(&sys, 50, 10, 0.0, Method::Classical, true).unwrap();
        let slack = bound_audit(&e, 0.25).unwrap();
        // slack is max over n′ of (|err| − 1/n′), i.e. −1/50 up to rounding
        assert!((slack + 1.0 / 50.0).abs() < 1e-12, "{slack}");
        let untraced = partition_mean(&sys, 50, 10, 0.0, Method::Classical, false).unwrap();
        assert_eq!(bound_audit(&untraced, 0.25), Err(Error::MissingTrace));
    }

    #[test]
    fn grid_endpoints_exact() {
        let g = linear_grid(0.0, 1.0, 101);
        assert_eq!(g.len(), 101);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[100], 1.0);
        assert_eq!(linear_grid(0.0, 1.0, 1), vec![0.0]);
    }

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let mut acc = CompensatedSum::default();
        for v in [1.0, 1e100, 1.0, -1e100] {
            acc.add(v);
        }
        assert_eq!(acc.total(), 2.0);
    }
}
