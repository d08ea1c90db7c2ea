//! Classical, binary coding and visit counting estimates side by side.

use rotnum::base::{three_interval_exchange, BaseSystem};
use rotnum::circle::CirclePoint;
use rotnum::estimate::{estimator_compare, fixed_point_clearance, visit_counting_estimate};
use rotnum::fibre::{FibreFamily, LiftSpec};
use rotnum::system::SkewSystem;

fn main() -> rotnum::error::Result<()> {
    let systems = [
        ("golden / sin", BaseSystem::golden_rotation(), FibreFamily::arnold("sin(2*pi*w)", "w/2")?),
        ("iet / staircase", three_interval_exchange(), FibreFamily::arnold("(9 + frac(sqrt(2)*w))/10", "frac(pi*w)/5")?),
        ("singleton", BaseSystem::Singleton, FibreFamily::arnold("0.9", "0.37")?),
    ];
    let x0 = CirclePoint::new(0.3)?;
    for (name, base, fibre) in systems {
        let sys = SkewSystem::new(base, fibre, LiftSpec::Standard)?;
        println!("{name}");
        for n in [1, 10, 1000] {
            let c = estimator_compare(&sys, CirclePoint::ZERO, x0, n)?;
            println!(
                "  n = {n:>4}  A = {:.6}  B = {:.6}  V = {:.6}  |A-B| = {:.2e} < {:.0e}: {}  B = V: {}",
                c.classical.value,
                c.binary.value,
                c.visit.value,
                c.gap,
                c.bound,
                c.gap_within_bound(),
                c.counters_equal
            );
        }
        // visit counting away from z = 0 needs maps without fixed points
        let clearance = fixed_point_clearance(&sys, 64)?;
        let v = visit_counting_estimate(&sys, CirclePoint::ZERO, x0, CirclePoint::new(0.5)?, 1000)?;
        println!("  fixed-point clearance {clearance:.2e}, V(z = 0.5) = {:.6}", v.value);
    }
    Ok(())
}
