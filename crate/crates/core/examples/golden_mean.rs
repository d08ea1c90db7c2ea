//! Single trajectory against the partition average for a system whose mean
//! rotation number is exactly 1/4.

use rotnum::base::BaseSystem;
use rotnum::circle::CirclePoint;
use rotnum::estimate::{running_estimates, Method};
use rotnum::fibre::{FibreFamily, LiftSpec};
use rotnum::mean::{bound_audit, partition_mean};
use rotnum::system::SkewSystem;

const BETA: &str = "if(w < 1/2, 1, if(w < 3/4, 0, -1))";

fn main() -> rotnum::error::Result<()> {
    let fibre = FibreFamily::arnold("sin(2*pi*w)", BETA)?;
    let lift = LiftSpec::explicit(&format!("x + sin(2*pi*w)/(2*pi)*sin(2*pi*x) + {BETA}"))?;
    let sys = SkewSystem::new(BaseSystem::golden_rotation(), fibre, lift)?;

    let n = 1000;
    let single = running_estimates(&sys, Method::Classical, CirclePoint::ZERO, 0.3, n)?;
    let averaged = partition_mean(&sys, n, 100, 0.3, Method::Classical, true)?;
    let trace = averaged.trace.as_deref().unwrap();

    println!("{:>6} {:>12} {:>12} {:>10}", "n", "single", "averaged", "1/n");
    for i in [1, 2, 5, 10, 50, 100, 500, 1000] {
        println!("{:>6} {:>12.6} {:>12.6} {:>10.6}", i, single[i - 1], trace[i - 1], 1.0 / i as f64);
    }
    let outside = single.iter().enumerate().filter(|(i, v)| (*v - 0.25).abs() > 1.0 / (i + 1) as f64).count();
    println!("single trajectory outside 1/4 +- 1/n at {outside} of {n} steps");
    println!("averaged worst slack {:.3e} (negative = inside)", bound_audit(&averaged, 0.25)?);
    Ok(())
}
