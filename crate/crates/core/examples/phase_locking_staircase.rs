//! Mean rotation number of `F + a` as `a` runs over [0, 1]. Plateaus in the
//! output are parameter intervals where the rotation number locks.

use rotnum::base::three_interval_exchange;
use rotnum::estimate::Method;
use rotnum::fibre::{FibreFamily, LiftSpec};
use rotnum::mean::{linear_grid, parameter_sweep};
use rotnum::system::SkewSystem;

fn main() -> rotnum::error::Result<()> {
    let fibre = FibreFamily::arnold("(9 + frac(sqrt(2)*w))/10", "frac(pi*w)/5")?;
    let sys = SkewSystem::new(three_interval_exchange(), fibre, LiftSpec::Standard)?;

    let grid = linear_grid(0.0, 1.0, 51);
    let sweep = parameter_sweep(&sys, &grid, 500, 100, 0.0, Method::Classical)?;
    for (a, v) in sweep.values() {
        let bar = "#".repeat((v * 60.0).round().max(0.0) as usize);
        println!("{a:>5.2} {v:>8.4} {bar}");
    }
    Ok(())
}
