//! Record highs of a single trajectory whose rotation number is zero.
//!
//! The displacement grows without bound, hitting each new integer at a
//! sparse, Fibonacci-spaced set of times, so no `C/n` error bound can hold
//! for single trajectories.

use rotnum::base::BaseSystem;
use rotnum::circle::CirclePoint;
use rotnum::estimate::{trajectory_records, IndexConvention};
use rotnum::fibre::{FibreFamily, LiftSpec};
use rotnum::system::SkewSystem;

fn main() -> rotnum::error::Result<()> {
    let base = BaseSystem::rotation((3.0 - 5f64.sqrt()) / 2.0)?;
    let fibre = FibreFamily::rigid_rotation("if(w < 1/2, 1, -1)")?;
    let lift = LiftSpec::explicit("x + if(w < 1/2, 1, -1)")?;
    let sys = SkewSystem::new(base, fibre, lift)?;

    for convention in [IndexConvention::Shifted, IndexConvention::Cocycle] {
        let start = convention.start(&sys, CirclePoint::ZERO);
        let records = trajectory_records(&sys, start, 0.0, 8000)?;
        println!("{convention:?}:");
        for r in records {
            println!("  n = {:>5}  F^(n)(0) = {}  A_n = {:.6}", r.n, r.value, r.value / r.n as f64);
        }
    }
    Ok(())
}
