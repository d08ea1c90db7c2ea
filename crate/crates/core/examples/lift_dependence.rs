//! The same random rotation under three lifts. The classical estimator
//! depends on the lift; binary coding does not, and always agrees with the
//! standard lift.

use rotnum::base::BaseSystem;
use rotnum::estimate::Method;
use rotnum::fibre::{FibreFamily, LiftSpec};
use rotnum::mean::partition_mean;
use rotnum::system::SkewSystem;

const TENT: &str = "if(w < 1/2, 4*w, 4 - 4*w)";

fn main() -> rotnum::error::Result<()> {
    let base = BaseSystem::rotation(2f64.sqrt() - 1.0)?;
    let sys = SkewSystem::new(base, FibreFamily::rigid_rotation(TENT)?, LiftSpec::Standard)?;

    let lifts = [
        ("x + beta", LiftSpec::explicit(&format!("x + {TENT}"))?),
        ("standard", LiftSpec::Standard),
        ("zero mean", LiftSpec::explicit(&format!("x + frac({TENT} + 1/2) - 1/2"))?),
        ("(0, 1)-lift", LiftSpec::QAlpha { q: 0.0, alpha: 1.0 }),
    ];
    for (name, lift) in lifts {
        let sys = sys.with_lift(lift)?;
        let r = partition_mean(&sys, 2000, 200, 0.0, Method::Classical, false)?;
        println!("{name:<12} classical mean {:.5}", r.value);
    }
    let b = partition_mean(&sys, 2000, 200, 0.0, Method::Binary, false)?;
    println!("{:<12} binary mean    {:.5}", "any", b.value);
    Ok(())
}
