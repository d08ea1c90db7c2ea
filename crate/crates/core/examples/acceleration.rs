//! k-fold acceleration multiplies the rotation number by k, and shifting a
//! lift by an integer function shifts the estimate by its Birkhoff average.

use rotnum::base::BaseSystem;
use rotnum::circle::CirclePoint;
use rotnum::estimate::classical_estimate;
use rotnum::fibre::{FibreFamily, LiftSpec};
use rotnum::system::{accelerate, SkewSystem};

fn main() -> rotnum::error::Result<()> {
    let sys = SkewSystem::new(
        BaseSystem::golden_rotation(),
        FibreFamily::arnold("sin(2*pi*w)/2", "frac(3*w)")?,
        LiftSpec::Standard,
    )?;
    let w0 = CirclePoint::ZERO;
    let n = 400;
    let plain = classical_estimate(&sys, w0, 0.1, n)?.value;
    println!("rho estimate            {plain:.12}");
    for k in [2, 3, 5] {
        let acc = accelerate(&sys, k)?;
        let fast = classical_estimate(&acc, w0, 0.1, n / k)?.value;
        let slow = classical_estimate(&sys, w0, 0.1, (n / k) * k)?.value;
        println!("k = {k}: accelerated {fast:.12}  k * original {:.12}", k as f64 * slow);
    }

    // F + k(w) with k in {-1, 0, 1}
    let k = "if(w < 1/3, -1, if(w < 2/3, 0, 1))";
    let beta = "frac(3*w)";
    let shifted = sys.with_lift(LiftSpec::explicit(&format!(
        "x + sin(2*pi*w)/2/(2*pi)*sin(2*pi*x) + {beta} + {k}"
    ))?)?;
    // the standard lift here is x + ... + beta since 0 <= beta < 1 and f(0) = beta
    let moved = classical_estimate(&shifted, w0, 0.1, n)?.value;
    let birkhoff: f64 = sys
        .base
        .orbit(w0, n)
        .map(|w| {
            let v = w.value();
            if v < 1.0 / 3.0 { -1.0 } else if v < 2.0 / 3.0 { 0.0 } else { 1.0 }
        })
        .sum::<f64>()
        / n as f64;
    println!("offset lift minus standard {:.12}, Birkhoff average of k {:.12}", moved - plain, birkhoff);
    Ok(())
}
