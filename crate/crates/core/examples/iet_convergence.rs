//! Partition averages over an interval exchange base, where both the base
//! map and the fibre family are discontinuous in the noise.

use rotnum::base::three_interval_exchange;
use rotnum::estimate::Method;
use rotnum::fibre::{FibreFamily, LiftSpec};
use rotnum::mean::partition_mean;
use rotnum::system::SkewSystem;

const ALPHA: &str = "(sin(2*pi*w) + frac(5*w^2))/2";
const BETA: &str = "(1 - 3*w^2 + frac(2*sin(2*pi*w)))/2";

fn main() -> rotnum::error::Result<()> {
    let fibre = FibreFamily::arnold(ALPHA, BETA)?;
    let lift = LiftSpec::explicit(&format!("x + {ALPHA}/(2*pi)*sin(2*pi*x) + {BETA}"))?;
    let sys = SkewSystem::new(three_interval_exchange(), fibre, lift)?;

    let est = partition_mean(&sys, 1000, 100, 0.0, Method::Classical, true)?;
    let trace = est.trace.as_deref().unwrap();
    let last = est.value;
    println!("R(1000, 100, 0) = {last:.6}");
    for n in [10, 50, 100, 250, 500, 1000] {
        let v = trace[n - 1];
        let inside = (v - last).abs() <= 1.0 / n as f64;
        println!("n = {n:>4}  R = {v:.6}  within final +- 1/n: {inside}");
    }

    // refining the partition moves the estimate much less than 1/n
    for m in [25, 50, 100, 200] {
        let r = partition_mean(&sys, 1000, m, 0.0, Method::Classical, false)?;
        println!("m = {m:>3}  R(1000, m, 0) = {:.6}", r.value);
    }
    Ok(())
}
