#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use rotnum::base::{three_interval_exchange, BaseSystem};
use rotnum::fibre::{FibreFamily, LiftSpec};
use rotnum::system::SkewSystem;

/// Random Arnold family over a random Lebesgue-preserving base, plus the
/// expression strings used to build it.
pub struct RandomArnold {
    pub system: SkewSystem,
    pub alpha: String,
    pub beta: String,
}

impl RandomArnold {
    /// `x + α/(2π) sin(2πx) + β` as an expression, the lift whose integer
    /// part comes straight from β.
    pub fn natural_lift(&self) -> String {
        format!("x + ({})/(2*pi)*sin(2*pi*x) + ({})", self.alpha, self.beta)
    }
}

pub fn random_base(rng: &mut ChaCha8Rng) -> BaseSystem {
    match rng.gen_range(0..4) {
        0 => BaseSystem::golden_rotation(),
        1 => BaseSystem::rotation(rng.gen::<f64>()).unwrap(),
        2 => three_interval_exchange(),
        _ => BaseSystem::Singleton,
    }
}

fn random_alpha(rng: &mut ChaCha8Rng) -> String {
    let a: f64 = rng.gen_range(-1.0..=1.0);
    match rng.gen_range(0..3) {
        0 => format!("{a:?}"),
        1 => format!("{a:?}*sin(2*pi*(w + {:?}))", rng.gen::<f64>()),
        _ => format!("{a:?}*frac({:?}*w)", rng.gen_range(1.0..7.0)),
    }
}

fn random_beta(rng: &mut ChaCha8Rng) -> String {
    let b0: f64 = rng.gen_range(-2.0..2.0);
    let b1: f64 = rng.gen_range(-3.0..3.0);
    match rng.gen_range(0..3) {
        0 => format!("{b0:?} + {b1:?}*w"),
        1 => format!("frac({b1:?}*w^2 + {b0:?})"),
        _ => format!("if(w < {:?}, {b0:?}, {b1:?})", rng.gen::<f64>()),
    }
}

pub fn random_arnold(rng: &mut ChaCha8Rng) -> RandomArnold {
    let base = random_base(rng);
    let alpha = random_alpha(rng);
    let beta = random_beta(rng);
    let fibre = FibreFamily::arnold(&alpha, &beta).unwrap();
    let system = SkewSystem::new(base, fibre, LiftSpec::Standard).unwrap();
    RandomArnold { system, alpha, beta }
}
