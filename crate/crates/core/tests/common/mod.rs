#![allow(dead_code)]

use noma_core::{ComplexVec, TwoUserChannel, C64};
use rand::Rng;

/// Unit vector with i.i.d. Gaussian-ish entries (uniform in the square is
/// enough for direction diversity in tests).
pub fn random_unit<R: Rng>(rng: &mut R, n: usize) -> ComplexVec {
    loop {
        let v: Vec<C64> = (0..n)
            .map(|_| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect();
        let v = ComplexVec::new(v).unwrap();
        if v.norm() > 0.1 {
            return v.normalized().unwrap();
        }
    }
}

/// Channel pair in `C^n` with the requested qualities and angle, random
/// orientation, phases and noise powers.
pub fn channel_with<R: Rng>(
    rng: &mut R,
    n: usize,
    lambda1: f64,
    lambda2: f64,
    theta: f64,
    power: f64,
) -> TwoUserChannel {
    let u = random_unit(rng, n);
    let v = loop {
        let w = random_unit(rng, n);
        let c = u.inner(&w).unwrap();
        let r = w.sub(&u.scale(c)).unwrap();
        if r.norm() > 0.1 {
            break r.normalized().unwrap();
        }
    };
    let sigma1_sq = rng.random_range(0.2..5.0);
    let sigma2_sq = rng.random_range(0.2..5.0);
    let phase = C64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU));
    let h1 = u.scale_real((lambda1 * sigma1_sq).sqrt());
    let h2 = u
        .scale(phase * theta.sqrt())
        .add(&v.scale_real((1.0 - theta).sqrt()))
        .unwrap()
        .scale_real((lambda2 * sigma2_sq).sqrt());
    TwoUserChannel::new(h1, h2, sigma1_sq, sigma2_sq, power).unwrap()
}

pub struct Instance {
    pub ch: TwoUserChannel,
    pub gamma: f64,
}

/// λ₁ ∈ [1, 100], λ₂ ∈ (0, λ₁), θ ∈ [0, 1], P ∈ [0.5, 20], Γ ∈ [0, P].
pub fn random_instance<R: Rng>(rng: &mut R) -> Instance {
    let lambda1 = rng.random_range(1.0..=100.0);
    let lambda2 = lambda1 * rng.random_range(1e-6..1.0);
    let theta = rng.random_range(0.0..=1.0);
    let power = rng.random_range(0.5..=20.0);
    let gamma = rng.random_range(0.0..=power);
    Instance {
        ch: channel_with(rng, 3, lambda1, lambda2, theta, power),
        gamma,
    }
}
