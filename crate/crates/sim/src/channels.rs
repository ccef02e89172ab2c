//! Rayleigh channel draws.

use noma_core::scheduler::{User, UserPool};
use noma_core::{ComplexVec, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::config::SimConfig;
use crate::error::SimResult;

/// Generator for one trial: ChaCha8 seeded with `seed + trial_id`.
pub fn trial_rng(seed: u64, trial_id: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_add(trial_id))
}

/// `n` i.i.d. `CN(0, variance)` entries.
pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R, n: usize, variance: f64) -> ComplexVec {
    let normal = Normal::new(0.0, (variance / 2.0).sqrt()).expect("variance validated by caller");
    let entries = (0..n)
        .map(|_| C64::new(normal.sample(rng), normal.sample(rng)))
        .collect();
    ComplexVec::new(entries).expect("finite non-empty draw")
}

/// Draws `K/2` strong users (ids `0..K/2`) and `K/2` weak users (ids
/// `K/2..K`), strong ones first.
pub fn generate_channels<R: Rng + ?Sized>(cfg: &SimConfig, rng: &mut R) -> SimResult<UserPool> {
    cfg.validate()?;
    let half = cfg.users_per_group();
    let mut draw = |id: usize, variance: f64| User {
        id,
        channel: complex_gaussian(rng, cfg.nt, variance),
        eps_sq: cfg.awgn_var,
    };
    let strong: Vec<User> = (0..half).map(|i| draw(i, cfg.sigma_h1_sq)).collect();
    let weak: Vec<User> = (half..2 * half).map(|i| draw(i, cfg.sigma_h2_sq)).collect();
    Ok(UserPool::new(strong, weak)?)
}
