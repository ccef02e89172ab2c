//! Parameter sweeps behind the CLI subcommands.

use noma_core::angle::gamma2_simple_power;
use noma_core::oracle::brute_force_max;
use noma_core::two_user::{boundary_point, derive_params, design, optimize_p1};
use noma_core::TwoUserChannel;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::config::SimConfig;
use crate::error::{SimError, SimResult};
use crate::monte_carlo::run_monte_carlo;

pub const PARETO_HEADER: [&str; 3] = ["R1", "R2_fixed", "R2_power"];
pub const ANGLE_HEADER: [&str; 3] = ["theta", "gamma2_optimal", "gamma2_simple"];
pub const GAMMA_HEADER: [&str; 5] = [
    "Gamma",
    "strong_rate_noma",
    "weak_rate_noma",
    "strong_rate_baseline",
    "weak_rate_baseline",
];
pub const ORACLE_HEADER: [&str; 8] = [
    "lambda1",
    "lambda2",
    "theta",
    "power",
    "Gamma",
    "gamma2_design",
    "gamma2_oracle",
    "rel_err",
];

/// Scalar description of a two-user channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalarChannel {
    pub lambda1: f64,
    pub lambda2: f64,
    pub theta: f64,
    pub power: f64,
}

impl ScalarChannel {
    fn build(&self) -> SimResult<TwoUserChannel> {
        Ok(TwoUserChannel::synthetic(
            self.lambda1,
            self.lambda2,
            self.theta,
            self.power,
        )?)
    }
}

fn grid(lo: f64, hi: f64, n: usize, i: usize) -> f64 {
    if i + 1 == n {
        hi
    } else {
        lo + (hi - lo) * i as f64 / (n - 1) as f64
    }
}

fn check_points(points: usize) -> SimResult<()> {
    if points < 2 {
        return Err(SimError::config("points", "must be at least 2"));
    }
    Ok(())
}

/// Boundary points `(R1, R2_fixed, R2_power)` for `Γ` swept over `[0, P]`.
///
/// The equal-split design reaches only `Γ ≤ 1`; beyond that its column is 0.
pub fn pareto_rows(sc: &ScalarChannel, points: usize) -> SimResult<Vec<Vec<f64>>> {
    check_points(points)?;
    let ch = sc.build()?;
    (0..points)
        .map(|i| {
            let gamma = grid(0.0, sc.power, points, i);
            let (r1, r2_power) = boundary_point(&ch, gamma, false)?;
            let r2_fixed = if gamma <= 1.0 {
                boundary_point(&ch, gamma, true)?.1
            } else {
                0.0
            };
            Ok(vec![r1, r2_fixed, r2_power])
        })
        .collect()
}

/// `(θ, γ₂ optimal, γ₂ with p₁ = Γ)` over an even `θ` grid on `[0, 1]`.
pub fn angle_rows(
    lambda1: f64,
    lambda2: f64,
    gamma: f64,
    power: f64,
    points: usize,
) -> SimResult<Vec<Vec<f64>>> {
    check_points(points)?;
    (0..points)
        .into_par_iter()
        .map(|i| {
            let theta = grid(0.0, 1.0, points, i);
            let ch = TwoUserChannel::synthetic(lambda1, lambda2, theta, power)?;
            let optimal = design(&ch, gamma)?.gamma2_star;
            let simple = gamma2_simple_power(theta, lambda1, lambda2, gamma, power)?.gamma2;
            Ok(vec![theta, optimal, simple])
        })
        .collect()
}

/// Even `Γ` grid `P/n, 2P/n, …, P` with `P` the per-cluster power when all
/// `Nt` clusters are formed.
pub fn default_gamma_grid(cfg: &SimConfig, n: usize) -> Vec<f64> {
    let p = cfg.total_power() / cfg.nt as f64;
    (1..=n).map(|i| p * i as f64 / n as f64).collect()
}

/// Mean group rates per `Γ`, reusing the same channel draws for every `Γ`.
pub fn gamma_sweep_rows(cfg: &SimConfig, gammas: &[f64]) -> SimResult<Vec<Vec<f64>>> {
    gammas
        .iter()
        .map(|&gamma| {
            let run = run_monte_carlo(
                &SimConfig {
                    gamma,
                    ..cfg.clone()
                },
                false,
            )?;
            let m = run.mean;
            Ok(vec![
                gamma,
                m.noma_strong_rate,
                m.noma_weak_rate,
                m.baseline_strong_rate,
                m.baseline_weak_rate,
            ])
        })
        .collect()
}

/// Random scalar instance: `λ₁ ∈ [1, 100]`, `λ₂ ∈ (0, λ₁)`, `θ ∈ [0, 1]`,
/// `P ∈ [0.5, 20]`, `Γ ∈ [0, P]`.
pub fn random_instance<R: Rng + ?Sized>(rng: &mut R) -> (ScalarChannel, f64) {
    let lambda1 = rng.random_range(1.0..=100.0);
    let lambda2 = lambda1 * rng.random_range(1e-6..1.0);
    let theta = rng.random_range(0.0..=1.0);
    let power = rng.random_range(0.5..=20.0);
    let gamma = rng.random_range(0.0..=power);
    (
        ScalarChannel {
            lambda1,
            lambda2,
            theta,
            power,
        },
        gamma,
    )
}

/// Compares the design against the grid oracle on random instances.
pub fn oracle_rows(seed: u64, instances: usize, grid_size: usize) -> SimResult<Vec<Vec<f64>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draws: Vec<_> = (0..instances).map(|_| random_instance(&mut rng)).collect();
    draws
        .into_par_iter()
        .map(|(sc, gamma)| {
            let ch = sc.build()?;
            let params = derive_params(&ch, gamma)?;
            let ours = optimize_p1(&ch, &params)?.gamma2_star;
            let oracle = brute_force_max(&ch, &params, grid_size, grid_size)?.gamma2;
            let rel = (ours - oracle).abs() / oracle.abs().max(1e-12);
            Ok(vec![
                sc.lambda1, sc.lambda2, sc.theta, sc.power, gamma, ours, oracle, rel,
            ])
        })
        .collect()
}
