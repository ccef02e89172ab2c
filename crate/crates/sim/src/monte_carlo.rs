//! Independent channel realizations run through the NOMA scheduler and the
//! SUS-ZF baseline on the same pool.

use noma_core::scheduler::{baseline_sus_zf, schedule, Role, SchedulerOutput, SusConfig, UserPool};
use noma_core::ComplexVec;
use rayon::prelude::*;
use serde::Serialize;

use crate::channels::{generate_channels, trial_rng};
use crate::config::SimConfig;
use crate::error::SimResult;

/// Rates of one trial in bits/s/Hz.
///
/// NOMA serves both groups at once. The baseline serves each group in its
/// own half of the time, so its group rates are the interval sum rates
/// halved and they add up to the combined rate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrialRecord {
    pub trial_id: u64,
    pub noma_sum_rate: f64,
    pub noma_strong_rate: f64,
    pub noma_weak_rate: f64,
    pub baseline_sum_rate: f64,
    pub baseline_strong_rate: f64,
    pub baseline_weak_rate: f64,
}

impl TrialRecord {
    pub fn rates(&self) -> [f64; 6] {
        [
            self.noma_sum_rate,
            self.noma_strong_rate,
            self.noma_weak_rate,
            self.baseline_sum_rate,
            self.baseline_strong_rate,
            self.baseline_weak_rate,
        ]
    }
}

/// Column-wise means over trials.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeanRates {
    pub noma_sum_rate: f64,
    pub noma_strong_rate: f64,
    pub noma_weak_rate: f64,
    pub baseline_sum_rate: f64,
    pub baseline_strong_rate: f64,
    pub baseline_weak_rate: f64,
}

impl MeanRates {
    /// Sums in trial order, so the result does not depend on scheduling of
    /// the parallel workers.
    pub fn of(records: &[TrialRecord]) -> Self {
        let mut acc = [0.0; 6];
        for r in records {
            for (a, v) in acc.iter_mut().zip(r.rates()) {
                *a += v;
            }
        }
        let n = records.len().max(1) as f64;
        let [a, b, c, d, e, f] = acc.map(|v| v / n);
        Self {
            noma_sum_rate: a,
            noma_strong_rate: b,
            noma_weak_rate: c,
            baseline_sum_rate: d,
            baseline_strong_rate: e,
            baseline_weak_rate: f,
        }
    }

    pub fn rates(&self) -> [f64; 6] {
        [
            self.noma_sum_rate,
            self.noma_strong_rate,
            self.noma_weak_rate,
            self.baseline_sum_rate,
            self.baseline_strong_rate,
            self.baseline_weak_rate,
        ]
    }
}

/// Everything needed to recompute one trial's NOMA rates offline.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BeamDump {
    pub trial_id: u64,
    /// Per-cluster power.
    pub power: f64,
    pub users: Vec<UserDump>,
    pub clusters: Vec<ClusterDump>,
    pub rates: Vec<RateDump>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UserDump {
    pub id: usize,
    pub eps_sq: f64,
    pub channel: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClusterDump {
    pub strong_id: usize,
    pub weak_id: Option<usize>,
    pub w1: Vec<[f64; 2]>,
    pub w2: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RateDump {
    pub user_id: usize,
    pub cluster: usize,
    pub role: &'static str,
    pub rate: f64,
}

fn pairs(v: &ComplexVec) -> Vec<[f64; 2]> {
    v.iter().map(|z| [z.re, z.im]).collect()
}

impl BeamDump {
    pub fn new(trial_id: u64, out: &SchedulerOutput, pool: &UserPool) -> Self {
        let scheduled = |id: usize| out.realized.iter().any(|r| r.user_id == id);
        let users = pool
            .strong()
            .iter()
            .chain(pool.weak())
            .filter(|u| scheduled(u.id))
            .map(|u| UserDump {
                id: u.id,
                eps_sq: u.eps_sq,
                channel: pairs(&u.channel),
            })
            .collect();
        let clusters = out
            .clusters
            .iter()
            .map(|c| ClusterDump {
                strong_id: c.strong_id,
                weak_id: c.weak_id(),
                w1: pairs(&c.w1_tilde),
                w2: pairs(&c.w2_tilde),
            })
            .collect();
        let rates = out
            .realized
            .iter()
            .map(|r| RateDump {
                user_id: r.user_id,
                cluster: r.cluster,
                role: match r.role {
                    Role::Strong => "strong",
                    Role::Weak => "weak",
                },
                rate: r.rate,
            })
            .collect();
        Self {
            trial_id,
            power: out.power,
            users,
            clusters,
            rates,
        }
    }
}

/// Full result of one trial.
#[derive(Debug, Clone)]
pub struct TrialOutcome {
    pub record: TrialRecord,
    pub noma: SchedulerOutput,
    pub pool: UserPool,
}

pub fn run_trial(cfg: &SimConfig, trial_id: u64) -> SimResult<TrialOutcome> {
    let mut rng = trial_rng(cfg.seed, trial_id);
    let pool = generate_channels(cfg, &mut rng)?;
    let sus = SusConfig::new(cfg.nt, cfg.delta)?;
    let total = cfg.total_power();
    let noma = schedule(&pool, cfg.nt, total, cfg.gamma, &sus)?;
    let base = baseline_sus_zf(&pool, cfg.nt, total, &sus)?;
    let (strong, weak) = (noma.strong_sum_rate(), noma.weak_sum_rate());
    let record = TrialRecord {
        trial_id,
        noma_sum_rate: strong + weak,
        noma_strong_rate: strong,
        noma_weak_rate: weak,
        baseline_sum_rate: base.combined,
        baseline_strong_rate: 0.5 * base.strong_sum,
        baseline_weak_rate: 0.5 * base.weak_sum,
    };
    Ok(TrialOutcome { record, noma, pool })
}

#[derive(Debug, Clone)]
pub struct MonteCarloRun {
    pub records: Vec<TrialRecord>,
    pub mean: MeanRates,
    /// Filled only when requested.
    pub beams: Vec<BeamDump>,
}

/// Runs `cfg.trials` trials in parallel; records come back in trial order.
pub fn run_monte_carlo(cfg: &SimConfig, dump_beams: bool) -> SimResult<MonteCarloRun> {
    cfg.validate()?;
    let outcomes: Vec<(TrialRecord, Option<BeamDump>)> = (0..cfg.trials)
        .into_par_iter()
        .map(|t| {
            let o = run_trial(cfg, t)?;
            let dump = dump_beams.then(|| BeamDump::new(t, &o.noma, &o.pool));
            Ok((o.record, dump))
        })
        .collect::<SimResult<_>>()?;
    let (records, beams): (Vec<_>, Vec<_>) = outcomes.into_iter().unzip();
    let mean = MeanRates::of(&records);
    Ok(MonteCarloRun {
        records,
        mean,
        beams: beams.into_iter().flatten().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SimConfig {
        SimConfig {
            trials: 4,
            k_users: 10,
            ..SimConfig::default()
        }
    }

    #[test]
    fn records_are_ordered_and_finite() {
        let run = run_monte_carlo(&small(), false).unwrap();
        let ids: Vec<u64> = run.records.iter().map(|r| r.trial_id).collect();
        assert_eq!(ids, vec![0, 1, 2, 3]);
        for r in &run.records {
            assert!(r.rates().iter().all(|v| v.is_finite() && *v >= 0.0));
            assert!((r.noma_sum_rate - r.noma_strong_rate - r.noma_weak_rate).abs() < 1e-12);
            let parts = r.baseline_strong_rate + r.baseline_weak_rate;
            assert!((r.baseline_sum_rate - parts).abs() < 1e-12);
        }
        assert!(run.beams.is_empty());
    }

    #[test]
    fn single_trial_reproducible() {
        let cfg = SimConfig {
            trials: 1,
            ..small()
        };
        let a = run_monte_carlo(&cfg, true).unwrap();
        let b = run_monte_carlo(&cfg, true).unwrap();
        assert_eq!(a.records, b.records);
        assert_eq!(a.beams, b.beams);
    }

    #[test]
    fn infeasible_gamma_surfaces() {
        let cfg = SimConfig {
            gamma: 100.0,
            ..small()
        };
        assert!(run_monte_carlo(&cfg, false).unwrap_err().is_infeasible());
    }
}
