//! Multi-cluster scheduling: semi-orthogonal strong-user selection, ZF
//! projection across clusters, weak-user pairing with the two-user design,
//! realized-rate evaluation and the conventional SUS-ZF baseline.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::{
    gram_schmidt, project_complement, rank_tolerance, ComplexVec, OrthonormalBasis,
};
use crate::rate_from_sinr;
use crate::two_user::{design, BeamSolution, TwoUserChannel};

/// One receiver: identifier, channel and AWGN power.
#[derive(Debug, Clone, PartialEq)]
pub struct User {
    pub id: usize,
    pub channel: ComplexVec,
    pub eps_sq: f64,
}

/// Strong and weak candidate sets.
#[derive(Debug, Clone, PartialEq)]
pub struct UserPool {
    strong: Vec<User>,
    weak: Vec<User>,
}

impl UserPool {
    /// Checks that ids are unique across both groups, channel lengths agree
    /// and noise powers are positive.
    pub fn new(strong: Vec<User>, weak: Vec<User>) -> Result<Self> {
        let mut ids: Vec<usize> = strong.iter().chain(&weak).map(|u| u.id).collect();
        ids.sort_unstable();
        if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateUser(w[0]));
        }
        let mut all = strong.iter().chain(&weak);
        if let Some(first) = all.next() {
            let nt = first.channel.len();
            for u in strong.iter().chain(&weak) {
                if u.channel.len() != nt {
                    return Err(Error::DimensionMismatch {
                        expected: nt,
                        got: u.channel.len(),
                    });
                }
                if !(u.eps_sq > 0.0) || !u.eps_sq.is_finite() {
                    return Err(Error::InvalidArgument {
                        name: "eps_sq",
                        value: u.eps_sq,
                    });
                }
            }
        }
        Ok(Self { strong, weak })
    }

    pub fn strong(&self) -> &[User] {
        &self.strong
    }

    pub fn weak(&self) -> &[User] {
        &self.weak
    }

    fn find(&self, id: usize) -> Option<&User> {
        self.strong.iter().chain(&self.weak).find(|u| u.id == id)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SusConfig {
    /// Number of users to aim for; capped at the antenna count.
    pub target_count: usize,
    /// Largest admissible normalized correlation with an already selected
    /// direction, in `(0, 1]`.
    pub delta: f64,
}

impl SusConfig {
    pub fn new(target_count: usize, delta: f64) -> Result<Self> {
        let cfg = Self {
            target_count,
            delta,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<()> {
        if self.target_count == 0 {
            return Err(Error::InvalidArgument {
                name: "target_count",
                value: 0.0,
            });
        }
        if !(self.delta > 0.0 && self.delta <= 1.0) {
            return Err(Error::InvalidArgument {
                name: "delta",
                value: self.delta,
            });
        }
        Ok(())
    }
}

/// Greedy semi-orthogonal user selection.
///
/// Each round picks the candidate whose channel has the largest component
/// orthogonal to the directions picked so far (lowest index on ties), then
/// keeps only candidates whose normalized correlation with the new direction
/// is at most `delta`. Stops at `target_count` or when no candidate is left.
pub fn sus_select(channels: &[ComplexVec], cfg: &SusConfig) -> Result<Vec<usize>> {
    cfg.validate()?;
    if channels.is_empty() {
        return Err(Error::EmptyPool);
    }
    let nt = channels[0].len();
    if let Some(c) = channels.iter().find(|c| c.len() != nt) {
        return Err(Error::DimensionMismatch {
            expected: nt,
            got: c.len(),
        });
    }

    let mut candidates: Vec<usize> = (0..channels.len())
        .filter(|&i| channels[i].norm_sqr() > 0.0)
        .collect();
    let mut selected = Vec::new();
    let mut directions: Vec<ComplexVec> = Vec::new();
    while selected.len() < cfg.target_count && !candidates.is_empty() {
        let mut best: Option<(usize, ComplexVec, f64)> = None;
        for &k in &candidates {
            let mut g = channels[k].clone();
            for q in &directions {
                let coeff = q.inner_unchecked(&g);
                g = g.axpy_unchecked(-coeff, q);
            }
            let n = g.norm();
            if best.as_ref().is_none_or(|(_, _, bn)| n > *bn) {
                best = Some((k, g, n));
            }
        }
        let Some((pick, g, n)) = best else { break };
        if !(n > 0.0) {
            break;
        }
        let dir = g.scale_real(1.0 / n);
        selected.push(pick);
        candidates.retain(|&k| {
            if k == pick {
                return false;
            }
            let h = &channels[k];
            let corr = h.inner_unchecked(&dir).norm() / h.norm();
            corr <= cfg.delta
        });
        directions.push(dir);
    }
    Ok(selected)
}

/// Interference-plus-noise estimate for a weak candidate of cluster `k`.
///
/// `designed_w1`, `designed_w2` hold the power-scaled beams of clusters
/// before `k`; `pending_w_hat` holds unit-norm beam estimates of clusters
/// after `k`, each weighted by the full cluster power `power`.
pub fn estimate_ici(
    weak_channel: &ComplexVec,
    eps_sq: f64,
    designed_w1: &[ComplexVec],
    designed_w2: &[ComplexVec],
    pending_w_hat: &[ComplexVec],
    power: f64,
) -> Result<f64> {
    let mut total = eps_sq;
    for w in designed_w1.iter().chain(designed_w2) {
        total += weak_channel.inner(w)?.norm_sqr();
    }
    for w in pending_w_hat {
        total += power * weak_channel.inner(w)?.norm_sqr();
    }
    Ok(total)
}

/// Weak member of a cluster.
#[derive(Debug, Clone, PartialEq)]
pub struct WeakAssignment {
    pub id: usize,
    /// Projected weak channel.
    pub h2_eff: ComplexVec,
    /// Interference-plus-noise estimate used in the design.
    pub sigma_hat_sq: f64,
    pub solution: BeamSolution,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClusterPlan {
    pub strong_id: usize,
    /// Projected strong channel.
    pub h1_eff: ComplexVec,
    pub sigma1_sq: f64,
    /// `None` when no eligible weak user was left and the cluster serves its
    /// strong user alone with a matched filter at full cluster power.
    pub weak: Option<WeakAssignment>,
    /// Final power-scaled strong-user beam.
    pub w1_tilde: ComplexVec,
    /// Final power-scaled weak-user beam (zero for single-user clusters).
    pub w2_tilde: ComplexVec,
}

impl ClusterPlan {
    pub fn weak_id(&self) -> Option<usize> {
        self.weak.as_ref().map(|w| w.id)
    }

    pub fn is_single_user(&self) -> bool {
        self.weak.is_none()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    Strong,
    Weak,
}

/// Achieved rate of one scheduled user, in bits/s/Hz.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealizedRate {
    pub user_id: usize,
    pub cluster: usize,
    pub role: Role,
    pub rate: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SchedulerOutput {
    pub clusters: Vec<ClusterPlan>,
    pub kc: usize,
    /// Per-cluster power `P_T / Kc`.
    pub power: f64,
    pub realized: Vec<RealizedRate>,
}

impl SchedulerOutput {
    pub fn strong_sum_rate(&self) -> f64 {
        sum_role(&self.realized, Role::Strong)
    }

    pub fn weak_sum_rate(&self) -> f64 {
        sum_role(&self.realized, Role::Weak)
    }

    /// Number of clusters that fell back to single-user service.
    pub fn single_user_clusters(&self) -> usize {
        self.clusters.iter().filter(|c| c.is_single_user()).count()
    }
}

fn sum_role(rates: &[RealizedRate], role: Role) -> f64 {
    rates
        .iter()
        .filter(|r| r.role == role)
        .map(|r| r.rate)
        .sum()
}

fn complement_basis(channels: &[&ComplexVec]) -> Result<OrthonormalBasis> {
    if channels.is_empty() {
        return Ok(OrthonormalBasis::empty());
    }
    let cols: Vec<ComplexVec> = channels.iter().map(|c| (*c).clone()).collect();
    gram_schmidt(&cols, rank_tolerance(&cols))
}

fn check_nt(pool: &UserPool, nt: usize) -> Result<()> {
    if nt == 0 {
        return Err(Error::InvalidArgument {
            name: "nt",
            value: 0.0,
        });
    }
    if let Some(u) = pool
        .strong
        .iter()
        .chain(&pool.weak)
        .find(|u| u.channel.len() != nt)
    {
        return Err(Error::DimensionMismatch {
            expected: nt,
            got: u.channel.len(),
        });
    }
    Ok(())
}

fn check_total_power(total_power: f64) -> Result<()> {
    if total_power > 0.0 && total_power.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument {
            name: "total_power",
            value: total_power,
        })
    }
}

struct Candidate {
    index: usize,
    h2_eff: ComplexVec,
    sigma_hat_sq: f64,
    solution: BeamSolution,
}

/// Schedules `Kc ≤ Nt` clusters and designs all beams.
///
/// Strong users come from SUS on the strong pool. Each cluster's channels
/// are projected onto the orthogonal complement of the other clusters'
/// strong channels, so strong users see no inter-cluster interference. Weak
/// users are picked cluster by cluster as the candidate with the largest
/// achievable SINR given the current interference estimate.
pub fn schedule(
    pool: &UserPool,
    nt: usize,
    total_power: f64,
    gamma: f64,
    cfg: &SusConfig,
) -> Result<SchedulerOutput> {
    check_nt(pool, nt)?;
    check_total_power(total_power)?;
    if pool.strong.is_empty() || pool.weak.is_empty() {
        return Err(Error::EmptyPool);
    }
    let sus_cfg = SusConfig {
        target_count: cfg.target_count.min(nt),
        ..*cfg
    };
    let strong_channels: Vec<ComplexVec> = pool.strong.iter().map(|u| u.channel.clone()).collect();
    let selected = sus_select(&strong_channels, &sus_cfg)?;
    let kc = selected.len();
    if pool.weak.len() < kc {
        return Err(Error::WeakPoolTooSmall {
            weak: pool.weak.len(),
            clusters: kc,
        });
    }
    let power = total_power / kc as f64;
    if !(gamma >= 0.0) || gamma > power {
        return Err(Error::Infeasible { gamma, power });
    }

    let strong: Vec<&User> = selected.iter().map(|&i| &pool.strong[i]).collect();
    let mut bases = Vec::with_capacity(kc);
    let mut h1_eff = Vec::with_capacity(kc);
    for k in 0..kc {
        let others: Vec<&ComplexVec> = (0..kc)
            .filter(|&l| l != k)
            .map(|l| &strong[l].channel)
            .collect();
        let basis = complement_basis(&others)?;
        h1_eff.push(project_complement(&strong[k].channel, &basis)?);
        bases.push(basis);
    }
    let w_hat: Vec<ComplexVec> = h1_eff
        .iter()
        .map(|h| h.normalized().unwrap_or_else(|| ComplexVec::zeros(nt)))
        .collect();

    let mut remaining: Vec<usize> = (0..pool.weak.len()).collect();
    let mut designed_w1: Vec<ComplexVec> = Vec::with_capacity(kc);
    let mut designed_w2: Vec<ComplexVec> = Vec::with_capacity(kc);
    let mut clusters = Vec::with_capacity(kc);
    for k in 0..kc {
        let sigma1_sq = strong[k].eps_sq;
        let mut best: Option<Candidate> = None;
        for &idx in &remaining {
            let user = &pool.weak[idx];
            let h2_eff = project_complement(&user.channel, &bases[k])?;
            if h2_eff.norm_sqr() == 0.0 {
                continue;
            }
            let sigma_hat_sq = estimate_ici(
                &user.channel,
                user.eps_sq,
                &designed_w1,
                &designed_w2,
                &w_hat[k + 1..],
                power,
            )?;
            let ch = match TwoUserChannel::new(
                h1_eff[k].clone(),
                h2_eff.clone(),
                sigma1_sq,
                sigma_hat_sq,
                power,
            ) {
                Ok(ch) => ch,
                // A candidate at least as strong as the strong user after
                // projection cannot be paired with SIC in this order.
                Err(Error::OrderingViolated { .. }) | Err(Error::ZeroNorm) => continue,
                Err(e) => return Err(e),
            };
            let solution = design(&ch, gamma)?;
            let better = match &best {
                None => true,
                Some(b) => {
                    solution.gamma2_star > b.solution.gamma2_star
                        || (solution.gamma2_star == b.solution.gamma2_star
                            && user.id < pool.weak[b.index].id)
                }
            };
            if better {
                best = Some(Candidate {
                    index: idx,
                    h2_eff,
                    sigma_hat_sq,
                    solution,
                });
            }
        }

        let plan = match best {
            Some(c) => {
                remaining.retain(|&i| i != c.index);
                let w1_tilde = c.solution.w1_scaled.clone();
                let w2_tilde = c.solution.w2_scaled.clone();
                ClusterPlan {
                    strong_id: strong[k].id,
                    h1_eff: h1_eff[k].clone(),
                    sigma1_sq,
                    weak: Some(WeakAssignment {
                        id: pool.weak[c.index].id,
                        h2_eff: c.h2_eff,
                        sigma_hat_sq: c.sigma_hat_sq,
                        solution: c.solution,
                    }),
                    w1_tilde,
                    w2_tilde,
                }
            }
            None => ClusterPlan {
                strong_id: strong[k].id,
                h1_eff: h1_eff[k].clone(),
                sigma1_sq,
                weak: None,
                w1_tilde: w_hat[k].scale_real(power.sqrt()),
                w2_tilde: ComplexVec::zeros(nt),
            },
        };
        designed_w1.push(plan.w1_tilde.clone());
        designed_w2.push(plan.w2_tilde.clone());
        clusters.push(plan);
    }

    let mut out = SchedulerOutput {
        clusters,
        kc,
        power,
        realized: Vec::new(),
    };
    out.realized = realized_rates(&out, pool)?;
    Ok(out)
}

/// Interference at `h` from every beam outside cluster `own`.
fn inter_cluster_power(h: &ComplexVec, clusters: &[ClusterPlan], own: usize) -> f64 {
    clusters
        .iter()
        .enumerate()
        .filter(|&(l, _)| l != own)
        .map(|(_, c)| {
            h.inner_unchecked(&c.w1_tilde).norm_sqr() + h.inner_unchecked(&c.w2_tilde).norm_sqr()
        })
        .sum()
}

/// Recomputes every scheduled user's rate from the actual channels and all
/// final beams. Strong users cancel their own cluster's weak signal; weak
/// users are limited by both their own SINR and decodability at the strong
/// user.
pub fn realized_rates(output: &SchedulerOutput, pool: &UserPool) -> Result<Vec<RealizedRate>> {
    let mut rates = Vec::with_capacity(2 * output.clusters.len());
    for (k, c) in output.clusters.iter().enumerate() {
        let s = pool.find(c.strong_id).ok_or(Error::InvalidArgument {
            name: "strong_id",
            value: c.strong_id as f64,
        })?;
        let h = &s.channel;
        let ici_s = inter_cluster_power(h, &output.clusters, k);
        let s1 = h.inner(&c.w1_tilde)?.norm_sqr();
        rates.push(RealizedRate {
            user_id: s.id,
            cluster: k,
            role: Role::Strong,
            rate: rate_from_sinr(s1 / (ici_s + s.eps_sq)),
        });

        let Some(weak) = &c.weak else { continue };
        let u = pool.find(weak.id).ok_or(Error::InvalidArgument {
            name: "weak_id",
            value: weak.id as f64,
        })?;
        let g = &u.channel;
        let ici_u = inter_cluster_power(g, &output.clusters, k);
        let r1 = h.inner(&c.w2_tilde)?.norm_sqr();
        let s2 = g.inner(&c.w2_tilde)?.norm_sqr();
        let r2 = g.inner(&c.w1_tilde)?.norm_sqr();
        let sic = r1 / (s1 + ici_s + s.eps_sq);
        let own = s2 / (r2 + ici_u + u.eps_sq);
        rates.push(RealizedRate {
            user_id: u.id,
            cluster: k,
            role: Role::Weak,
            rate: rate_from_sinr(sic.min(own)),
        });
    }
    Ok(rates)
}

/// Sum rates of the conventional scheme, which serves the strong and weak
/// groups in two separate intervals with SUS and ZF beams.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BaselineRates {
    /// Sum rate of the strong-group interval.
    pub strong_sum: f64,
    /// Sum rate of the weak-group interval.
    pub weak_sum: f64,
    /// Average of the two interval sum rates.
    pub combined: f64,
}

/// SUS selection followed by ZF beams with equal power per user, applied to
/// one group. Returns the interval's sum rate.
pub fn sus_zf_group(group: &[User], nt: usize, total_power: f64, cfg: &SusConfig) -> Result<f64> {
    check_total_power(total_power)?;
    if group.is_empty() {
        return Err(Error::EmptyPool);
    }
    let sus_cfg = SusConfig {
        target_count: cfg.target_count.min(nt),
        ..*cfg
    };
    let channels: Vec<ComplexVec> = group.iter().map(|u| u.channel.clone()).collect();
    let selected = sus_select(&channels, &sus_cfg)?;
    if selected.is_empty() {
        return Err(Error::EmptyPool);
    }
    let p = total_power / selected.len() as f64;
    let mut beams = Vec::with_capacity(selected.len());
    for (k, &i) in selected.iter().enumerate() {
        let others: Vec<&ComplexVec> = selected
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != k)
            .map(|(_, &j)| &channels[j])
            .collect();
        let basis = complement_basis(&others)?;
        let w = project_complement(&channels[i], &basis)?
            .normalized()
            .ok_or(Error::ZeroNorm)?;
        beams.push(w.scale_real(p.sqrt()));
    }
    let mut sum = 0.0;
    for (k, &i) in selected.iter().enumerate() {
        let h = &channels[i];
        let signal = h.inner_unchecked(&beams[k]).norm_sqr();
        let interference: f64 = beams
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != k)
            .map(|(_, w)| h.inner_unchecked(w).norm_sqr())
            .sum();
        sum += rate_from_sinr(signal / (interference + group[i].eps_sq));
    }
    Ok(sum)
}

/// Conventional SUS-ZF baseline over both groups.
pub fn baseline_sus_zf(
    pool: &UserPool,
    nt: usize,
    total_power: f64,
    cfg: &SusConfig,
) -> Result<BaselineRates> {
    check_nt(pool, nt)?;
    let strong_sum = sus_zf_group(&pool.strong, nt, total_power, cfg)?;
    let weak_sum = sus_zf_group(&pool.weak, nt, total_power, cfg)?;
    Ok(BaselineRates {
        strong_sum,
        weak_sum,
        combined: 0.5 * (strong_sum + weak_sum),
    })
}
