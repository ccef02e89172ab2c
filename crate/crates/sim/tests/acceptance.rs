//! Acceptance criteria, one test per criterion. Each prints a single
//! `PASS`/`FAIL` line with the measured quantity before asserting.

use std::process::Command;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use noma_core::angle::{gamma2_fixed_vs_theta, gamma2_simple_power, matched_filter_limit};
use noma_core::oracle::{branch_at, brute_force_max, OracleResult};
use noma_core::scheduler::{schedule, SusConfig};
use noma_core::two_user::{
    case3_closed_form_p1, classify_case, derive_params, design, gamma2_case3, gamma2_of_p1,
    optimize_p1,
};
use noma_core::{CaseTag, ComplexVec, DerivedParams, Region, TwoUserChannel, C64};
use noma_sim::channels::{generate_channels, trial_rng};
use noma_sim::experiments::{gamma_sweep_rows, pareto_rows, random_instance, ScalarChannel};
use noma_sim::{run_monte_carlo, SimConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const C01_INSTANCES: usize = 200;
const C01_GRID: usize = 2048;
const C01_REL_TOL: f64 = 1e-3;
const C01_BUDGET: Duration = Duration::from_secs(120);
const C02_MIN_AGREEMENT: f64 = 0.99;
const C02_BOUNDARY_TOL: f64 = 1e-6;
const C03_P1_TOL: f64 = 1e-6;
const C04_BUDGET: Duration = Duration::from_secs(5);
const C05_REL_TOL: f64 = 1e-9;
const C06_REL_GAP: f64 = 0.02;
const C07_P1_FRACTION: f64 = 1e-2;
const C07_ANGLE_TOL: f64 = 1e-3;
const C08_GRID: usize = 10_000;
const C08_REL_TOL: f64 = 1e-10;
const C09_ICI_RATIO: f64 = 1e-9;
const C09_RATE_REL_TOL: f64 = 1e-6;
const C10_BUDGET: Duration = Duration::from_secs(120);

fn report(id: &str, ok: bool, detail: String) {
    println!("{} {id}: {detail}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "{id}: {detail}");
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-12)
}

fn random_unit(rng: &mut ChaCha8Rng, n: usize) -> ComplexVec {
    loop {
        let v: Vec<C64> = (0..n)
            .map(|_| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect();
        if let Some(u) = ComplexVec::new(v).unwrap().normalized() {
            if u.iter().any(|z| z.norm() > 0.1) {
                return u;
            }
        }
    }
}

/// Complex channels in `C³` realizing the scalar instance, with random
/// orientation, relative phase and noise powers.
fn realize(rng: &mut ChaCha8Rng, sc: &ScalarChannel) -> TwoUserChannel {
    let u = random_unit(rng, 3);
    let v = loop {
        let w = random_unit(rng, 3);
        let r = w.sub(&u.scale(u.inner(&w).unwrap())).unwrap();
        if r.norm() > 0.1 {
            break r.normalized().unwrap();
        }
    };
    let (s1, s2) = (rng.random_range(0.2..5.0), rng.random_range(0.2..5.0));
    let phase = C64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU));
    let h1 = u.scale_real((sc.lambda1 * s1).sqrt());
    let h2 = u
        .scale(phase * sc.theta.sqrt())
        .add(&v.scale_real((1.0 - sc.theta).sqrt()))
        .unwrap()
        .scale_real((sc.lambda2 * s2).sqrt());
    TwoUserChannel::new(h1, h2, s1, s2, sc.power).unwrap()
}

struct Instance {
    params: DerivedParams,
    design_gamma2: f64,
    oracle: OracleResult,
}

struct OracleRun {
    instances: Vec<Instance>,
    elapsed: Duration,
}

/// The 200 oracle comparisons shared by the first three criteria.
fn oracle_run() -> &'static OracleRun {
    static RUN: OnceLock<OracleRun> = OnceLock::new();
    RUN.get_or_init(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let start = Instant::now();
        let instances = (0..C01_INSTANCES)
            .map(|_| {
                let (sc, gamma) = random_instance(&mut rng);
                let ch = realize(&mut rng, &sc);
                let params = derive_params(&ch, gamma).unwrap();
                let design_gamma2 = optimize_p1(&ch, &params).unwrap().gamma2_star;
                let oracle = brute_force_max(&ch, &params, C01_GRID, C01_GRID).unwrap();
                Instance {
                    params,
                    design_gamma2,
                    oracle,
                }
            })
            .collect();
        OracleRun {
            instances,
            elapsed: start.elapsed(),
        }
    })
}

#[test]
fn c01_oracle_equivalence() {
    let run = oracle_run();
    let worst = run
        .instances
        .iter()
        .map(|i| rel(i.design_gamma2, i.oracle.gamma2))
        .fold(0.0, f64::max);
    let ok = worst <= C01_REL_TOL && run.elapsed <= C01_BUDGET;
    report(
        "c01",
        ok,
        format!(
            "{} instances, worst rel err {worst:.3e} (tol {C01_REL_TOL:e}), {:.1}s",
            run.instances.len(),
            run.elapsed.as_secs_f64()
        ),
    );
}

#[test]
fn c02_classifier_matches_oracle_branch() {
    let run = oracle_run();
    let mut agree = 0;
    let mut off_boundary = 0;
    for inst in &run.instances {
        let (tag, a_minus_b, a_minus_d) =
            branch_at(&inst.params, inst.oracle.p1, inst.oracle.alpha1);
        let hit = matches!(
            (classify_case(&inst.params), tag),
            (Region::OptInP2, CaseTag::Case2) | (Region::OptInP3, CaseTag::Case3)
        );
        if hit {
            agree += 1;
        } else if a_minus_b.abs() > C02_BOUNDARY_TOL && a_minus_d.abs() > C02_BOUNDARY_TOL {
            off_boundary += 1;
        }
    }
    let frac = agree as f64 / run.instances.len() as f64;
    report(
        "c02",
        frac >= C02_MIN_AGREEMENT && off_boundary == 0,
        format!("agreement {frac:.3}, {off_boundary} disagreements away from a case boundary"),
    );
}

/// Dense grid plus golden-section refinement, kept separate from the
/// library's own search code.
fn numeric_argmax<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64) -> f64 {
    let n = 10_000;
    let at = |i: usize| lo + (hi - lo) * i as f64 / (n - 1) as f64;
    let best = (0..n)
        .max_by(|&a, &b| f(at(a)).total_cmp(&f(at(b))))
        .unwrap();
    let (mut a, mut b) = (at(best.saturating_sub(1)), at((best + 1).min(n - 1)));
    let r = (5f64.sqrt() - 1.0) / 2.0;
    while b - a > 1e-13 * hi.max(1.0) {
        let x1 = b - r * (b - a);
        let x2 = a + r * (b - a);
        if f(x1) >= f(x2) {
            b = x2;
        } else {
            a = x1;
        }
    }
    let mid = 0.5 * (a + b);
    [lo, hi, mid]
        .into_iter()
        .max_by(|x, y| f(*x).total_cmp(&f(*y)))
        .unwrap()
}

#[test]
fn c03_case3_closed_form() {
    let run = oracle_run();
    let mut checked = 0;
    let mut worst: f64 = 0.0;
    for inst in &run.instances {
        let p = &inst.params;
        if classify_case(p) != Region::OptInP3 {
            continue;
        }
        checked += 1;
        let closed = case3_closed_form_p1(p).unwrap();
        let numeric = numeric_argmax(|x| gamma2_case3(x, p).unwrap(), p.gamma, p.power);
        worst = worst.max((closed - numeric).abs());
    }
    report(
        "c03",
        checked > 0 && worst <= C03_P1_TOL,
        format!("{checked} branch-3 instances, worst |Δp₁| {worst:.3e}"),
    );
}

#[test]
fn c04_rate_region_boundary() {
    let start = Instant::now();
    let sc = ScalarChannel {
        lambda1: 20.0,
        lambda2: 3.0,
        theta: 0.5,
        power: 2.0,
    };
    let rows = pareto_rows(&sc, 101).unwrap();
    let elapsed = start.elapsed();
    let dominated = rows.iter().all(|r| r[2] >= r[1] - 1e-12);
    let strict = rows[1..rows.len() - 1]
        .iter()
        .filter(|r| r[2] > r[1] + 1e-9)
        .count();
    let non_increasing = |col: usize| rows.windows(2).all(|w| w[1][col] <= w[0][col] + 1e-12);
    let ok =
        dominated && strict > 0 && non_increasing(1) && non_increasing(2) && elapsed <= C04_BUDGET;
    report(
        "c04",
        ok,
        format!(
            "dominated={dominated}, {strict} strict interior points, monotone fixed={} power={}, {:.2}s",
            non_increasing(1),
            non_increasing(2),
            elapsed.as_secs_f64()
        ),
    );
}

const SWEEP_L1: f64 = 10.0;
const SWEEP_GAMMA: f64 = 2.0;
const SWEEP_P: f64 = 10.0;

fn theta_grid(n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| i as f64 / (n - 1) as f64)
}

#[test]
fn c05_simple_power_closed_form() {
    let mut worst: f64 = 0.0;
    for l2 in [10.0, 1.0, 0.1] {
        for theta in theta_grid(1000) {
            let closed = gamma2_simple_power(theta, SWEEP_L1, l2, SWEEP_GAMMA, SWEEP_P)
                .unwrap()
                .gamma2;
            let p = DerivedParams::from_scalars(SWEEP_L1, l2, theta, SWEEP_GAMMA, SWEEP_P).unwrap();
            let direct = gamma2_of_p1(SWEEP_GAMMA, &p).unwrap().0;
            worst = worst.max(rel(closed, direct));
        }
    }
    report(
        "c05",
        worst <= C05_REL_TOL,
        format!("worst rel err {worst:.3e}"),
    );
}

fn optimal_vs_theta(l2: f64, theta: f64) -> f64 {
    let ch = TwoUserChannel::synthetic(SWEEP_L1, l2, theta, SWEEP_P).unwrap();
    design(&ch, SWEEP_GAMMA).unwrap().gamma2_star
}

#[test]
fn c06a_simple_power_near_optimal_at_weak_channel() {
    let l2 = 0.1;
    let (mut worst, mut at) = (0.0f64, 0.0);
    for theta in theta_grid(1000) {
        let opt = optimal_vs_theta(l2, theta);
        let simple = gamma2_simple_power(theta, SWEEP_L1, l2, SWEEP_GAMMA, SWEEP_P)
            .unwrap()
            .gamma2;
        let gap = (opt - simple) / opt;
        if gap > worst {
            worst = gap;
            at = theta;
        }
    }
    report(
        "c06a",
        worst <= C06_REL_GAP,
        format!("largest relative gap {worst:.4} at θ={at:.3} (bound {C06_REL_GAP})"),
    );
}

#[test]
fn c06b_interior_angle_optimum() {
    let values: Vec<f64> = theta_grid(1000).map(|t| optimal_vs_theta(1.0, t)).collect();
    let best = (0..values.len())
        .max_by(|&a, &b| values[a].total_cmp(&values[b]))
        .unwrap();
    let ok = best > 0 && best < values.len() - 1;
    report(
        "c06b",
        ok,
        format!("argmax at θ={:.3}", best as f64 / 999.0),
    );
}

#[test]
fn c07_small_weak_quality_limit() {
    let pts = matched_filter_limit(10.0, 2.0, 10.0, 0.5, &[1e-2, 1e-3, 1e-4]).unwrap();
    let excess: Vec<f64> = pts.iter().map(|p| (p.p1_opt - 2.0).abs()).collect();
    let decreasing = excess.windows(2).all(|w| w[1] < w[0]);
    let last = pts.last().unwrap();
    let ok = decreasing
        && excess[2] <= C07_P1_FRACTION * 2.0
        && last.beam_angle_to_mf1 <= C07_ANGLE_TOL
        && last.beam_angle_to_mf2 <= C07_ANGLE_TOL;
    report(
        "c07",
        ok,
        format!(
            "|p₁−Γ| = {:.2e} / {:.2e} / {:.2e}, beam deviations {:.2e} / {:.2e} rad",
            excess[0], excess[1], excess[2], last.beam_angle_to_mf1, last.beam_angle_to_mf2
        ),
    );
}

#[test]
fn c08_equal_quality_angle_plateau() {
    let theta0 = 1.0 / 3.0;
    let step = 1.0 / (C08_GRID - 1) as f64;
    let values: Vec<(f64, f64)> = theta_grid(C08_GRID)
        .map(|t| (t, gamma2_fixed_vs_theta(t, 10.0, 10.0, 0.2).unwrap()))
        .collect();
    let top = values.iter().map(|v| v.1).fold(f64::NEG_INFINITY, f64::max);
    let on_top = |v: f64| v >= top * (1.0 - C08_REL_TOL);
    let plateau = values
        .iter()
        .filter(|v| v.0 >= theta0 + step)
        .all(|v| on_top(v.1));
    let below = values
        .iter()
        .filter(|v| v.0 < theta0 - step)
        .all(|v| !on_top(v.1));
    report(
        "c08",
        plateau && below,
        format!("max {top:.12}, plateau on [θ₀,1]={plateau}, below θ₀ clear={below}"),
    );
}

#[test]
fn c09_zero_forcing_isolates_strong_users() {
    let cfg = SimConfig {
        nt: 4,
        k_users: 40,
        ..SimConfig::default()
    };
    let sus = SusConfig::new(cfg.nt, cfg.delta).unwrap();
    let gamma = 1.0;
    let (mut worst_ici, mut worst_rate, mut single) = (0.0f64, 0.0f64, 0);
    for pool_id in 0..50 {
        let pool = generate_channels(&cfg, &mut trial_rng(900, pool_id)).unwrap();
        let out = schedule(&pool, cfg.nt, cfg.total_power(), gamma, &sus).unwrap();
        for (k, c) in out.clusters.iter().enumerate() {
            let h = &pool
                .strong()
                .iter()
                .find(|u| u.id == c.strong_id)
                .unwrap()
                .channel;
            let signal = h.inner(&c.w1_tilde).unwrap().norm_sqr();
            let ici: f64 = out
                .clusters
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != k)
                .map(|(_, o)| {
                    h.inner(&o.w1_tilde).unwrap().norm_sqr()
                        + h.inner(&o.w2_tilde).unwrap().norm_sqr()
                })
                .sum();
            worst_ici = worst_ici.max(ici / signal);
            let lambda1 = c.h1_eff.norm_sqr() / c.sigma1_sq;
            // A cluster left without a weak partner serves its strong user
            // with a matched filter at full cluster power instead.
            let sinr = if c.is_single_user() {
                single += 1;
                out.power * lambda1
            } else {
                gamma * lambda1
            };
            let realized = out
                .realized
                .iter()
                .find(|r| r.user_id == c.strong_id)
                .unwrap()
                .rate;
            worst_rate = worst_rate.max(rel(realized, (1.0 + sinr).log2()));
        }
    }
    report(
        "c09",
        worst_ici <= C09_ICI_RATIO && worst_rate <= C09_RATE_REL_TOL,
        format!("worst ICI/signal {worst_ici:.2e}, worst rate rel err {worst_rate:.2e}, {single} single-user clusters"),
    );
}

#[test]
fn c10_noma_beats_sus_zf_two_antennas() {
    let start = Instant::now();
    let base = SimConfig {
        nt: 2,
        k_users: 40,
        pt_db: 10.0,
        sigma_h1_sq: 1.0,
        sigma_h2_sq: 0.01,
        trials: 200,
        ..SimConfig::default()
    };
    // Largest Γ on a 0.25 grid up to the per-cluster power for which the
    // weak group does at least as well as under the baseline.
    let mut chosen = None;
    for i in 1..=20 {
        let gamma = 0.25 * i as f64;
        let m = run_monte_carlo(
            &SimConfig {
                gamma,
                ..base.clone()
            },
            false,
        )
        .unwrap()
        .mean;
        if m.noma_weak_rate >= m.baseline_weak_rate {
            chosen = Some((gamma, m));
        }
    }
    let elapsed = start.elapsed();
    let Some((gamma, m)) = chosen else {
        report(
            "c10",
            false,
            "no Γ gives the weak group the baseline rate".into(),
        );
        return;
    };
    let ok = m.noma_sum_rate > m.baseline_sum_rate
        && m.noma_strong_rate >= m.baseline_strong_rate
        && m.noma_weak_rate >= m.baseline_weak_rate
        && elapsed <= C10_BUDGET;
    report(
        "c10",
        ok,
        format!(
            "Γ={gamma}: sum {:.3} vs {:.3}, strong {:.3} vs {:.3}, weak {:.3} vs {:.3}, {:.1}s",
            m.noma_sum_rate,
            m.baseline_sum_rate,
            m.noma_strong_rate,
            m.baseline_strong_rate,
            m.noma_weak_rate,
            m.baseline_weak_rate,
            elapsed.as_secs_f64()
        ),
    );
}

/// Spearman rank correlation of `ys` against their index (no ties in the
/// index; ties in `ys` get average ranks).
fn spearman_vs_index(ys: &[f64]) -> f64 {
    let n = ys.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| ys[a].total_cmp(&ys[b]));
    let mut ranks = vec![0.0; n];
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && ys[order[j + 1]] == ys[order[i]] {
            j += 1;
        }
        for &o in &order[i..=j] {
            ranks[o] = 0.5 * (i + j) as f64;
        }
        i = j + 1;
    }
    let mean = (n - 1) as f64 / 2.0;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (x, r) in ranks.iter().enumerate() {
        let (dx, dy) = (x as f64 - mean, r - mean);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    sxy / (sxx * syy).sqrt()
}

#[test]
fn c11_target_trades_strong_for_weak_rate() {
    let cfg = SimConfig {
        nt: 4,
        k_users: 200,
        pt_db: 20.0,
        trials: 100,
        ..SimConfig::default()
    };
    let gammas = [1.0, 3.0, 5.0, 8.0, 11.0, 14.0, 17.0, 20.0];
    let rows = gamma_sweep_rows(&cfg, &gammas).unwrap();
    let strong: Vec<f64> = rows.iter().map(|r| r[1]).collect();
    let weak: Vec<f64> = rows.iter().map(|r| r[2]).collect();
    let rho_s = spearman_vs_index(&strong);
    let rho_w = spearman_vs_index(&weak);
    let ok = strong.windows(2).all(|w| w[1] >= w[0]) && weak.windows(2).all(|w| w[1] <= w[0]);
    report(
        "c11",
        ok,
        format!("Spearman strong {rho_s:.3}, weak {rho_w:.3}"),
    );
}

#[test]
fn c12_schedule_sim_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let status = Command::new(env!("CARGO_BIN_EXE_noma-sim"))
            .args(["schedule-sim", "--trials", "20", "--seed", "77", "--out"])
            .arg(&path)
            .status()
            .unwrap();
        assert!(status.success());
        std::fs::read(path).unwrap()
    };
    let (a, b) = (run("a.csv"), run("b.csv"));
    report(
        "c12",
        !a.is_empty() && a == b,
        format!("{} bytes, identical={}", a.len(), a == b),
    );
}
