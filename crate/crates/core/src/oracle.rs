//! Brute-force reference maximizer for the two-user design problem.
//!
//! Works directly on the raw objective
//!
//! ```text
//! γ₂ = min{ p₂‖h1‖²α₂² / (σ1²(1+γ₁*)),
//!           p₂‖h2‖²(√θα₂ + √(1−θ)√(1−α₂²))² / (p₁‖h2‖²α₁² + σ2²) }
//! ```
//!
//! over a `(p₁, α₂)` grid. The smallest feasible `α₁` at each `p₁` is found by
//! searching the strong-user constraint line inside the unit quarter disk, not
//! by the closed form used in [`crate::two_user`].

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::search::{bisect, golden_max};
use crate::two_user::{CaseTag, DerivedParams, TwoUserChannel};

/// Sample count along the constraint line when searching for the minimal
/// feasible `α₁`.
pub const ALPHA1_SAMPLES: usize = 1024;

/// Smallest grid size accepted by the oracle.
pub const MIN_GRID: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleResult {
    /// Best value found, including local refinement around the best cell.
    pub gamma2: f64,
    pub p1: f64,
    pub alpha2: f64,
    pub alpha1: f64,
    /// `(n_p1, n_alpha2)`; `n_p1 = 1` for the equal-split variant.
    pub grid_sizes: (usize, usize),
    /// Best value on the grid points alone. Ties go to the smallest
    /// `(p₁, α₂)`.
    pub grid_gamma2: f64,
}

/// Smallest `α₁ ≥ 0` such that some `β₁ ≥ 0` with `α₁² + β₁² ≤ 1` satisfies
/// `√θ α₁ + √(1−θ) β₁ = √g`. `None` if the line misses the quarter disk.
pub fn min_feasible_alpha1(theta: f64, g: f64) -> Option<f64> {
    if !(0.0..=1.0).contains(&theta) || !(g >= 0.0) {
        return None;
    }
    let st = theta.sqrt();
    let sc = (1.0 - theta).sqrt();
    let rhs = g.sqrt();
    if sc == 0.0 {
        // β₁ has no effect; α₁ is pinned by the constraint.
        return (rhs <= 1.0).then_some(rhs);
    }
    // Excess squared norm of the point on the line with first coordinate α.
    let excess = |alpha: f64| {
        let beta = (rhs - st * alpha) / sc;
        alpha * alpha + beta * beta - 1.0
    };
    if excess(0.0) <= 0.0 {
        return Some(0.0);
    }
    // β₁ ≥ 0 bounds α₁ from above.
    let alpha_max = if st > 0.0 { (rhs / st).min(1.0) } else { 0.0 };
    if alpha_max == 0.0 {
        return None;
    }

    let step = alpha_max / (ALPHA1_SAMPLES - 1) as f64;
    let first = (1..ALPHA1_SAMPLES).find(|&i| excess(step * i as f64) <= 0.0);
    let inside = match first {
        Some(i) => step * i as f64,
        None => {
            // The feasible piece can be shorter than one sample (tangent
            // line); look for it at the minimum of the excess.
            let (x, neg) = golden_max(|a| -excess(a), 0.0, alpha_max, 1e-15);
            if -neg > 1e-12 {
                return None;
            }
            if -neg > 0.0 {
                return Some(x);
            }
            x
        }
    };
    Some(bisect(excess, 0.0, inside, 1e-15).min(inside))
}

struct Objective {
    h1_sq: f64,
    h2_sq: f64,
    sigma1_sq: f64,
    sigma2_sq: f64,
    gamma1: f64,
    st: f64,
    sc: f64,
}

impl Objective {
    fn new(ch: &TwoUserChannel, params: &DerivedParams) -> Self {
        Self {
            h1_sq: ch.h1().norm_sqr(),
            h2_sq: ch.h2().norm_sqr(),
            sigma1_sq: ch.sigma1_sq(),
            sigma2_sq: ch.sigma2_sq(),
            gamma1: params.gamma1_star(),
            st: params.theta.sqrt(),
            sc: (1.0 - params.theta).sqrt(),
        }
    }

    fn eval(&self, p1: f64, p2: f64, alpha1: f64, alpha2: f64) -> f64 {
        let sic = p2 * self.h1_sq * alpha2 * alpha2 / (self.sigma1_sq * (1.0 + self.gamma1));
        let gain = self.st * alpha2 + self.sc * (1.0 - alpha2 * alpha2).max(0.0).sqrt();
        let own =
            p2 * self.h2_sq * gain * gain / (p1 * self.h2_sq * alpha1 * alpha1 + self.sigma2_sq);
        sic.min(own)
    }

    /// Grid maximum over `α₂` and its golden-section refinement.
    fn best_alpha2(&self, p1: f64, p2: f64, alpha1: f64, n: usize) -> ((f64, f64), (f64, f64)) {
        let step = 1.0 / (n - 1) as f64;
        let mut grid = (0.0, f64::NEG_INFINITY);
        let mut best_j = 0;
        for j in 0..n {
            let a2 = if j + 1 == n { 1.0 } else { step * j as f64 };
            let v = self.eval(p1, p2, alpha1, a2);
            if v > grid.1 {
                grid = (a2, v);
                best_j = j;
            }
        }
        let lo = step * best_j.saturating_sub(1) as f64;
        let hi = (step * (best_j + 1) as f64).min(1.0);
        let refined = golden_max(|a2| self.eval(p1, p2, alpha1, a2), lo, hi, 1e-13);
        (grid, if refined.1 > grid.1 { refined } else { grid })
    }
}

fn check_grid(name: &'static str, n: usize) -> Result<()> {
    if n < MIN_GRID {
        return Err(Error::InvalidArgument {
            name,
            value: n as f64,
        });
    }
    Ok(())
}

fn feasible_alpha1(params: &DerivedParams, p1: f64) -> Option<f64> {
    let g = if params.gamma == 0.0 {
        0.0
    } else if p1 > 0.0 {
        params.gamma / p1
    } else {
        return None;
    };
    // Grid points that land a hair below Γ by rounding are still feasible.
    min_feasible_alpha1(params.theta, g.min(1.0))
}

/// Exhaustive search over `n_p1` powers in `[Γ, P]` and `n_alpha2` values of
/// `α₂` in `[0, 1]`, followed by a local golden-section refinement around the
/// best cell.
pub fn brute_force_max(
    ch: &TwoUserChannel,
    params: &DerivedParams,
    n_p1: usize,
    n_alpha2: usize,
) -> Result<OracleResult> {
    check_grid("n_p1", n_p1)?;
    check_grid("n_alpha2", n_alpha2)?;
    let (gamma, power) = (params.gamma, params.power);
    if gamma > power {
        return Err(Error::Infeasible { gamma, power });
    }
    let obj = Objective::new(ch, params);
    let p1_at = |i: usize| {
        if i + 1 == n_p1 {
            power
        } else {
            gamma + (power - gamma) * i as f64 / (n_p1 - 1) as f64
        }
    };

    let mut grid_best = OracleResult {
        gamma2: f64::NEG_INFINITY,
        p1: gamma,
        alpha2: 0.0,
        alpha1: 0.0,
        grid_sizes: (n_p1, n_alpha2),
        grid_gamma2: f64::NEG_INFINITY,
    };
    let mut best_i = 0;
    let mut refined_best = (f64::NEG_INFINITY, 0.0, 0.0, 0.0);
    for i in 0..n_p1 {
        let p1 = p1_at(i);
        let Some(alpha1) = feasible_alpha1(params, p1) else {
            continue;
        };
        let (grid, refined) = obj.best_alpha2(p1, power - p1, alpha1, n_alpha2);
        if grid.1 > grid_best.grid_gamma2 {
            grid_best.grid_gamma2 = grid.1;
            grid_best.p1 = p1;
            grid_best.alpha2 = grid.0;
            grid_best.alpha1 = alpha1;
            best_i = i;
        }
        if refined.1 > refined_best.0 {
            refined_best = (refined.1, p1, refined.0, alpha1);
        }
    }
    if !grid_best.grid_gamma2.is_finite() {
        return Err(Error::Infeasible { gamma, power });
    }

    // Refine p₁ between the neighbours of the best grid row.
    let row = |p1: f64| match feasible_alpha1(params, p1) {
        Some(alpha1) => obj.best_alpha2(p1, power - p1, alpha1, n_alpha2).1 .1,
        None => f64::NEG_INFINITY,
    };
    let lo = p1_at(best_i.saturating_sub(1));
    let hi = p1_at((best_i + 1).min(n_p1 - 1));
    let (p1_star, v) = golden_max(row, lo, hi, 1e-12);
    if v > refined_best.0 {
        if let Some(alpha1) = feasible_alpha1(params, p1_star) {
            let (_, (a2, v2)) = obj.best_alpha2(p1_star, power - p1_star, alpha1, n_alpha2);
            refined_best = (v2, p1_star, a2, alpha1);
        }
    }

    let mut out = grid_best;
    out.gamma2 = grid_best.grid_gamma2;
    if refined_best.0 > out.gamma2 {
        out.gamma2 = refined_best.0;
        out.p1 = refined_best.1;
        out.alpha2 = refined_best.2;
        out.alpha1 = refined_best.3;
    }
    out.gamma2 = out.gamma2.max(0.0);
    Ok(out)
}

/// Grid search over `α₂` with the equal split `p₁ = p₂ = 1`.
pub fn brute_force_fixed(
    ch: &TwoUserChannel,
    params: &DerivedParams,
    n_alpha2: usize,
) -> Result<OracleResult> {
    check_grid("n_alpha2", n_alpha2)?;
    if params.gamma > 1.0 {
        return Err(Error::Infeasible {
            gamma: params.gamma,
            power: 1.0,
        });
    }
    let obj = Objective::new(ch, params);
    let alpha1 = feasible_alpha1(params, 1.0).ok_or(Error::Infeasible {
        gamma: params.gamma,
        power: 1.0,
    })?;
    let (grid, refined) = obj.best_alpha2(1.0, 1.0, alpha1, n_alpha2);
    Ok(OracleResult {
        gamma2: refined.1.max(0.0),
        p1: 1.0,
        alpha2: refined.0,
        alpha1,
        grid_sizes: (1, n_alpha2),
        grid_gamma2: grid.1,
    })
}

/// Branch active at `(p₁, α₁)` and the signed gaps `a − b`, `a − d` of the
/// case coefficients, all evaluated with the supplied `α₁` rather than the
/// closed form.
pub fn branch_at(params: &DerivedParams, p1: f64, alpha1: f64) -> (CaseTag, f64, f64) {
    let s = (params.power - p1).max(0.0).sqrt();
    let den = params.lambda2 * p1 * alpha1 * alpha1 + 1.0;
    let a = s * (params.lambda1 / (1.0 + params.gamma1_star())).sqrt();
    let b = s * (params.lambda2 * params.theta / den).sqrt();
    let c = s * (params.lambda2 * (1.0 - params.theta) / den).sqrt();
    let d = if b > 0.0 {
        b + c * c / b
    } else {
        f64::INFINITY
    };
    let tag = if a <= b {
        CaseTag::Case1
    } else if a <= d {
        CaseTag::Case2
    } else {
        CaseTag::Case3
    };
    (tag, a - b, a - d)
}
