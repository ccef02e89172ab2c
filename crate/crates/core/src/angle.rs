//! Weak-user SINR as a function of the channel angle `θ`.
//!
//! Covers the equal-split design (`p₁ = p₂ = 1`), the set of angles that
//! maximize it, the minimum-power allocation `p₁ = Γ` in closed form, and the
//! small-`λ₂` limit of the power-allocated design.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::beam_deviation;
use crate::search::{bisect, golden_max};
use crate::two_user::{design, gamma2_fixed, DerivedParams, TwoUserChannel};

/// Absolute tolerance for branch decisions on `θ`.
pub const THETA_TOL: f64 = 1e-12;

/// Grid used to cross-check the stationary-point search.
pub const THETA_GRID_POINTS: usize = 10_000;

fn check_unit(name: &'static str, value: f64) -> Result<()> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(Error::InvalidArgument { name, value })
    }
}

fn fixed_params(theta: f64, lambda1: f64, lambda2: f64, gamma: f64) -> Result<DerivedParams> {
    check_unit("theta", theta)?;
    check_unit("gamma", gamma)?;
    // The equal split spends p₁ + p₂ = 2.
    DerivedParams::from_scalars(lambda1, lambda2, theta, gamma, 2.0)
}

/// Weak-user SINR of the equal-split design at angle `θ`.
pub fn gamma2_fixed_vs_theta(theta: f64, lambda1: f64, lambda2: f64, gamma: f64) -> Result<f64> {
    Ok(gamma2_fixed(&fixed_params(theta, lambda1, lambda2, gamma)?)?.0)
}

/// Which case coefficient ordering holds at a given `θ` under the equal split.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ThetaRegion {
    /// `a ≤ b(θ)`.
    N1,
    /// `b(θ) < a ≤ b(θ) + c²(θ)/b(θ)`.
    N2,
    /// `a > b(θ) + c²(θ)/b(θ)`.
    N3,
}

pub fn classify_theta_region(
    theta: f64,
    lambda1: f64,
    lambda2: f64,
    gamma: f64,
) -> Result<ThetaRegion> {
    let params = fixed_params(theta, lambda1, lambda2, gamma)?;
    Ok(match gamma2_fixed(&params)?.1 {
        crate::two_user::CaseTag::Case1 => ThetaRegion::N1,
        crate::two_user::CaseTag::Case2 => ThetaRegion::N2,
        crate::two_user::CaseTag::Case3 => ThetaRegion::N3,
    })
}

/// How the maximizing angle set was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ThetaBranch {
    /// `Γ ∈ [Γ₁, Γ₂]`: a plateau where `a ≤ b(θ)`.
    InBand,
    /// Below the band with `θ_a ≤ 1 − Γ`: a plateau at `γ₂ = λ₂`.
    LowOutOfBand,
    /// Otherwise: a single stationary point found numerically.
    HighOutOfBand,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaRegionResult {
    /// `(Γ₁, Γ₂)`; `None` when no `Γ` admits a plateau.
    pub gamma_bounds: Option<(f64, f64)>,
    pub theta_opt_low: f64,
    pub theta_opt_high: f64,
    pub branch: ThetaBranch,
    pub z1: f64,
    pub z2: f64,
    pub theta0: f64,
    /// Set when a grid sweep found a better angle than the stationary-point
    /// search; the reported angle is then the grid one.
    pub multimodal: bool,
}

/// Range of `Γ` for which the plateau `a ≤ b(θ)` is nonempty.
pub fn gamma_band(lambda1: f64, lambda2: f64) -> Option<(f64, f64)> {
    let (m1, m2) = (1.0 / lambda1, 1.0 / lambda2);
    let disc = (1.0 + m1 + m2).powi(2) - 4.0 * m2 * (1.0 + m2);
    if disc < 0.0 {
        return None;
    }
    let mid = 0.5 * (1.0 + m2 - m1);
    let half = 0.5 * disc.sqrt();
    Some((mid - half, mid + half))
}

/// Angles maximizing the equal-split weak-user SINR.
pub fn optimal_theta_region(lambda1: f64, lambda2: f64, gamma: f64) -> Result<ThetaRegionResult> {
    check_unit("gamma", gamma)?;
    // Validates λ ordering and positivity.
    fixed_params(1.0, lambda1, lambda2, gamma)?;

    let (m1, m2) = (1.0 / lambda1, 1.0 / lambda2);
    let z1 = m1 + 1.0 - gamma;
    let z2 = m2 + 1.0 - gamma;
    let gg = gamma * (1.0 - gamma);
    let root = (4.0 * gg * (gg + z1 * z2 - z2 * z2)).max(0.0).sqrt();
    let den = z1 * z1 + 4.0 * gg;
    let hi = ((z1 * z2 + 2.0 * gg + root) / den).min(1.0);
    let lo_root = (z1 * z2 + 2.0 * gg - root) / den;
    let linear = lambda1 / (lambda2 * (1.0 + gamma * lambda1));
    let theta0 = if linear <= 1.0 - gamma + THETA_TOL {
        linear
    } else {
        lo_root
    };

    let bounds = gamma_band(lambda1, lambda2);
    let in_band = bounds.is_some_and(|(g1, g2)| g1 <= gamma && gamma <= g2);
    let mut out = ThetaRegionResult {
        gamma_bounds: bounds,
        theta_opt_low: theta0.clamp(0.0, 1.0),
        theta_opt_high: hi,
        branch: ThetaBranch::InBand,
        z1,
        z2,
        theta0,
        multimodal: false,
    };
    if in_band {
        return Ok(out);
    }

    let theta_i = 1.0 - gamma;
    if gamma <= (m2 - m1) / (1.0 + m2) {
        out.branch = ThetaBranch::LowOutOfBand;
        out.theta_opt_low = (lambda2 * (1.0 + gamma * lambda1) / lambda1).min(theta_i);
        out.theta_opt_high = theta_i;
        return Ok(out);
    }

    // γ₂ rises on [0, θ_I] and falls beyond θ_a, where a = d(θ).
    let unit_a = (lambda1 / (1.0 + gamma * lambda1)).sqrt();
    let unit_d = |theta: f64| {
        let alpha1 = crate::two_user::alpha1_star_fixed(theta, gamma).unwrap_or(0.0);
        (lambda2 / (theta * (lambda2 * alpha1 * alpha1 + 1.0))).sqrt()
    };
    let theta_a = if unit_d(1.0) >= unit_a {
        1.0
    } else {
        bisect(
            |t| unit_d(t) - unit_a,
            theta_i.max(f64::MIN_POSITIVE),
            1.0,
            1e-14,
        )
    };
    let g =
        |t: f64| gamma2_fixed_vs_theta(t.clamp(0.0, 1.0), lambda1, lambda2, gamma).unwrap_or(0.0);
    let (mut best_t, mut best_v) = golden_max(g, theta_i.min(theta_a), theta_a, 1e-10);

    let step = 1.0 / (THETA_GRID_POINTS - 1) as f64;
    for i in 0..THETA_GRID_POINTS {
        let t = (step * i as f64).min(1.0);
        let v = g(t);
        if v > best_v * (1.0 + 1e-9) {
            best_t = t;
            best_v = v;
            out.multimodal = true;
        }
    }
    out.branch = ThetaBranch::HighOutOfBand;
    out.theta_opt_low = best_t;
    out.theta_opt_high = best_t;
    Ok(out)
}

/// Which formula of the minimum-power closed form applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SimpleBranch {
    BelowTheta1,
    AboveTheta1,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimplePowerResult {
    pub gamma2: f64,
    pub theta1: f64,
    pub branch: SimpleBranch,
}

/// Weak-user SINR when the strong user gets exactly `p₁ = Γ` and the weak
/// user the remaining `P − Γ`.
pub fn gamma2_simple_power(
    theta: f64,
    lambda1: f64,
    lambda2: f64,
    gamma: f64,
    power: f64,
) -> Result<SimplePowerResult> {
    check_unit("theta", theta)?;
    DerivedParams::from_scalars(lambda1, lambda2, theta, gamma, power)?;
    if gamma <= 0.0 {
        return Err(Error::InvalidArgument {
            name: "gamma",
            value: gamma,
        });
    }
    let a = 1.0 / (lambda2 * gamma);
    let b = 1.0 + 1.0 / (lambda1 * gamma);
    let theta1 = 0.5 * (-a + (a * a + 4.0 * b).sqrt());
    let scale = (power - gamma) / gamma;
    if theta <= theta1 + THETA_TOL && theta < 1.0 {
        let gap = ((theta + a) / b).sqrt() - theta.sqrt();
        let gamma2 = scale / b / (1.0 + gap * gap / (1.0 - theta));
        Ok(SimplePowerResult {
            gamma2,
            theta1,
            branch: SimpleBranch::BelowTheta1,
        })
    } else {
        Ok(SimplePowerResult {
            gamma2: scale / (theta + a),
            theta1,
            branch: SimpleBranch::AboveTheta1,
        })
    }
}

/// One step of the small-`λ₂` sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitPoint {
    pub lambda2: f64,
    pub p1_opt: f64,
    pub gamma2: f64,
    /// Angle in radians between `w1` and `h1`.
    pub beam_angle_to_mf1: f64,
    /// Angle in radians between `w2` and `h2`.
    pub beam_angle_to_mf2: f64,
}

/// Runs the power-allocated design for each `λ₂` and reports how far the
/// optimum is from minimum strong-user power and matched-filter beams.
pub fn matched_filter_limit(
    lambda1: f64,
    gamma: f64,
    power: f64,
    theta: f64,
    lambda2_sequence: &[f64],
) -> Result<Vec<LimitPoint>> {
    if theta == 0.0 {
        return Err(Error::InvalidArgument {
            name: "theta",
            value: theta,
        });
    }
    if lambda2_sequence.windows(2).any(|w| !(w[1] < w[0])) {
        return Err(Error::InvalidArgument {
            name: "lambda2_sequence",
            value: f64::NAN,
        });
    }
    lambda2_sequence
        .iter()
        .map(|&lambda2| {
            let ch = TwoUserChannel::synthetic(lambda1, lambda2, theta, power)?;
            let sol = design(&ch, gamma)?;
            Ok(LimitPoint {
                lambda2,
                p1_opt: sol.p1,
                gamma2: sol.gamma2_star,
                beam_angle_to_mf1: beam_deviation(&sol.w1_scaled, ch.h1())?,
                beam_angle_to_mf2: beam_deviation(&sol.w2_scaled, ch.h2())?,
            })
        })
        .collect()
}
