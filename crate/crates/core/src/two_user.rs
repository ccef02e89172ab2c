//! Pareto-optimal beam design and power allocation for one strong/weak pair.
//!
//! User 1 (strong) decodes and cancels user 2's signal before decoding its
//! own; user 2 (weak) treats user 1's signal as noise. For a target
//! normalized SINR `Γ = γ₁*/λ₁` of user 1 the routines below maximize user 2's
//! SINR over both beams and the power split `p₁ + p₂ = P`.
//!
//! Beams are expressed in the basis spanned by the two channels:
//!
//! ```text
//! w1 = α₁ Π_{h2} h1/‖·‖ + β₁ Π⊥_{h2} h1/‖·‖
//! w2 = α₂ Π_{h1} h2/‖·‖ + √(1-α₂²) Π⊥_{h1} h2/‖·‖
//! ```

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::{angle_theta, ComplexVec, C64};
use crate::search::grid_then_golden;

/// Grid size for the coarse pass of the 1-D power search.
pub const P1_GRID_POINTS: usize = 512;

/// Absolute tolerance in `p₁` for the golden-section refinement.
pub const P1_TOL: f64 = 1e-10;

/// Relative residual below which two channels are treated as aligned.
pub const ALIGNED_TOL: f64 = 1e-12;

/// Relative slack when checking that `p₁` lies in `[Γ, P]`.
const RANGE_SLACK: f64 = 1e-12;

/// Effective channels, noise-plus-interference powers and power budget of one
/// cluster.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoUserChannel {
    h1: ComplexVec,
    h2: ComplexVec,
    sigma1_sq: f64,
    sigma2_sq: f64,
    power: f64,
}

fn positive(name: &'static str, value: f64) -> Result<f64> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::InvalidArgument { name, value })
    }
}

impl TwoUserChannel {
    /// Validates dimensions, positivity and the NOMA ordering
    /// `‖h1‖²/σ1² ≥ ‖h2‖²/σ2²`.
    pub fn new(
        h1: ComplexVec,
        h2: ComplexVec,
        sigma1_sq: f64,
        sigma2_sq: f64,
        power: f64,
    ) -> Result<Self> {
        if h1.len() != h2.len() {
            return Err(Error::DimensionMismatch {
                expected: h1.len(),
                got: h2.len(),
            });
        }
        positive("sigma1_sq", sigma1_sq)?;
        positive("sigma2_sq", sigma2_sq)?;
        positive("power", power)?;
        if h1.norm_sqr() == 0.0 || h2.norm_sqr() == 0.0 {
            return Err(Error::ZeroNorm);
        }
        let lambda1 = h1.norm_sqr() / sigma1_sq;
        let lambda2 = h2.norm_sqr() / sigma2_sq;
        if !(lambda1 >= lambda2) {
            return Err(Error::OrderingViolated { lambda1, lambda2 });
        }
        Ok(Self {
            h1,
            h2,
            sigma1_sq,
            sigma2_sq,
            power,
        })
    }

    /// A two-antenna channel pair with unit noise that realizes the given
    /// channel qualities and angle exactly.
    pub fn synthetic(lambda1: f64, lambda2: f64, theta: f64, power: f64) -> Result<Self> {
        positive("lambda1", lambda1)?;
        positive("lambda2", lambda2)?;
        if !(0.0..=1.0).contains(&theta) {
            return Err(Error::InvalidArgument {
                name: "theta",
                value: theta,
            });
        }
        let s2 = lambda2.sqrt();
        let h1 = ComplexVec::from_real(&[lambda1.sqrt(), 0.0])?;
        let h2 = ComplexVec::from_real(&[s2 * theta.sqrt(), s2 * (1.0 - theta).sqrt()])?;
        Self::new(h1, h2, 1.0, 1.0, power)
    }

    pub fn h1(&self) -> &ComplexVec {
        &self.h1
    }

    pub fn h2(&self) -> &ComplexVec {
        &self.h2
    }

    pub fn sigma1_sq(&self) -> f64 {
        self.sigma1_sq
    }

    pub fn sigma2_sq(&self) -> f64 {
        self.sigma2_sq
    }

    pub fn power(&self) -> f64 {
        self.power
    }

    pub fn lambda1(&self) -> f64 {
        self.h1.norm_sqr() / self.sigma1_sq
    }

    pub fn lambda2(&self) -> f64 {
        self.h2.norm_sqr() / self.sigma2_sq
    }

    /// Same channels with a different power budget.
    pub fn with_power(&self, power: f64) -> Result<Self> {
        positive("power", power)?;
        Ok(Self {
            power,
            ..self.clone()
        })
    }

    /// Squared cosine of the channel angle, snapped to exactly 1 when the
    /// component of `h1` orthogonal to `h2` vanishes to [`ALIGNED_TOL`].
    pub fn theta(&self) -> f64 {
        let basis = Basis::new(&self.h1, &self.h2);
        if basis.aligned {
            1.0
        } else {
            // Both norms are nonzero by construction.
            angle_theta(&self.h1, &self.h2).unwrap_or(0.0)
        }
    }
}

/// Scalars that fully determine the design problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedParams {
    pub lambda1: f64,
    pub lambda2: f64,
    pub theta: f64,
    /// Normalized strong-user target `Γ = γ₁*/λ₁`, in `[0, P]`.
    pub gamma: f64,
    /// `θ⁻¹(λ₁⁻¹ + Γ) − λ₂⁻¹`; `+∞` when `θ = 0`.
    pub tau: f64,
    /// Cluster power budget `P`.
    pub power: f64,
}

impl DerivedParams {
    /// Builds the scalar description directly, without channel vectors.
    pub fn from_scalars(
        lambda1: f64,
        lambda2: f64,
        theta: f64,
        gamma: f64,
        power: f64,
    ) -> Result<Self> {
        positive("lambda1", lambda1)?;
        positive("lambda2", lambda2)?;
        positive("power", power)?;
        if !(0.0..=1.0).contains(&theta) {
            return Err(Error::InvalidArgument {
                name: "theta",
                value: theta,
            });
        }
        if !(lambda1 >= lambda2) {
            return Err(Error::OrderingViolated { lambda1, lambda2 });
        }
        if !(gamma >= 0.0) || !gamma.is_finite() {
            return Err(Error::InvalidArgument {
                name: "gamma",
                value: gamma,
            });
        }
        if gamma > power {
            return Err(Error::Infeasible { gamma, power });
        }
        let tau = if theta == 0.0 {
            f64::INFINITY
        } else {
            (1.0 / lambda1 + gamma) / theta - 1.0 / lambda2
        };
        Ok(Self {
            lambda1,
            lambda2,
            theta,
            gamma,
            tau,
            power,
        })
    }

    /// Strong-user target SINR `γ₁* = Γλ₁`.
    pub fn gamma1_star(&self) -> f64 {
        self.gamma * self.lambda1
    }

    /// Minimal `α₁` meeting the strong-user constraint at power `p₁`.
    pub fn alpha1_star(&self, p1: f64) -> Result<f64> {
        let p1 = self.check_p1(p1)?;
        Ok(alpha1_min(self.theta, ratio(self.gamma, p1)))
    }

    /// `β₁` on the constraint line for the minimal `α₁` at power `p₁`.
    pub fn beta1_star(&self, p1: f64) -> Result<f64> {
        let p1 = self.check_p1(p1)?;
        Ok(beta1_min(self.theta, ratio(self.gamma, p1)))
    }

    fn check_p1(&self, p1: f64) -> Result<f64> {
        let p1_min = self.gamma;
        if !p1.is_finite() || p1 < p1_min * (1.0 - RANGE_SLACK) {
            return Err(Error::PowerBelowMinimum { p1, p1_min });
        }
        if p1 > self.power * (1.0 + RANGE_SLACK) {
            return Err(Error::InvalidArgument {
                name: "p1",
                value: p1,
            });
        }
        Ok(p1.clamp(p1_min, self.power))
    }
}

/// `Γ/p₁`, defined as 0 when `Γ = 0` and clamped to `[0, 1]`.
fn ratio(gamma: f64, p1: f64) -> f64 {
    if gamma == 0.0 {
        0.0
    } else {
        (gamma / p1).clamp(0.0, 1.0)
    }
}

/// Minimal `α₁` for normalized target `g = Γ/p₁`.
fn alpha1_min(theta: f64, g: f64) -> f64 {
    if g <= 1.0 - theta {
        0.0
    } else {
        ((theta * g).sqrt() - ((1.0 - theta) * (1.0 - g)).sqrt()).clamp(0.0, 1.0)
    }
}

/// `β₁` matching [`alpha1_min`]; on the unit circle whenever `α₁ > 0`.
fn beta1_min(theta: f64, g: f64) -> f64 {
    if theta >= 1.0 {
        0.0
    } else if g <= 1.0 - theta {
        (g.sqrt() / (1.0 - theta).sqrt()).clamp(0.0, 1.0)
    } else {
        ((1.0 - theta).sqrt() * g.sqrt() + theta.sqrt() * (1.0 - g).sqrt()).clamp(0.0, 1.0)
    }
}

/// Strong-user minimal `α₁` under the equal split `p₁ = p₂ = 1`.
pub fn alpha1_star_fixed(theta: f64, gamma: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&theta) {
        return Err(Error::InvalidArgument {
            name: "theta",
            value: theta,
        });
    }
    if !(0.0..=1.0).contains(&gamma) {
        return Err(Error::InvalidArgument {
            name: "gamma",
            value: gamma,
        });
    }
    Ok(alpha1_min(theta, gamma))
}

/// Builds [`DerivedParams`] from a channel and a normalized target `Γ`.
pub fn derive_params(ch: &TwoUserChannel, gamma: f64) -> Result<DerivedParams> {
    DerivedParams::from_scalars(ch.lambda1(), ch.lambda2(), ch.theta(), gamma, ch.power)
}

/// Which of the three closed-form branches produced `α₂*` at a given `p₁`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// `a ≤ b`: `α₂ = 1`.
    Case1,
    /// `b < a ≤ b + c²/b`.
    Case2,
    /// `a > b + c²/b`: `α₂ = √θ`, weak user limited by its own SINR.
    Case3,
}

/// Region predicted to contain the optimal `p₁`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Region {
    OptInP2,
    OptInP3,
}

/// The coefficients `a, b, c` at a given `p₁` and `d = b + c²/b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CaseCoefficients {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    /// `+∞` when `b = 0`.
    pub d: f64,
}

/// Coefficients with the common `√p₂` factor removed. Case selection and
/// `α₂` depend only on these, so they stay well defined at `p₂ = 0`.
#[derive(Debug, Clone, Copy)]
struct UnitCoefficients {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl UnitCoefficients {
    fn new(params: &DerivedParams, alpha1: f64, p1: f64) -> Self {
        let den = params.lambda2 * p1 * alpha1 * alpha1 + 1.0;
        let a = (params.lambda1 / (1.0 + params.gamma1_star())).sqrt();
        let b = (params.lambda2 * params.theta / den).sqrt();
        let c = (params.lambda2 * (1.0 - params.theta) / den).sqrt();
        let d = if b > 0.0 {
            b + c * c / b
        } else {
            f64::INFINITY
        };
        Self { a, b, c, d }
    }

    /// `(γ₂ / p₂, case, α₂)`. Ties go to the lower-index case.
    fn solve(&self, theta: f64) -> (f64, CaseTag, f64) {
        let Self { a, b, c, d } = *self;
        if a <= b {
            (a * a, CaseTag::Case1, 1.0)
        } else if a <= d {
            let alpha2 = c / (c * c + (a - b) * (a - b)).sqrt();
            (a * a * alpha2 * alpha2, CaseTag::Case2, alpha2)
        } else {
            (b * b + c * c, CaseTag::Case3, theta.sqrt())
        }
    }
}

/// `a(p₁), b(p₁), c(p₁), d(p₁)` for `p₁ ∈ [Γ, P]`.
pub fn case_coeffs(p1: f64, params: &DerivedParams) -> Result<CaseCoefficients> {
    let alpha1 = params.alpha1_star(p1)?;
    let p1 = params.check_p1(p1)?;
    let u = UnitCoefficients::new(params, alpha1, p1);
    let s = (params.power - p1).sqrt();
    let (a, b, c) = (s * u.a, s * u.b, s * u.c);
    let d = if b > 0.0 {
        b + c * c / b
    } else {
        f64::INFINITY
    };
    Ok(CaseCoefficients { a, b, c, d })
}

/// Pointwise `(γ₂, case, α₂)` with `p₂` given separately so the equal-split
/// design can reuse it.
fn evaluate(params: &DerivedParams, p1: f64, p2: f64) -> (f64, CaseTag, f64) {
    let alpha1 = alpha1_min(params.theta, ratio(params.gamma, p1));
    let (unit_gamma, tag, alpha2) = UnitCoefficients::new(params, alpha1, p1).solve(params.theta);
    (p2 * unit_gamma, tag, alpha2)
}

/// Best weak-user SINR at a fixed `p₁ ∈ [Γ, P]`, together with the branch
/// that produced it.
pub fn gamma2_of_p1(p1: f64, params: &DerivedParams) -> Result<(f64, CaseTag)> {
    let p1 = params.check_p1(p1)?;
    let (g, tag, _) = evaluate(params, p1, params.power - p1);
    Ok((g, tag))
}

/// Weak-user SINR of the third branch, `(P − p₁)λ₂ / (λ₂p₁α₁*² + 1)`,
/// regardless of which branch is active at `p₁`.
pub fn gamma2_case3(p1: f64, params: &DerivedParams) -> Result<f64> {
    let alpha1 = params.alpha1_star(p1)?;
    let p1 = params.check_p1(p1)?;
    let den = params.lambda2 * p1 * alpha1 * alpha1 + 1.0;
    Ok((params.power - p1) * params.lambda2 / den)
}

/// Predicts whether the optimal `p₁` falls where branch 2 or branch 3 is
/// active.
pub fn classify_case(params: &DerivedParams) -> Region {
    let DerivedParams {
        lambda2,
        theta,
        gamma,
        tau,
        power,
        ..
    } = *params;
    if theta == 0.0 || theta * gamma < tau {
        return Region::OptInP2;
    }
    // Here θΓ ≥ τ. The power threshold diverges as τ → 0 or θ → 1.
    if tau <= 0.0 || theta >= 1.0 {
        return Region::OptInP3;
    }
    let q = (theta * gamma).sqrt();
    let st = tau.sqrt();
    let threshold = gamma + (q - st) * (q + 1.0 / (lambda2 * st)) / (1.0 - theta);
    if power >= threshold {
        Region::OptInP2
    } else {
        Region::OptInP3
    }
}

/// Closed-form maximizer of the branch-3 SINR over `p₁ ∈ [Γ, P]`.
///
/// Evaluated in a cancellation-free form: with `q = √(θΓ)`,
/// `R = (1−θ)(P−Γ)` and `ψ₁ = q² + R + λ₂⁻¹`, the optimum is
/// `Γ + s²/(1−θ)` where `s = 2Rq / (ψ₁ + √(ψ₁² − 4q²R))`.
pub fn case3_closed_form_p1(params: &DerivedParams) -> Result<f64> {
    let DerivedParams {
        lambda2,
        theta,
        gamma,
        power,
        ..
    } = *params;
    if theta <= 0.0 || theta >= 1.0 {
        return Err(Error::DegenerateClosedForm { theta });
    }
    let q2 = theta * gamma;
    let q = q2.sqrt();
    let r = (1.0 - theta) * (power - gamma);
    let psi1 = q2 + r + 1.0 / lambda2;
    let disc = (psi1 * psi1 - 4.0 * q2 * r).max(0.0);
    let s = 2.0 * r * q / (psi1 + disc.sqrt());
    Ok((gamma + s * s / (1.0 - theta)).clamp(gamma, power))
}

/// Designed beams and powers for one cluster.
#[derive(Debug, Clone, PartialEq)]
pub struct BeamSolution {
    pub alpha1: f64,
    pub beta1: f64,
    pub alpha2: f64,
    pub p1: f64,
    pub p2: f64,
    /// Branch active at the chosen `p₁`.
    pub case_tag: CaseTag,
    /// Branch predicted by [`classify_case`] (power-allocated design only).
    pub region: Option<Region>,
    /// Strong-user target SINR `γ₁*`.
    pub gamma1_star: f64,
    pub gamma2_star: f64,
    /// `√p₁ w1`.
    pub w1_scaled: ComplexVec,
    /// `√p₂ w2`.
    pub w2_scaled: ComplexVec,
    /// Signal power at user 1, `p₁|h1ᴴw1|²`.
    pub s1: f64,
    /// Interference at user 1 from user 2's beam, `p₂|h1ᴴw2|²`.
    pub r1: f64,
    /// Signal power at user 2, `p₂|h2ᴴw2|²`.
    pub s2: f64,
    /// Interference at user 2 from user 1's beam, `p₁|h2ᴴw1|²`.
    pub r2: f64,
}

impl BeamSolution {
    /// Weak-user SINR recomputed from the beams,
    /// `min{r1/(s1+σ1²), s2/(r2+σ2²)}`.
    pub fn recomputed_gamma2(&self, ch: &TwoUserChannel) -> f64 {
        let sic = self.r1 / (self.s1 + ch.sigma1_sq);
        let own = self.s2 / (self.r2 + ch.sigma2_sq);
        sic.min(own)
    }

    /// Strong-user SINR recomputed from the beam, `s1/σ1²`.
    pub fn recomputed_gamma1(&self, ch: &TwoUserChannel) -> f64 {
        self.s1 / ch.sigma1_sq
    }
}

/// Unit directions used by the beam parameterization.
struct Basis {
    /// `Π_{h2} h1` direction.
    w1_par: ComplexVec,
    /// `Π⊥_{h2} h1` direction, zero when aligned.
    w1_perp: ComplexVec,
    /// `Π_{h1} h2` direction.
    w2_par: ComplexVec,
    /// `Π⊥_{h1} h2` direction, zero when aligned.
    w2_perp: ComplexVec,
    aligned: bool,
}

impl Basis {
    fn new(h1: &ComplexVec, h2: &ComplexVec) -> Self {
        let e1 = h1.scale_real(1.0 / h1.norm());
        let e2 = h2.scale_real(1.0 / h2.norm());
        let rho = e2.inner_unchecked(&e1);
        let rho_abs = rho.norm();
        // With orthogonal channels the parallel components carry no weight
        // in w1 and point along h1 in w2.
        let phase = if rho_abs > 0.0 {
            rho / rho_abs
        } else {
            C64::new(1.0, 0.0)
        };
        let (w1_par, w2_par) = if rho_abs > 0.0 {
            (e2.scale(phase), e1.scale(phase.conj()))
        } else {
            (e2.clone(), e1.clone())
        };

        let r1 = e1.axpy_unchecked(-rho, &e2);
        let r2 = e2.axpy_unchecked(-rho.conj(), &e1);
        let aligned = r1.norm() < ALIGNED_TOL;
        let zero = ComplexVec::zeros(h1.len());
        let (w1_perp, w2_perp) = if aligned {
            (zero.clone(), zero)
        } else {
            (
                r1.normalized().unwrap_or_else(|| zero.clone()),
                r2.normalized().unwrap_or(zero),
            )
        };
        Self {
            w1_par,
            w1_perp,
            w2_par,
            w2_perp,
            aligned,
        }
    }
}

fn power_of(h: &ComplexVec, w: &ComplexVec) -> f64 {
    h.inner_unchecked(w).norm_sqr()
}

/// Assembles the beams for a chosen `p₁, p₂` and fills in the powers.
fn build_solution(
    ch: &TwoUserChannel,
    params: &DerivedParams,
    p1: f64,
    p2: f64,
    region: Option<Region>,
) -> BeamSolution {
    let g = ratio(params.gamma, p1);
    let alpha1 = alpha1_min(params.theta, g);
    let beta1 = beta1_min(params.theta, g);
    let (gamma2, case_tag, alpha2) = evaluate(params, p1, p2);

    let basis = Basis::new(&ch.h1, &ch.h2);
    let w1 = basis
        .w1_par
        .scale_real(alpha1)
        .axpy_unchecked(C64::new(beta1, 0.0), &basis.w1_perp);
    let w2_perp_weight = (1.0 - alpha2 * alpha2).max(0.0).sqrt();
    let w2 = basis
        .w2_par
        .scale_real(alpha2)
        .axpy_unchecked(C64::new(w2_perp_weight, 0.0), &basis.w2_perp);
    let w1_scaled = w1.scale_real(p1.sqrt());
    let w2_scaled = w2.scale_real(p2.sqrt());

    let s1 = power_of(&ch.h1, &w1_scaled);
    let r1 = power_of(&ch.h1, &w2_scaled);
    let s2 = power_of(&ch.h2, &w2_scaled);
    let r2 = power_of(&ch.h2, &w1_scaled);
    BeamSolution {
        alpha1,
        beta1,
        alpha2,
        p1,
        p2,
        case_tag,
        region,
        gamma1_star: params.gamma1_star(),
        gamma2_star: gamma2,
        w1_scaled,
        w2_scaled,
        s1,
        r1,
        s2,
        r2,
    }
}

/// Power-allocated Pareto-optimal design: maximizes the weak-user SINR over
/// `p₁ ∈ [Γ, P]` and reconstructs both beams.
///
/// The pointwise optimum is searched on a 512-point grid and refined by
/// golden-section search; when the optimum is predicted in branch 3 the
/// closed-form maximizer is tried as well.
pub fn optimize_p1(ch: &TwoUserChannel, params: &DerivedParams) -> Result<BeamSolution> {
    let (gamma, power) = (params.gamma, params.power);
    if gamma > power {
        return Err(Error::Infeasible { gamma, power });
    }
    let region = classify_case(params);
    let objective = |p1: f64| evaluate(params, p1, power - p1).0;

    let (mut p1, mut best) = grid_then_golden(objective, gamma, power, P1_GRID_POINTS, P1_TOL);
    if region == Region::OptInP3 {
        if let Ok(candidate) = case3_closed_form_p1(params) {
            let v = objective(candidate);
            if v > best {
                p1 = candidate;
                best = v;
            }
        }
    }
    debug_assert!(best >= 0.0);
    Ok(build_solution(ch, params, p1, power - p1, Some(region)))
}

/// Derives the parameters for target `Γ` and runs [`optimize_p1`].
pub fn design(ch: &TwoUserChannel, gamma: f64) -> Result<BeamSolution> {
    let params = derive_params(ch, gamma)?;
    optimize_p1(ch, &params)
}

/// Pareto-optimal beams under the equal split `p₁ = p₂ = 1`, independent of
/// the channel's own power budget. Requires `Γ ≤ 1`.
pub fn fixed_power_design(ch: &TwoUserChannel, params: &DerivedParams) -> Result<BeamSolution> {
    if params.gamma > 1.0 {
        return Err(Error::Infeasible {
            gamma: params.gamma,
            power: 1.0,
        });
    }
    Ok(build_solution(ch, params, 1.0, 1.0, None))
}

/// Weak-user SINR of the equal-split design without building beams.
pub fn gamma2_fixed(params: &DerivedParams) -> Result<(f64, CaseTag)> {
    if params.gamma > 1.0 {
        return Err(Error::Infeasible {
            gamma: params.gamma,
            power: 1.0,
        });
    }
    let (g, tag, _) = evaluate(params, 1.0, 1.0);
    Ok((g, tag))
}

/// One boundary point `(log2(1+γ₁*), log2(1+γ₂*))` at target `Γ`.
///
/// With `fixed_power` the equal-split design is used and `Γ` must lie in
/// `[0, 1]`; otherwise `Γ ∈ [0, P]`.
pub fn boundary_point(ch: &TwoUserChannel, gamma: f64, fixed_power: bool) -> Result<(f64, f64)> {
    let gamma2 = if fixed_power {
        let params = DerivedParams::from_scalars(
            ch.lambda1(),
            ch.lambda2(),
            ch.theta(),
            gamma,
            ch.power.max(1.0),
        )?;
        gamma2_fixed(&params)?.0
    } else {
        design(ch, gamma)?.gamma2_star
    };
    let r1 = crate::rate_from_sinr(gamma * ch.lambda1());
    Ok((r1, crate::rate_from_sinr(gamma2)))
}

/// Sweeps `Γ` evenly over `[0, P]` (or `[0, 1]` for the equal split) and
/// returns the boundary points in order of increasing `R1`.
pub fn pareto_boundary(
    ch: &TwoUserChannel,
    n_points: usize,
    fixed_power: bool,
) -> Result<alloc::vec::Vec<(f64, f64)>> {
    if n_points < 2 {
        return Err(Error::InvalidArgument {
            name: "n_points",
            value: n_points as f64,
        });
    }
    let top = if fixed_power { 1.0 } else { ch.power };
    (0..n_points)
        .map(|i| {
            let gamma = if i + 1 == n_points {
                top
            } else {
                top * i as f64 / (n_points - 1) as f64
            };
            boundary_point(ch, gamma, fixed_power)
        })
        .collect()
}
