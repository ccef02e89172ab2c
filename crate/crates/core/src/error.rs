use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("vector must have at least one entry")]
    EmptyVector,

    #[error("non-finite entry in input")]
    NonFinite,

    #[error("zero-norm vector where a nonzero one is required")]
    ZeroNorm,

    #[error("invalid argument `{name}`: {value}")]
    InvalidArgument { name: &'static str, value: f64 },

    #[error("strong user must have the larger channel quality (lambda1 = {lambda1}, lambda2 = {lambda2})")]
    OrderingViolated { lambda1: f64, lambda2: f64 },

    #[error("infeasible target: Gamma = {gamma} exceeds available power {power}")]
    Infeasible { gamma: f64, power: f64 },

    #[error(
        "power p1 = {p1} is below the minimum {p1_min} needed to reach the strong-user target"
    )]
    PowerBelowMinimum { p1: f64, p1_min: f64 },

    #[error("closed form is degenerate at theta = {theta}; use the numeric maximizer")]
    DegenerateClosedForm { theta: f64 },

    #[error("empty user pool")]
    EmptyPool,

    #[error("weak pool has {weak} users but {clusters} clusters were selected")]
    WeakPoolTooSmall { weak: usize, clusters: usize },

    #[error("duplicate user id {0}")]
    DuplicateUser(usize),
}

impl Error {
    /// True for errors caused by an unreachable rate/power target rather than
    /// malformed input.
    pub fn is_infeasible(&self) -> bool {
        matches!(
            self,
            Error::Infeasible { .. } | Error::PowerBelowMinimum { .. }
        )
    }
}
