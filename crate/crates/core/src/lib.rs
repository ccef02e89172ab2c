//! Rate-region boundary beams and power split for a strong/weak user pair on
//! a multi-antenna downlink that decodes with SIC, plus a multi-cluster NOMA
//! scheduler that reuses the pair design per cluster.
//!
//! The crate is `no_std` and only needs `alloc`. Floating-point special
//! functions come from `libm` through `num-traits`.
//!
//! Module map:
//!
//! * [`linalg`]: complex vectors, Gram-Schmidt, projections, channel angle.
//! * [`two_user`]: the per-cluster design routine (fixed power and power
//!   allocated), case classification, and Pareto boundary sweeps.
//! * [`oracle`]: brute-force grid maximizer used to validate `two_user`.
//! * [`angle`]: closed-form performance formulas as a function of the
//!   channel angle.
//! * [`scheduler`]: SUS strong-user selection, ZF across clusters, weak-user
//!   pairing, realized-rate evaluation and the SUS-ZF baseline.

#![no_std]
// Negated float comparisons are used deliberately so NaN inputs are rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod angle;
mod error;
pub mod linalg;
pub mod oracle;
pub mod scheduler;
mod search;
pub mod two_user;

pub use error::{Error, Result};
pub use linalg::{ComplexVec, OrthonormalBasis, C64};
pub use two_user::{BeamSolution, CaseTag, DerivedParams, Region, TwoUserChannel};

/// Shannon rate `log2(1 + sinr)` in bits/s/Hz.
pub fn rate_from_sinr(sinr: f64) -> f64 {
    #[allow(unused_imports)]
    use num_traits::Float;
    (1.0 + sinr).log2()
}
