//! Monte Carlo harness for the MU-MISO NOMA scheduler: channel generation,
//! trial loops, parameter sweeps and CSV output.

pub mod channels;
pub mod config;
mod error;
pub mod experiments;
pub mod monte_carlo;
pub mod output;

pub use config::{BaselinePowerMode, SimConfig};
pub use error::{SimError, SimResult};
pub use monte_carlo::{run_monte_carlo, run_trial, MonteCarloRun, TrialRecord};
