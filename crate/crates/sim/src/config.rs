//! Simulation parameters and their flat JSON form.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{SimError, SimResult};

/// How the conventional scheme splits power among its selected users.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaselinePowerMode {
    #[default]
    EqualSplit,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SimConfig {
    /// Transmit antennas; also the cluster count target.
    pub nt: usize,
    /// Total users, split evenly into strong and weak groups.
    pub k_users: usize,
    /// Total transmit power in dB.
    pub pt_db: f64,
    /// Normalized strong-user target SINR.
    pub gamma: f64,
    pub sigma_h1_sq: f64,
    pub sigma_h2_sq: f64,
    pub awgn_var: f64,
    pub trials: u64,
    pub seed: u64,
    /// SUS orthogonality threshold.
    pub delta: f64,
    pub baseline_power_mode: BaselinePowerMode,
}

impl Default for SimConfig {
    fn default() -> Self {
        Self {
            nt: 2,
            k_users: 40,
            pt_db: 10.0,
            gamma: 1.0,
            sigma_h1_sq: 1.0,
            sigma_h2_sq: 0.01,
            awgn_var: 1.0,
            trials: 200,
            seed: 1,
            delta: 0.3,
            baseline_power_mode: BaselinePowerMode::EqualSplit,
        }
    }
}

impl SimConfig {
    pub fn from_json_str(s: &str) -> SimResult<Self> {
        let cfg: Self = serde_json::from_str(s)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_json_file(path: &Path) -> SimResult<Self> {
        Self::from_json_str(&std::fs::read_to_string(path)?)
    }

    /// `P_T = 10^(pt_db/10)`.
    pub fn total_power(&self) -> f64 {
        10f64.powf(self.pt_db / 10.0)
    }

    pub fn users_per_group(&self) -> usize {
        self.k_users / 2
    }

    pub fn validate(&self) -> SimResult<()> {
        fn positive(field: &'static str, v: f64) -> SimResult<()> {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(SimError::config(
                    field,
                    format!("must be positive and finite, got {v}"),
                ))
            }
        }
        if self.nt == 0 {
            return Err(SimError::config("nt", "must be at least 1"));
        }
        if self.k_users < 2 || !self.k_users.is_multiple_of(2) {
            return Err(SimError::config(
                "k_users",
                format!("must be even and at least 2, got {}", self.k_users),
            ));
        }
        if self.trials == 0 {
            return Err(SimError::config("trials", "must be at least 1"));
        }
        if !self.pt_db.is_finite() {
            return Err(SimError::config("pt_db", "must be finite"));
        }
        if !(self.gamma >= 0.0 && self.gamma.is_finite()) {
            return Err(SimError::config(
                "gamma",
                format!("must be non-negative, got {}", self.gamma),
            ));
        }
        positive("sigma_h1_sq", self.sigma_h1_sq)?;
        positive("sigma_h2_sq", self.sigma_h2_sq)?;
        positive("awgn_var", self.awgn_var)?;
        if !(self.delta > 0.0 && self.delta <= 1.0) {
            return Err(SimError::config(
                "delta",
                format!("must lie in (0, 1], got {}", self.delta),
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_json_keeps_defaults() {
        let cfg = SimConfig::from_json_str(r#"{"nt": 4, "pt_db": 20}"#).unwrap();
        assert_eq!(cfg.nt, 4);
        assert_eq!(cfg.k_users, 40);
        assert!((cfg.total_power() - 100.0).abs() < 1e-12);
    }

    #[test]
    fn unknown_key_rejected() {
        assert!(SimConfig::from_json_str(r#"{"antennas": 4}"#).is_err());
    }

    #[test]
    fn odd_user_count_rejected() {
        let cfg = SimConfig {
            k_users: 41,
            ..SimConfig::default()
        };
        assert!(matches!(
            cfg.validate(),
            Err(SimError::Config {
                field: "k_users",
                ..
            })
        ));
    }

    #[test]
    fn power_mode_round_trips_as_snake_case() {
        let s = serde_json::to_string(&SimConfig::default()).unwrap();
        assert!(s.contains(r#""baseline_power_mode":"equal_split""#));
    }
}
