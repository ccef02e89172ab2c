use thiserror::Error;

pub type SimResult<T> = Result<T, SimError>;

#[derive(Debug, Error)]
pub enum SimError {
    #[error("invalid configuration: {field} {reason}")]
    Config { field: &'static str, reason: String },
    #[error(transparent)]
    Core(#[from] noma_core::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl SimError {
    pub(crate) fn config(field: &'static str, reason: impl Into<String>) -> Self {
        Self::Config {
            field,
            reason: reason.into(),
        }
    }

    /// Target SINR out of reach of the per-cluster power.
    pub fn is_infeasible(&self) -> bool {
        matches!(self, Self::Core(e) if e.is_infeasible())
    }
}
