use std::path::PathBuf;

/// Errors produced by the closed-form evaluators, the oracles and the sweep runner.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParams { name: &'static str, reason: String },

    /// The requested time lies beyond the documented stability bound.
    #[error("t = {t} is outside the stable evaluation range (t <= {t_max} for gamma = {gamma})")]
    OverflowDomain { t: f64, t_max: f64, gamma: f64 },

    /// A radicand, discriminant or squared eigenvalue left its admissible domain.
    #[error("numerical domain violation in {context}: value {value:e}")]
    NumericalDomain { context: &'static str, value: f64 },

    #[error("invalid step size: {0}")]
    StepSize(String),

    #[error("moment integration diverged at t = {t}")]
    Divergence { t: f64 },

    #[error("quadrature did not converge within {max_subdivisions} subdivisions")]
    NonConvergence { max_subdivisions: usize },

    #[error("entanglement never vanishes on [0, {t_max}]")]
    NoDeath { t_max: f64 },

    #[error("entanglement revived at t = {revival} after dying at t = {death}")]
    UnexpectedRevival { death: f64, revival: f64 },

    #[error("regime `{0}` is not supported by this operation")]
    UnsupportedRegime(&'static str),

    #[error("config {path}:{line}: {reason}")]
    Config {
        path: PathBuf,
        line: usize,
        reason: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
