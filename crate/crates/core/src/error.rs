use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid physics configuration: {0}")]
    Physics(String),

    #[error("invalid sampler configuration: {0}")]
    Sampler(String),

    #[error("invalid schedule: {0}")]
    Schedule(String),

    #[error("invalid integrator configuration: {0}")]
    Integrator(String),

    #[error("effective resolution time must be positive, got {0}")]
    NonPositiveTeff(f64),

    #[error("readout value is not finite: {0}")]
    NonFiniteReadout(f64),

    #[error("integration produced a non-finite state at step {step}")]
    Integration { step: usize },

    #[error("ensemble is empty")]
    EmptyEnsemble,

    #[error("ensemble weights sum to zero")]
    ZeroWeight,

    #[error("series of {samples} samples is too coarse for {t_bins} time bins (need at least {required})")]
    Resolution {
        samples: usize,
        t_bins: usize,
        required: usize,
    },

    #[error("density grids have different shapes")]
    GridMismatch,

    #[error("reports were produced with different physics configurations")]
    PhysicsMismatch,

    #[error("invalid configuration:\n  {}", .0.join("\n  "))]
    Config(Vec<String>),

    #[error("malformed curve dump line {line}: {reason}")]
    CurveDump { line: usize, reason: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
