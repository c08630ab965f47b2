use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors shared by all analysis modules.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid problem configuration: {0}")]
    InvalidConfig(String),

    /// A count argument (m, d, z, m_max, ...) exceeds its admissible bound.
    #[error("{name} = {value} exceeds its bound {bound}")]
    CountOutOfRange {
        name: &'static str,
        value: u32,
        bound: u32,
    },

    #[error("{name} = {value} is not a probability in [0, 1]")]
    ProbabilityOutOfRange { name: &'static str, value: f64 },

    #[error("horizon h = {h} outside [0, {h_max}]; the worst-case analysis is not validated beyond h_max")]
    HorizonOutOfRange { h: f64, h_max: f64 },

    /// No Beta distribution has the requested mean/standard deviation pair.
    #[error("infeasible prior moments: need 0 < sigma^2 < t(1-t), got t = {t}, sigma = {sigma}")]
    InfeasibleMoments { t: f64, sigma: f64 },

    #[error("no feasible decision: {0}")]
    NoFeasibleDecision(String),

    /// An upper-prevision curve failed its non-decreasing check.
    #[error("prevision curve '{label}' decreases near h = {h}")]
    NotMonotone { label: String, h: f64 },

    #[error("counterexample id must be 1 or 2, got {0}")]
    UnknownCounterexample(u32),
}
