use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{name} = {value} is outside its domain ({expected})")]
    Domain {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("mode index {index} is invalid for a {modes}-mode system")]
    InvalidMode { index: usize, modes: usize },

    #[error("mode {0} is listed more than once")]
    DuplicateMode(usize),

    #[error("mode subsets overlap at mode {0}")]
    Overlap(usize),

    #[error("dimension mismatch: expected {expected} modes, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not symmetric (max asymmetry {0:e})")]
    NotSymmetric(f64),

    #[error("matrix is not symplectic (max deviation {0:e})")]
    NotSymplectic(f64),

    #[error("covariance matrix is unphysical (symplectic eigenvalue {0} < 1)")]
    Unphysical(f64),

    #[error("invalid channel: nu = {nu} < |1 - tau| with tau = {tau}")]
    InvalidChannel { tau: f64, nu: f64 },

    #[error("probabilities must be nonnegative and sum to 1 (sum = {sum})")]
    InvalidDistribution { sum: f64 },

    #[error("invalid convex weights: {0}")]
    InvalidWeights(&'static str),

    #[error("numeric failure: {0}")]
    Numeric(&'static str),
}

impl Error {
    pub(crate) fn domain(name: &'static str, value: f64, expected: &'static str) -> Self {
        Error::Domain { name, value, expected }
    }

    /// True for failures of the numerics rather than of the caller's input.
    pub fn is_numeric(&self) -> bool {
        matches!(self, Error::Numeric(_))
    }
}
