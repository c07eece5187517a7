use thiserror::Error;

/// Errors raised anywhere in the exact pipeline.
///
/// Identity mismatches are never errors: the verifier records them as data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("singular point: {0} vanishes")]
    SingularPoint(String),
    #[error("missing value for variable {0}")]
    MissingVariable(String),
    #[error("exact division left a nonzero remainder")]
    NotDivisible,
    #[error("{what} = {value} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("Young diagram violates its box: {0}")]
    BoxViolation(String),
    #[error("positions are not strictly increasing: {0:?}")]
    NotStrictlyIncreasing(Vec<usize>),
    #[error("no admissible sample point after {0} attempts")]
    SamplingExhausted(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn cap_check(what: &'static str, value: usize, cap: usize) -> Result<()> {
    if value > cap {
        Err(Error::CapExceeded { what, value, cap })
    } else {
        Ok(())
    }
}
