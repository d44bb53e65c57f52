use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("braid index must be at least {min}, got {n}")]
    TooFewStrands { n: usize, min: usize },

    #[error("garside machinery supports at most {max} strands, got {n}")]
    TooManyStrands { n: usize, max: usize },

    #[error("generator {letter} is out of range for B_{n}")]
    GeneratorOutOfRange { letter: i32, n: usize },

    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("cannot parse {what}: {reason}")]
    Parse { what: &'static str, reason: String },

    #[error("{factor} uses generator {letter}, allowed range is {lo}..={hi}")]
    PresentationRange {
        factor: &'static str,
        letter: i32,
        lo: usize,
        hi: usize,
    },

    #[error("punctures {i}..{j} do not bound an essential curve in D_{n}")]
    InessentialCurve { n: usize, i: usize, j: usize },

    #[error("super summit set exceeded the cap of {cap} elements ({explored} explored)")]
    ResourceExhausted { cap: usize, explored: usize },

    #[error("entropy estimate did not converge after {iterations} iterations (residual {residual:e})")]
    NotConverged { iterations: usize, residual: f64 },

    #[error("invalid argument: {0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn parse(what: &'static str, reason: impl Into<String>) -> Self {
        Error::Parse {
            what,
            reason: reason.into(),
        }
    }

    /// True for failures caused by configured limits rather than by the input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::ResourceExhausted { .. })
    }
}
