use std::path::PathBuf;

use thiserror::Error;

use crate::scale::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// `f` was evaluated outside `[0, 1]`.
    #[error("x = {0} is outside the unit interval")]
    Domain(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The scale breaks the `f(0) = 1`, `f(1) = 2`, strictly increasing contract.
    #[error("scale violates the generator contract: {}", join_violations(.0))]
    InvalidScale(Vec<Violation>),

    /// A voltage sample was NaN or infinite. `index` is set for block input.
    #[error("non-finite input voltage {value}{}", .index.map(|i| format!(" at sample {i}")).unwrap_or_default())]
    NonFinite { index: Option<usize>, value: f64 },

    #[error("reference voltage must be positive and finite, got {0}")]
    InvalidCalibration(f64),

    #[error("base frequency must be positive and finite, got {0}")]
    InvalidBaseFrequency(f64),

    #[error("invalid sweep: {0}")]
    InvalidSweep(String),

    #[error("invalid trace: {0}")]
    InvalidTrace(String),

    #[error("invalid render config: {0}")]
    InvalidRenderConfig(String),

    #[error("malformed scale descriptor: {0}")]
    DescriptorParse(String),

    #[error("malformed .scl data at line {line}: {message}")]
    SclParse { line: usize, message: String },

    #[error("wav: {0}")]
    Wav(#[from] hound::Error),

    #[error("{}: {source}", .path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

fn join_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

impl Error {
    /// True for errors caused by a scale or parameter failing its contract,
    /// as opposed to malformed input or I/O trouble.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::InvalidParameter(_) | Error::InvalidScale(_) | Error::Domain(_)
        )
    }
}
