use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("{op}: order {n} is not supported (maximum {max})")]
    UnsupportedOrder { op: &'static str, n: usize, max: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("eigensolver did not converge for eigenvalue {index} after {iterations} iterations")]
    NoConvergence { index: usize, iterations: usize },

    #[error("bound not applicable: {0}")]
    Inapplicable(&'static str),

    #[error("inconsistent spectrum: {0}")]
    InconsistentSpectrum(String),

    #[error("{op}: argument {x} outside domain {domain}")]
    Domain { op: &'static str, x: f64, domain: &'static str },

    #[error("line {line}: {source}")]
    Line { line: usize, source: Box<Error> },

    #[error("analysis of {graph6} failed: {source}")]
    Analysis { graph6: String, source: Box<Error> },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
