use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed graph text. `line` is 1-based for edge lists; `offset` is
    /// the byte offset for graph6.
    #[error("parse error at {location}: {message}")]
    Parse { location: Location, message: String },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("graph has {n} vertices, exact oracle limit is {max_n}")]
    OracleLimit { n: usize, max_n: usize },

    /// An induced K_{1,3}: `center` followed by three pairwise non-adjacent leaves.
    #[error("claw found: center {}, leaves {}, {}, {}", .0[0], .0[1], .0[2], .0[3])]
    Claw([usize; 4]),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("json: {0}")]
    Json(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Line(usize),
    Offset(usize),
}

impl std::fmt::Display for Location {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Location::Line(l) => write!(f, "line {l}"),
            Location::Offset(o) => write!(f, "offset {o}"),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
