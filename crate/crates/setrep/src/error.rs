use std::path::PathBuf;

/// Crate-wide error type. Most fallible operations distinguish bad
/// parameters (caller error), capacity guards on the exact solvers, and
/// invalid input artifacts (representations, covers, files).
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parameter error: {0}")]
    Parameter(String),

    /// The exact solvers refuse inputs beyond the size they are designed
    /// for rather than silently running forever.
    #[error("capacity error: {what} supports n <= {limit}, got n = {n}")]
    Capacity {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("invalid representation: {0}")]
    Representation(String),

    #[error("format error: {0}")]
    Format(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// An internal consistency check failed; this indicates a bug, not a
    /// caller error, but is surfaced as an error instead of a panic so the
    /// CLI can exit cleanly.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
