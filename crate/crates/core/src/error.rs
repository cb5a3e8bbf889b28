use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("constant specification error (line {line}): {msg}")]
    ConstSpec { line: usize, msg: String },

    #[error("basis has {size} basic formulas, enumeration cap is {cap}")]
    ResourceCap { size: usize, cap: usize },

    #[error("basic formula `{0}` is not in the atom's basis")]
    BasisMismatch(String),

    #[error("vector is not a non-negative solution of the system: {0}")]
    NotASolution(String),

    #[error("model file error (line {line}): {msg}")]
    Model { line: usize, msg: String },

    /// A broken internal invariant. Always a defect.
    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
