use crate::qtpoly::QtPoly;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("cell ({u},{v}) out of bounds for a {m}x{n} grid")]
    CellOutOfBounds { u: u32, v: u32, m: u32, n: u32 },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    /// A rank-order query that only makes sense on a modified diagram was
    /// asked of a coprime one (or vice versa).
    #[error("wrong diagram kind: {0}")]
    WrongDiagramKind(String),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("invalid window: {0}")]
    InvalidWindow(String),

    /// Exact division failed; in identity checks this signals a violated
    /// identity rather than a programming error.
    #[error("exact division by {var}^{k} failed at monomial q^{q}t^{t}")]
    ExactDivision { var: char, k: u32, q: u32, t: u32 },

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Something the underlying theory guarantees failed to hold; always a bug.
    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    /// The F-expansion is not symmetric the way a Schur conversion needs.
    #[error("coefficients of F{{1}} and F{{2}} differ by {difference}; expansion is not Schur-convertible")]
    NotSchurSymmetric { difference: QtPoly },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
