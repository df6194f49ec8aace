use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("matrix does not have full row rank")]
    RankDeficient,

    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    #[error("regularity conditions violated: {0}")]
    RegularityViolated(String),

    #[error("no binary point satisfies W·X = b")]
    XStarNotFound,

    #[error("decision list depth {depth} exceeds input arity {arity}")]
    DepthExceedsArity { depth: usize, arity: usize },

    #[error("constraint row {0} has all-zero weights")]
    ZeroRow(usize),

    #[error("anchor set is empty")]
    EmptyAnchorSet,

    #[error("input space of {bits} bits exceeds the cap of {cap}")]
    InputSpaceTooLarge { bits: usize, cap: usize },

    #[error("invalid circuit: {0}")]
    InvalidCircuit(String),

    #[error("invalid anchor set: {0}")]
    InvalidAnchorSet(String),
}
