use thiserror::Error;

/// Errors produced by the surreal, polynomial and nimber operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid cut: left option {left} is not below right option {right}")]
    InvalidCut { left: String, right: String },

    #[error("{option} is not a strict prefix of {value}")]
    NotAnOption { option: String, value: String },

    #[error("representation does not denote {expected}: its simplest element is {actual}")]
    NotARepresentation { expected: String, actual: String },

    #[error("genetic evaluation at ({args}) produced a left value {left} that is not below right value {right}")]
    EmptyCutViolation {
        args: String,
        left: String,
        right: String,
    },

    #[error("option function requested f({requested}) which is not an option tuple of ({args})")]
    IllFoundedRecursion { args: String, requested: String },

    #[error("memo table exceeded its cap of {cap} entries")]
    MemoCapExceeded { cap: usize },

    #[error("unknown builtin definition `{0}`")]
    UnknownBuiltin(String),

    #[error("arity mismatch: expected {expected} arguments, got {actual}")]
    ArityMismatch { expected: usize, actual: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error("negative radicand {0}")]
    NegativeRadicand(String),

    #[error("no root in the given interval")]
    NoRoot,

    #[error("interval contains {0} roots, expected exactly one")]
    NotIsolated(usize),

    #[error("polynomial option needs the {0} endpoint, which is absent")]
    SideRequired(&'static str),

    #[error("constant polynomial where a nonconstant one is required")]
    ConstantPolynomial,

    #[error("cut became inconsistent during root construction: {0}")]
    InconsistentCut(String),

    #[error("no candidate found")]
    NotFound,

    #[error("closure escaped the cap {cap}: {value} is out of range")]
    CapTooSmall { cap: u128, value: u128 },

    #[error("nimber overflow")]
    NimberOverflow,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
