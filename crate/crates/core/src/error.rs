use thiserror::Error;

/// Errors raised by the algebra, form and verification routines.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("sign undefined for non-real scalar")]
    NonRealSign,
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("pole: factor {factor} vanishes at the evaluation point")]
    Pole { factor: String },
    #[error("unsupported: {0}")]
    Capability(String),
    #[error("elements belong to different root systems")]
    MismatchedSystems,
    #[error("parameters are not invariant under delta: k({0}) != k({1})")]
    ParameterAsymmetry(usize, usize),
    #[error("form undefined at non-regular parameter via this formula")]
    NonRegular,
    #[error("matrix is not hermitian")]
    NotHermitian,
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
