use thiserror::Error;

/// Errors raised by graph construction and the numerical routines built on it.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("edge {edge} references vertex {vertex}, but the graph has {n} vertices")]
    VertexOutOfRange { edge: usize, vertex: usize, n: usize },
    #[error("operation requires genus at least 1")]
    GenusZero,
    #[error("walk is not closed")]
    NotClosed,
    #[error("walk is not a valid sequence of consecutive oriented edges")]
    InvalidWalk,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("linear solve failed")]
    LinearSolveFailure,
    #[error("lattice generators are singular")]
    SingularLattice,
    #[error("integer overflow in exact arithmetic")]
    IntegerOverflow,
    #[error("eigensolver failed to converge")]
    EigenSolverFailure,
    #[error("graph is not {0}-regular")]
    NotRegular(usize),
    #[error("budget exceeded: {needed} > {budget}")]
    BudgetExceeded { needed: f64, budget: f64 },
    #[error("value {value} is not within rounding guard of an integer")]
    RoundingFailure { value: f64 },
    #[error("inversion produced a non-integer count {value}")]
    NonIntegerResult { value: f64 },
    #[error("tail bound {bound:e} exceeds tolerance")]
    TailBoundViolated { bound: f64 },
    #[error("not applicable: {0}")]
    NotApplicable(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
