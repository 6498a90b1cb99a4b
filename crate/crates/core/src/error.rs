//! Shared error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count must be at least {min}, got {got}")]
    VertexCount { min: usize, got: usize },

    #[error("at most 64 vertices/variables are supported, got {0}")]
    TooLarge(usize),

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge ({i}, {j}) is a loop")]
    LoopEdge { i: usize, j: usize },

    #[error("variable index {index} out of range 1..={n}")]
    VariableOutOfRange { index: usize, n: usize },

    #[error("the zero ideal has no Alexander dual")]
    DualOfZero,

    #[error("the unit ideal has no Alexander dual")]
    DualOfUnit,

    #[error("operation requires a nonzero ideal")]
    ZeroIdeal,

    #[error("operation requires a non-unit ideal")]
    UnitIdeal,

    #[error("characteristic {0} is neither 0 nor a prime below 2^31")]
    BadCharacteristic(u64),

    #[error("no Stanley-Reisner complex corresponds to the unit ideal")]
    UnitIdealComplex,

    #[error("skeleton dimension {i} out of range -1..={dim}")]
    SkeletonOutOfRange { i: isize, dim: isize },

    #[error("operation requires a complex with at least one face")]
    VoidComplex,

    #[error("Betti table is empty")]
    EmptyBettiTable,

    #[error("generator ordering is not a degree-nondecreasing permutation of the minimal generators")]
    BadGeneratorOrder,

    #[error("graph is not chordal")]
    NotChordal,

    #[error("operation requires a graph with at least one edge")]
    EdgelessGraph,

    #[error("classification routes disagree on {what}: {detail}")]
    RouteDisagreement { what: String, detail: String },

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("{0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
