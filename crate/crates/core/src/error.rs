use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be positive and weakly decreasing: {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("inner shape {inner:?} is not contained in outer shape {outer:?}")]
    NotNested { outer: Vec<usize>, inner: Vec<usize> },
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("bead count {beads} is not a multiple of {r} that holds {parts} parts")]
    BadBeadCount { beads: usize, r: usize, parts: usize },
    #[error("runner count must be positive")]
    ZeroRunners,
    #[error("quotient component {runner} is not a skew shape")]
    NotComponentwiseSkew { runner: usize },
    #[error("outer and inner shapes have different {r}-cores")]
    CoreMismatch { r: usize },
    #[error("inner quotient components do not match the quotient of the base partition")]
    QuotientMismatch,
    #[error("cannot move the bead at position {position} down one step")]
    IllegalMove { position: usize },
    #[error("shape is not a horizontal {r}-ribbon strip")]
    NotAStrip { r: usize },
    #[error("operator {op}_{k} is undefined on this word")]
    OperatorUndefined { op: &'static str, k: usize },
    #[error("content {0:?} is not of the form g.lambda for a partition lambda")]
    NotInDomain(Vec<i64>),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("residual after Kostka elimination is nonzero at {0:?}")]
    NotUnitriangularConsistent(Vec<usize>),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
