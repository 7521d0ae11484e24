//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("quiver is not square: {0}")]
    NotSquare(String),
    #[error("unknown arrow id {0}")]
    UnknownArrow(usize),
    #[error("unknown vertex id {0}")]
    UnknownVertex(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("relations are not homogeneous under the grading: {0}")]
    InhomogeneousRelations(String),
    #[error("arrows do not meet at a common vertex: {0}")]
    MismatchedVertex(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("corner rings differ, algebra is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("no cycle with the required monomial found: {0}")]
    NotFound(String),
    #[error("quotient not certified finite within the degree cap: {0}")]
    QuotientNotFiniteWithinCap(String),
    #[error("invalid (p, q): {0}")]
    InvalidPQ(String),
    #[error("tile sequence mismatch: {0}")]
    TileMismatch(String),
    #[error("no arrow class realizes the required monomial and displacement: {0}")]
    ClassUnresolvable(String),
    #[error("vertex {0} has no in-arrows or no out-arrows")]
    EmptyStar(usize),
    #[error("representation dimension exceeds the cap: {0}")]
    DimensionCap(String),
    #[error("relations do not vanish on the representation: {0}")]
    RelationViolation(String),
    #[error("moment-map level set is empty: {0}")]
    EmptyLevelSet(String),
}
