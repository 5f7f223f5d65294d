use thiserror::Error;

use crate::vertex_set::VertexSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex count {0} exceeds the supported maximum of {max}", max = crate::MAX_VERTICES)]
    TooManyVertices(usize),

    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("empty edge or generator")]
    EmptyEdge,

    #[error("sets do not form an antichain: {0} is contained in {1}")]
    NotAntichain(VertexSet, VertexSet),

    #[error("ambient vertex counts differ ({0} vs {1})")]
    MismatchedAmbient(usize, usize),

    #[error("the zero ideal is not allowed here")]
    ZeroIdeal,

    #[error("the unit ideal is not allowed here")]
    UnitIdeal,

    #[error("edgeless clutter: {0} is undefined")]
    Edgeless(&'static str),

    #[error("expected a simple graph (every edge of size 2)")]
    NotAGraph,

    #[error("component index {index} outside 1..={count}")]
    ComponentOutOfRange { index: usize, count: usize },

    #[error("too many primary components ({0}) for split labels (max 64)")]
    TooManyComponents(usize),

    #[error("split classification failed for {support}: {labels} admissible labels")]
    SplitLabel { support: VertexSet, labels: usize },

    #[error("parameter {0} out of range")]
    InvalidParameter(String),

    #[error("{0} > {1} not supported by the brute-force oracle")]
    OracleTooLarge(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
