use thiserror::Error;

use crate::symfunc::Basis;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CsfError {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<u32>),
    #[error("size mismatch: |{left:?}| != |{right:?}|")]
    SizeMismatch { left: Vec<u32>, right: Vec<u32> },
    #[error("basis mismatch: {left} vs {right}")]
    BasisMismatch { left: Basis, right: Basis },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("term {partition:?} has size {size}, expected degree {degree}")]
    TermDegree { partition: Vec<u32>, size: usize, degree: usize },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("edge {0} is not in the graph")]
    EdgeNotFound(String),
    #[error("graph is not simple")]
    NotSimple,
    #[error("orientation does not match the graph: {0}")]
    InvalidOrientation(String),
    #[error("subset expansion refused: {edges} edges exceeds the limit of {limit}")]
    TooManyEdges { edges: usize, limit: usize },
    #[error("edge list is not a cycle: {0}")]
    NotACycle(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = CsfError> = std::result::Result<T, E>;
