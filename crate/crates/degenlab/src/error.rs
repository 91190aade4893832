//! Error types shared across the crate.

use thiserror::Error;

use crate::graph::MinorOp;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {0} out of range 1..=64")]
    OrderOutOfRange(usize),
    #[error("edge ({u},{v}) invalid for order {n}")]
    InvalidEdge { u: usize, v: usize, n: usize },
    #[error("duplicate edge ({u},{v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("adjacency row {0} has bits outside the vertex range")]
    InvalidRow(usize),
    #[error("loop at vertex {0}")]
    LoopAt(usize),
    #[error("adjacency not symmetric at ({u},{v})")]
    Asymmetric { u: usize, v: usize },
    #[error("invalid operand: {op} on graph of order {n}")]
    InvalidOperand { op: MinorOp, n: usize },
    #[error("cannot delete the last vertex")]
    LastVertex,
    #[error("order {n} exceeds the {what} cap of {cap}")]
    SizeLimit {
        what: &'static str,
        n: usize,
        cap: usize,
    },
}

/// Parse failure for the graph6 format, reported with the byte offset of the
/// offending input position.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("malformed graph6 at byte {offset}: {reason}")]
pub struct Graph6Error {
    pub offset: usize,
    pub reason: String,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("input is neither graph6 nor an edge list: {0}")]
    UnknownFormat(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DomainError {
    #[error("{0}")]
    Invalid(String),
    #[error("{r} is not a covering sum of order {n}")]
    NotACoveringSum { r: u64, n: u64 },
    #[error("sequence is not a permutation of the vertex set")]
    NotAPermutation,
}
