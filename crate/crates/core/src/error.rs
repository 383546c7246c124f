use thiserror::Error;

use crate::rootsys::Kind;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown root system type `{0}`")]
    UnknownKind(String),
    #[error("invalid root system {kind}{rank}")]
    InvalidType { kind: Kind, rank: usize },
    #[error("node {node} out of range for rank {rank}")]
    NodeOutOfRange { node: usize, rank: usize },
    #[error("`{0}` is not a root of this system")]
    NotARoot(String),
    #[error("node {node} of {kind}{rank} is not cominuscule")]
    NotCominuscule { kind: Kind, rank: usize, node: usize },
    #[error("Δ(g_1) has {0} roots; at most 128 are supported")]
    TooLarge(usize),
    #[error("root set is not an inversion ideal: {0}")]
    NotAnIdeal(String),
    #[error("(a,J) = {0} is not realized by any Schubert class")]
    Unrealized(String),
    #[error("{0} is an endpoint class (point or whole space)")]
    Endpoint(String),
    #[error("{0} is not a reduced word of a minimal coset representative")]
    BadWord(String),
    #[error("malformed {what} literal `{text}`")]
    Malformed { what: &'static str, text: String },
    #[error("invalid partition {0}")]
    InvalidPartition(String),
    #[error("{0}")]
    Dictionary(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}
