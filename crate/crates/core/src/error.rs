use thiserror::Error;

use crate::Mode;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("tuple parameter k must be at least 1")]
    InvalidK,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("no {r}-regular graph on {n} vertices (need r < n and n*r even)")]
    InfeasibleRegular { n: usize, r: usize },

    #[error("pairing model produced no simple graph after {attempts} attempts")]
    PairingFailed { attempts: usize },

    #[error("no {k}-tuple {} dominating set exists: minimum degree {delta} is below {}", .mode.adjective(), .mode.required_degree(*.k))]
    NoDominatingSet { k: usize, delta: usize, mode: Mode },

    #[error("brute-force oracle is capped at {cap} vertices, graph has {n}")]
    OracleCap { n: usize, cap: usize },

    #[error("decomposition size {t} exceeds graph order {n}")]
    SizeExceedsOrder { t: usize, n: usize },

    #[error("vertex set over {found} vertices used with a graph on {expected} vertices")]
    UniverseMismatch { expected: usize, found: usize },

    #[error("vertex {vertex} appears in more than one class")]
    OverlappingClasses { vertex: usize },

    #[error("bound is vacuous: {n} vertices, but each class needs {class_size}")]
    VacuousBound { n: usize, class_size: usize },

    #[error("random family {0} needs a seed")]
    MissingSeed(String),

    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
