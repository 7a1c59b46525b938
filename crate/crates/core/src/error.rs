// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Errors raised across the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("({0}, {1}) is not an edge of the graph")]
    NotAnEdge(usize, usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("calibration for qubit {qubit}: {reason}")]
    Calibration { qubit: usize, reason: String },

    #[error(
        "mitigation region of {size} qubits for {context} exceeds the limit of {limit}; \
         refine the partition into smaller cells"
    )]
    MitigationLimit { size: usize, limit: usize, context: String },

    #[error("{n} qubits exceeds the dense limit of {limit}")]
    DenseLimit { n: usize, limit: usize },

    #[error("no distribution for measurement setting {0}")]
    MissingDistribution(usize),

    #[error("no stabilizer expectation for vertex {0}")]
    MissingExpectation(usize),

    #[error("unknown preset {0:?}")]
    UnknownPreset(String),

    #[error("{context}: {source}")]
    Context {
        context: String,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Wraps the error with a description of what was being done.
    pub fn context(self, context: impl Into<String>) -> Self {
        Error::Context { context: context.into(), source: Box::new(self) }
    }

    /// Short machine-readable category, used in CLI error documents.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidGraph(_) => "invalid_graph",
            Error::InvalidVertex { .. } => "invalid_vertex",
            Error::NotAnEdge(..) => "not_an_edge",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::InvalidDistribution(_) => "invalid_distribution",
            Error::Calibration { .. } => "calibration",
            Error::MitigationLimit { .. } => "mitigation_limit",
            Error::DenseLimit { .. } => "dense_limit",
            Error::MissingDistribution(_) => "missing_distribution",
            Error::MissingExpectation(_) => "missing_expectation",
            Error::UnknownPreset(_) => "unknown_preset",
            Error::Context { source, .. } => source.kind(),
            Error::Io(_) => "io",
            Error::Json(_) => "json",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
