use thiserror::Error;

use crate::recognition::PatternKind;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("weight {weight} of vertex {vertex} exceeds {max}", max = crate::graph::MAX_WEIGHT)]
    WeightOutOfRange { vertex: usize, weight: u64 },

    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },

    /// The input does not belong to the graph class a solver requires.
    /// `witness` realizes the forbidden pattern as an induced subgraph.
    #[error("graph contains an induced {pattern} at {witness:?}")]
    ClassViolation { pattern: PatternKind, witness: Vec<usize> },

    #[error("instance has {n} vertices, exceeding the oracle cap of {cap}")]
    OracleCap { n: usize, cap: usize },

    #[error("graph is outside every supported class ({n} vertices exceeds oracle cap {cap})")]
    Unsupported {
        n: usize,
        cap: usize,
        witnesses: Vec<(PatternKind, Vec<usize>)>,
    },

    #[error("kept vertex set is not feasible: {0}")]
    Infeasible(&'static str),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("no {class} instance found within {attempts} attempts")]
    GenerationBudget { class: String, attempts: u64 },
}
