use thiserror::Error;

use crate::words_roots::Word;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed graph spec: {0}")]
    GraphSpec(String),
    #[error("family {family}{n} out of range (need n >= {min})")]
    FamilyOutOfRange { family: char, n: usize, min: usize },
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(u32, u32),
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("unknown vertex label {0}")]
    UnknownLabel(u32),
    #[error("malformed word: {0}")]
    WordSyntax(String),
    #[error("word {0} is not reduced")]
    NotReduced(Word),
    #[error("no braid move applies at position {pos} of {word}")]
    NoBraidMove { word: Word, pos: usize },
    #[error("root sequence is not realizable: {0}")]
    NotRealizable(String),
    #[error("cap exceeded: more than {limit} nodes visited")]
    CapExceeded { limit: usize },
    #[error("word {0} does not represent a maximally clustered element")]
    NotMaximallyClustered(Word),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("word {0} is not a braid cluster")]
    NotBraidCluster(Word),
    #[error("cluster graph validation failed for {cluster}: {reason}")]
    ClusterGraphInvalid { cluster: Word, reason: String },
    #[error("no normalized braid-cluster representative for {cluster} among {searched} reduced words")]
    NoNormalizedRepresentative { cluster: Word, searched: usize },
    #[error("word {0} is not a contracted reduced expression; run find_contracted_expression first")]
    NotContracted(Word),
    #[error("cluster index {j} out of range 1..={clusters}")]
    ClusterIndexOutOfRange { j: usize, clusters: usize },
    #[error("graph is outside the supported scope: {0}")]
    OutOfScope(String),
    #[error("graph is not MC-finite; pass an explicit override with a node cap")]
    NotMcFinite,
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}
