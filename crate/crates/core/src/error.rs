use alloc::string::String;

/// Every failure the engine can report.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(usize, usize),
    #[error("edge {0}-{1} is not in the graph")]
    MissingEdge(usize, usize),
    #[error("edge set is not a matching: vertex {0} is covered twice")]
    NotAMatching(usize),
    #[error("matching is not perfect")]
    NotPerfect,
    #[error("graph has {n} vertices, above the oracle cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("graph has {n} vertices, above the brute-force fallback cap of {cap}")]
    TooLargeForFallback { n: usize, cap: usize },
    #[error("label count {labels} does not match edge count {edges}")]
    LabelCount { labels: usize, edges: usize },

    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator is not a power of x")]
    NotLaurent,
    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,
    #[error("cannot parse polynomial: {0}")]
    PolyParse(String),

    #[error("graph is not planar")]
    NotPlanar,
    #[error("rotation system is not a planar embedding of the graph")]
    NotPlanarEmbedding,
    #[error("malformed rotation system: {0}")]
    MalformedRotation(String),
    #[error("matrix is not skew-symmetric at ({0}, {1})")]
    NotSkewSymmetric(usize, usize),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("matchgate input lacks p_S for S = {0:?}")]
    MissingPs(alloc::vec::Vec<usize>),
    #[error("gadget-augmented graph lost planarity: {0}")]
    EmbeddingBroken(String),
    #[error("boundary graphs overlap outside the common boundary at vertex {0}")]
    OverlapViolated(usize),
    #[error("labels disagree on shared edge {0}-{1}")]
    LabelMismatch(usize, usize),
    #[error("enumeration exceeded the work limit of {0} candidates")]
    WorkLimitExceeded(u64),

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("decomposition failed validation: {0}")]
    ValidationFailed(String),
    #[error("graph minus the apex set is not planar")]
    NotPlanarAfterApex,
    #[error("glue set {0:?} cannot serve as a clique-sum adhesion")]
    GlueNotClique(alloc::vec::Vec<usize>),
    #[error("invalid disk drawing: {0}")]
    InvalidDrawing(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
