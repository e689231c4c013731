use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("partition has no blocks")]
    NoBlocks,
    #[error("partition contains an empty block")]
    EmptyBlock,
    #[error("vertex {0} lies in two blocks")]
    OverlappingBlocks(usize),
    #[error("vertex {0} lies in no block")]
    UncoveredVertex(usize),
    #[error("not a permutation of the vertex set")]
    BadPermutation,
    #[error("unsupported format version {0}")]
    Version(u32),
    #[error("malformed JSON: {0}")]
    Json(String),
}

/// A search gave up after expanding `nodes` nodes (or hitting its clock).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("search budget exceeded after {nodes} nodes")]
pub struct BudgetExceeded {
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransversalError {
    #[error("invalid constraint: {0}")]
    InvalidConstraint(String),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),
    #[error("invalid edge-delete plan: {0}")]
    InvalidPlan(String),
    #[error("edge {0}-{1} is not in the graph")]
    EdgeAbsent(usize, usize),
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("deletion would empty block {0}")]
    EmptiesBlock(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("cycle length {0} is not 1 mod 3 and at least 4")]
    BadLength(usize),
    #[error("{0} is not divisible by {1}")]
    NotDivisible(usize, usize),
    #[error("block-sum condition fails for n = {0}")]
    ConditionFails(usize),
    #[error("seed graph has an independent transversal")]
    SeedHasIT,
    #[error("construction invariant violated: {0}")]
    InvariantViolated(String),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertError {
    #[error("step {step}: base graph has an independent transversal")]
    BaseHasIT { step: usize },
    #[error("step {step}: base check exceeded its budget after {nodes} nodes")]
    BaseBudgetExceeded { step: usize, nodes: u64 },
    #[error("step {step}: {reason}")]
    StepPreconditionFailed { step: usize, reason: String },
    #[error("malformed certificate: {0}")]
    Malformed(String),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("invariant violated: {0}")]
    InvariantViolated(String),
    #[error("no component found")]
    NotFound,
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

impl From<TransversalError> for DecomposeError {
    fn from(e: TransversalError) -> Self {
        match e {
            TransversalError::Budget(b) => DecomposeError::Budget(b),
            TransversalError::InvalidConstraint(msg) => DecomposeError::InvariantViolated(msg),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ListError {
    #[error("not a list cover graph (conditions a={a}, b={b})")]
    NotCoverGraph { a: bool, b: bool },
    #[error("invalid transversal: {0}")]
    Invalid(String),
    #[error("malformed list instance: {0}")]
    Malformed(String),
}
