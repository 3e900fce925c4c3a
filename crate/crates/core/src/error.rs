use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("duplicate edge {u} {v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
    #[error("vertex {vertex} is not in the allowed set")]
    NotInAllowedSet { vertex: usize },
    #[error("invalid generator parameters: {0}")]
    Generator(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("unknown pattern name `{0}`")]
    UnknownPattern(String),
    #[error("graph is not {0}-free")]
    NotFree(String),
    #[error("graph is disconnected")]
    Disconnected,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColouringError {
    #[error("colouring has {found} entries but the graph has {n} vertices")]
    LengthMismatch { found: usize, n: usize },
    #[error("vertex {0} is uncoloured")]
    NotTotal(usize),
    #[error("colouring uses only one colour")]
    Monochromatic,
    #[error("vertex {vertex} has {count} neighbours of the opposite colour")]
    Invalid { vertex: usize, count: usize },
    #[error("propagation needs at least one red and one blue vertex")]
    MissingColour,
    #[error("too many uncoloured vertices ({count} > {cap})")]
    TooManyUncoloured { count: usize, cap: usize },
    #[error("not a matching: edges share vertex {0}")]
    NotAMatching(usize),
    #[error("not a partition: {0}")]
    NotAPartition(String),
    #[error("edge {0} {1} is not in the graph")]
    NoSuchEdge(usize, usize),
    #[error("not an edge cut: edge {0} {1} crosses the sides but is not listed")]
    NotACut(usize, usize),
    #[error("edge {0} {1} is listed but does not cross the sides")]
    NotCrossing(usize, usize),
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompletionError {
    #[error("uncoloured vertices {0} and {1} are adjacent")]
    NotIndependent(usize, usize),
    #[error("set of size {size} exceeds the cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("set does not dominate vertex {0}")]
    NotDominating(usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Colouring(#[from] ColouringError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph has {n} vertices, above the cap {cap} for {solver}")]
    SizeCap { solver: &'static str, n: usize, cap: usize },
    #[error("{solver} precondition failed: {reason}")]
    Precondition { solver: &'static str, reason: String },
    #[error("no applicable solver within caps")]
    NoApplicableSolver,
    #[error("{solver} made no progress: {detail}")]
    Stalled { solver: &'static str, detail: String },
    #[error("graph has no vertices")]
    Empty,
    #[error(transparent)]
    Completion(#[from] CompletionError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HardnessError {
    #[error("vertex cover instance has no edges")]
    NoEdges,
    #[error("budget {k} exceeds |V(H)| = {n}")]
    BudgetOutOfRange { k: usize, n: usize },
    #[error("gadget has no part labels")]
    MissingParts,
    #[error("graph has {n} vertices, above the cap {cap}")]
    SizeCap { n: usize, cap: usize },
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}
