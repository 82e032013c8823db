use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph on {n} vertices exceeds the vertex cap of {cap}")]
    TooManyVertices { n: usize, cap: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{what} exceeded its budget of {budget}")]
    BudgetExceeded { what: &'static str, budget: u64 },
    #[error("domain size {size} exceeds the limit of {limit}")]
    DomainTooLarge { size: usize, limit: usize },
    #[error("instance {index} outside a domain of size {domain}")]
    InstanceOutOfRange { index: usize, domain: usize },
    #[error("instance {0} labelled both + and -")]
    ContradictorySample(usize),
    #[error("duplicate concept {0}")]
    DuplicateConcept(String),
    #[error("concept class is empty")]
    EmptyClass,
    #[error("concept index {index} out of range for a class of {len}")]
    ConceptOutOfRange { index: usize, len: usize },
    #[error("preference relation would be cyclic: concept {0} above and below concept {1}")]
    CyclicPreference(usize, usize),
    #[error("vertex set {0} is empty or not connected")]
    NotConnected(String),
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("tree is not a subgraph of the host graph")]
    NotSubgraph,
    #[error("precondition not met: {0}")]
    Precondition(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
