use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a digraph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex {0} is not a member of the subset")]
    NotInSubset(usize),

    #[error("subset indexes {set_n} vertices but the digraph has {graph_n}")]
    DimensionMismatch { set_n: usize, graph_n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("3^{0} does not fit in 64 bits")]
    Overflow(u32),

    #[error("{order} vertices exceeds the size limit of {limit}")]
    SizeLimit { order: u64, limit: u64 },

    #[error("level must be at least 1 here, got {0}")]
    LevelZero(u32),

    #[error("subset of size {size} exceeds (3^{k}-1)/2 = {max}")]
    SubsetTooLarge { k: u32, size: usize, max: u64 },

    #[error("every part of the subset must be nonempty")]
    EmptyPart,

    #[error("search would visit {estimate} subsets, above the budget of {budget}")]
    BudgetExceeded { estimate: u128, budget: u64 },

    #[error("target size {target} exceeds the vertex count {n}")]
    TargetTooLarge { target: usize, n: usize },

    #[error("balanced split needs an even vertex count, got {0}")]
    OddOrder(usize),

    #[error("at least one trial is required")]
    NoTrials,

    #[error("no exact search result available")]
    NotExact,

    #[error("certificate check failed: {0}")]
    MalformedCertificate(String),
}
