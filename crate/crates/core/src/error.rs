use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("input cost {index} is negative")]
    NegativeCost { index: usize },
    #[error("entry ({row}, {col}) outside a {rows}x{cols} pattern")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("input index {index} out of range for {m} inputs")]
    IndexOutOfRange { index: usize, m: usize },
    #[error("bipartite graph has a duplicate edge")]
    DuplicateEdge,
    #[error("bipartite edge weight is negative")]
    NegativeWeight,
    #[error("bipartite graph carries no weights")]
    UnweightedGraph,
    #[error("no matching saturates every right vertex")]
    NoPerfectMatching,
    #[error("no feasible flow of value {required} (maximum is {max})")]
    InfeasibleFlow { required: u64, max: u64 },
    #[error("flow value {value} is below the required {required}")]
    FlowTooSmall { value: u64, required: u64 },
    #[error("component {scc} is not influenced by any input")]
    UncoverableScc { scc: usize },
    #[error("matching is not valid for this network: {0}")]
    InvalidMatching(String),
    #[error("cover is not valid for this network: {0}")]
    InvalidCover(String),
    #[error("system is not structurally controllable")]
    NotControllable,
    #[error("system is not structurally observable")]
    NotObservable,
    #[error("instance too large for exhaustive search: {0}")]
    TooLarge(String),
    #[error("invalid generator request: {0}")]
    BadGenerator(String),
    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
