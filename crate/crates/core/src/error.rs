use thiserror::Error;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CsfError {
    #[error("{what} = {requested} exceeds the configured cap of {cap}")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("invalid {kind} sequence at index {index}: {reason}")]
    InvalidSequence {
        kind: &'static str,
        index: usize,
        reason: String,
    },

    #[error("{family}: parameter out of range, requires {bound}")]
    ParamOutOfRange { family: String, bound: String },

    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("edge {0}-{1} is not present in the graph")]
    MissingEdge(usize, usize),

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid edge {0}-{1}")]
    InvalidEdge(usize, usize),

    #[error("{sigma} does not refine {tau}")]
    NotRefinement { sigma: String, tau: String },

    #[error("operation `{op}` is not defined on the {basis}-basis")]
    WrongBasis { op: &'static str, basis: String },

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("{0} is not a linear extension of the poset")]
    NotLinearExtension(String),

    #[error("the open neighbourhood of {vertex} is not a clique: missing edge {u}-{w}")]
    NotClique { vertex: usize, u: usize, w: usize },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, CsfError>;

impl CsfError {
    pub fn is_cap(&self) -> bool {
        matches!(self, CsfError::CapExceeded { .. })
    }
}
