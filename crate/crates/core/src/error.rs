use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: i64,
        reason: &'static str,
    },
    #[error("unsupported parameter {name} = {value}: {reason}")]
    UnsupportedParameter {
        name: &'static str,
        value: i64,
        reason: &'static str,
    },
    #[error("edge index {index} out of range ({len} edges)")]
    EdgeOutOfRange { index: usize, len: usize },
    #[error("vertex index {index} out of range ({len} vertices)")]
    VertexOutOfRange { index: usize, len: usize },
    #[error("edge set has universe {found}, graph has {expected} edges")]
    UniverseMismatch { expected: usize, found: usize },
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge between vertices {0} and {1}")]
    DuplicateEdge(usize, usize),
    #[error("duplicate vertex label")]
    DuplicateLabel,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has {0} edges, above the cap of {cap}", cap = crate::graph::MAX_EDGES)]
    TooManyEdges(usize),
    #[error("vertex {vertex} has degree {degree}, a cubic graph is required")]
    UnsupportedDegree { vertex: usize, degree: usize },
    #[error("vertex {vertex} has degree {degree} in the edge set, expected 2")]
    MalformedFactor { vertex: usize, degree: usize },
    #[error("graph has odd order {0}, no perfect matching is possible")]
    OddOrder(usize),
    #[error("edge set is not a perfect matching")]
    NotPerfectMatching,
    #[error("matching meets the principal cut, 2-chain classification is undefined")]
    UndefinedClassification,
    #[error("matching meets the principal cut in {found} edges, this case handles {expected}")]
    WrongCase { expected: usize, found: usize },
    #[error("CP_{n} with odd n is not PMH; use the odd-n witness matching instead")]
    TheoremScope { n: usize },
    #[error("search interrupted after {examined} matchings")]
    Interrupted { examined: u64 },
    #[error("no extension exists for the given matching")]
    NoExtension,
}
