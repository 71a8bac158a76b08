use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("half-edge `{0}` is paired with itself")]
    FixedPointPairing(String),
    #[error("half-edge `{0}` is listed more than once")]
    DuplicateHalfEdge(String),
    #[error("vertex `{0}` is listed more than once")]
    DuplicateVertex(String),
    #[error("vertex `{0}` has an empty rotation")]
    EmptyVertex(String),
    #[error("rotation/pairing mismatch at half-edge `{half_edge}`: {reason}")]
    OrbitMismatch { half_edge: String, reason: String },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown half-edge `{0}`")]
    UnknownHalfEdge(String),
    #[error("edge ids must be unique and match the edge list: {0}")]
    BadEdgeIds(String),
    #[error("operation requires a connected ribbon graph")]
    DisconnectedInput,
    #[error("no degree given for vertex `{0}`")]
    MissingDegree(String),
    #[error("degree of vertex `{0}` must be positive")]
    NonPositiveDegree(String),
    #[error("not admissible: {0}")]
    NotAdmissible(String),
    #[error("base graph is not a Brauer graph: vertex `{0}` has non-integral multiplicity")]
    NotABrauerGraph(String),
    #[error("invalid cutting set: {0}")]
    InvalidCut(String),
    #[error("covering parameter r must be at least 1")]
    BadSheetCount,
    #[error("invalid window {lo}:{hi}")]
    BadWindow { lo: i64, hi: i64 },
    #[error("cover is not admissible: {0}")]
    CoverNotAdmissible(String),
    #[error("power {power} does not divide the Nakayama order {order}")]
    NonDivisorPower { power: usize, order: usize },
    #[error("quotient is not admissible: {0}")]
    QuotientNotAdmissible(String),
    #[error("input has {actual} half-edges, limit is {limit}")]
    SizeLimitExceeded { actual: usize, limit: usize },
    #[error("gentle presentation invalid: {0}")]
    NotGentle(String),
    #[error("path through arrow `{0}` is unbounded (relation-free oriented cycle)")]
    UnboundedPath(String),
    #[error("quiver vertex `{vertex}` has {count} occurrences in maximal paths, expected 2")]
    OccurrenceMismatch { vertex: String, count: usize },
    #[error("inconsistent Loewy data: {0}")]
    InconsistentInput(String),
    #[error("Loewy data does not determine the graph (labels {labels:?}): {reason}")]
    Ambiguous { labels: Vec<String>, reason: String },
    #[error("exceptional local Brauer graph algebra; the graph is not determined")]
    Exceptional,
    #[error("parse error: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
