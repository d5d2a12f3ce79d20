use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("transit axiom ({axiom}) violated at pair ({u}, {v})")]
    AxiomViolation { axiom: &'static str, u: usize, v: usize },

    #[error("index {index} out of range for a ground set of size {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("pair ({u}, {v}) given more than once")]
    DuplicatePair { u: usize, v: usize },

    #[error("ground set of size {n} exceeds the limit {max} for this operation")]
    GroundTooLarge { n: usize, max: usize },

    #[error("ground set must be nonempty")]
    EmptyGround,

    #[error("invalid labels: {0}")]
    InvalidLabels(String),

    #[error("set is not convex")]
    NotConvex,

    #[error("internal disagreement between equivalent criteria: {0}")]
    InternalDisagreement(String),

    #[error("malformed graph6 at byte {offset}: {reason}")]
    MalformedGraph6 { offset: usize, reason: String },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("pair ({x}, {y}) is not contained in any member")]
    UncoveredPair { x: usize, y: usize },

    #[error("singleton {{{x}}} is missing from the set system")]
    MissingSingleton { x: usize },

    #[error("hypotheses not met: {}", .0.join(", "))]
    HypothesesNotMet(Vec<String>),

    #[error("hypergraph is not connected")]
    NotConnected,

    #[error("empty hyperedge at position {0}")]
    EmptyEdge(usize),

    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),

    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),

    #[error("unknown identifier `{0}`")]
    UnknownId(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::InvalidInput(e.to_string())
    }
}
