use thiserror::Error;

/// Errors raised by graph construction, walk handling, enumeration and the
/// algebraic oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: malformed edge line {text:?}")]
    MalformedLine { line: usize, text: String },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("invalid json: {0}")]
    Json(String),
    #[error("edge index {0} out of range")]
    UnknownEdge(usize),
    #[error("invalid generator parameters: {0}")]
    InvalidParameters(String),

    #[error("walk is empty")]
    EmptyWalk,
    #[error("walk has odd length {0}")]
    OddWalk(usize),
    #[error("walk edges {0} and {1} are not incident")]
    NotIncident(usize, usize),
    #[error("walk is not closed")]
    NotClosed,
    #[error("walk is reducible: edge {0} occurs in both classes")]
    Reducible(usize),

    #[error("exponent vectors have length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("binomial sides share edge {0}")]
    OverlappingSupport(usize),
    #[error("binomial is zero")]
    ZeroBinomial,
    #[error("binomial is not balanced at vertex {0}")]
    Unbalanced(usize),

    #[error("walk is not primitive")]
    NotPrimitive,
    #[error("walk is not mixed")]
    NotMixed,
    #[error("walk has no pure cyclic block")]
    NoPureBlock,
    #[error("binomial is not a circuit")]
    NotACircuit,
    #[error("circuit support is rank deficient")]
    DegenerateSupport,
    #[error("binomial is not an element of the supplied Graver basis")]
    NotInGraver,

    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
}

/// Coarse error class, used by the command line front end to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Validation,
    Budget,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::CapExceeded(_) | Error::BudgetExceeded(_) => ErrorClass::Budget,
            _ => ErrorClass::Validation,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
