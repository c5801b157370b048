use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("ore adjacency needs two distinct vertices, got ({0}, {0})")]
    SamePair(usize),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("line {line}: {message} (content: {content:?})")]
    Parse {
        line: usize,
        content: String,
        message: String,
    },

    #[error("unknown pattern {0:?}")]
    UnknownPattern(String),

    #[error("pattern family must not be empty")]
    EmptyFamily,

    #[error("graph on {n} vertices exceeds the supported bound of {max}")]
    TooLarge { n: usize, max: usize },

    #[error("witness order must be an even integer >= 16, got {0}")]
    InvalidWitnessOrder(usize),

    #[error("invalid cycle: {0}")]
    InvalidCycle(String),

    #[error("invalid o-cycle: {0}")]
    InvalidOCycle(String),

    #[error("LEMMA_VIOLATION: no real cycle covers the o-cycle {0:?}")]
    LemmaViolation(Vec<usize>),

    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
