use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid grid dimensions {m}x{n}: both sides must be at least 2")]
    GridTooSmall { m: usize, n: usize },

    #[error("vertex {vertex} out of range for a universe of {universe}")]
    VertexOutOfRange { vertex: usize, universe: usize },

    #[error("universe of {0} vertices exceeds the supported maximum of 64")]
    UniverseTooLarge(usize),

    #[error("invalid edge {0:?}: loops are not allowed")]
    Loop((usize, usize)),

    #[error("graph is not bipartite; odd cycle {0:?}")]
    OddCycle(Vec<usize>),

    #[error("invalid attachment at step {step}: {reason}")]
    InvalidAttachment { step: usize, reason: String },

    #[error("k = {0} is not allowed here (need k >= 2)")]
    InvalidK(usize),

    #[error("size cap exceeded: {what} is {actual}, cap is {cap}")]
    SizeCap {
        what: &'static str,
        actual: usize,
        cap: usize,
    },

    #[error("time budget of {secs}s exceeded while {what}")]
    BudgetExceeded { what: &'static str, secs: u64 },

    #[error("universe mismatch: {0} vs {1}")]
    UniverseMismatch(usize, usize),

    #[error("apex {0} collides with the complex's vertices")]
    ApexCollision(usize),

    #[error("void complex has no boundary matrices")]
    VoidComplex,

    #[error("not downward closed: face {0:?} is missing")]
    NotClosed(Vec<usize>),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
