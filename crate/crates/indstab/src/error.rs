use thiserror::Error;

/// Errors surfaced by graph construction, exact algebra, and the numeric engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("graph order {0} exceeds the 64-vertex representation cap")]
    TooManyVertices(usize),
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex index {index} out of range for order {order}")]
    VertexOutOfRange { index: usize, order: usize },
    #[error("{0}")]
    SizeOverflow(String),
    #[error("canonical form is capped at 16 vertices, got {0}")]
    CanonCapExceeded(usize),

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("constant term must be 1 for an independence polynomial, got {0}")]
    BadConstantTerm(String),
    #[error("coefficients violate independence-polynomial shape: {0}")]
    BadIndependencePoly(String),
    #[error("degree {degree} exceeds stated order {order}")]
    DegreeExceedsOrder { degree: usize, order: usize },
    #[error("k-star iteration count must be positive")]
    BadKStar,
    #[error("polynomial is not real-rooted: {0}")]
    NotRealRooted(String),
    #[error("degree pattern admits neither interlacing nor left-alternation: {0} vs {1} roots")]
    DegreePattern(usize, usize),

    #[error("root finding did not converge (degree {degree}, precision {bits} bits)")]
    NonConvergence { degree: usize, bits: u32 },
    #[error("root set is unconverged; refusing to derive conclusions from it")]
    Unconverged,
    #[error("Möbius transfer hit the pole at 1/k")]
    PoleHit,
    #[error("search exhausted cap {0} without success")]
    CapExhausted(u64),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("numeric degree cap {cap} exceeded (degree {degree})")]
    DegreeCap { degree: usize, cap: usize },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid certificate: {0}")]
    BadCertificate(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
