use thiserror::Error;

/// Errors raised while building, loading or processing a triangulation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("non-triangle face at line {line}")]
    NonTriangleFace { line: usize },

    #[error("vertex index {index} out of range (n = {n})")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("invalid triangulation: {0}")]
    Invalid(String),

    #[error("{what} must be at least {min}, got {got}")]
    Precondition {
        what: &'static str,
        min: usize,
        got: usize,
    },

    #[error("size exceeds 32-bit index width: {0}")]
    TooLarge(String),

    #[error("vertex {0} is an outer vertex")]
    OuterVertex(u32),

    #[error("face {0} is not an oriented triangle")]
    FaceNotOriented(u32),

    #[error("no separator satisfies the balance ratio {alpha}")]
    NoBalancedSeparator { alpha: f64 },

    #[error("degenerate drawing: mean edge length is zero")]
    DegenerateDrawing,

    #[error("shelling invariant breached: {0}")]
    Shelling(String),

    #[error("wood file does not match the triangulation: {0}")]
    WoodMismatch(String),

    #[error("wood fails validation: {0}")]
    InvalidWood(String),

    #[error("separator fails verification: {0}")]
    InvalidSeparator(String),

    #[error("{0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
