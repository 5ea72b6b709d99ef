use thiserror::Error;

/// Errors shared across the geometry, solver and harness layers.
#[derive(Debug, Error)]
pub enum Error {
    /// A point lies outside the domain (or outside the numerical validity region).
    #[error("point outside domain: {0}")]
    OutsideDomain(String),

    /// An argument violated a documented precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Degenerate input (coincident points, zero vector, constant disc, ...).
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// An iterative routine failed to converge.
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// The nearest boundary point is not unique at this point.
    #[error("ambiguous nearest boundary point: {0}")]
    AmbiguousProjection(String),

    /// A domain failed its convexity/Levi audit; carries the witness point.
    #[error("domain invalid: {0}")]
    DomainInvalid(String),

    /// hyperbolic distance argument too close to the boundary for tanh⁻¹.
    #[error("tanh⁻¹ overflow: |t| = {0} exceeds 1 - 1e-15")]
    AtanhOverflow(f64),

    /// The degree-1 seed disc cannot reach the target inside the domain.
    #[error("seed failure: {0}")]
    SeedFailure(String),

    /// Unsupported domain variant for this operation.
    #[error("unsupported domain: {0}")]
    UnsupportedDomain(String),

    /// Malformed input file or literal.
    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
