use thiserror::Error;

/// Errors raised by the library. Validation failures that are part of a
/// normal answer (a failed identity check, an infeasible lift) are returned
/// as data instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("modules are defined over different algebras")]
    AlgebraMismatch,
    #[error("the zero vector does not define a point of P(g1)")]
    ZeroPoint,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("even part is not semisimple")]
    NotSemisimple,
    #[error("no equivariant section found: {0}")]
    NoSection(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
