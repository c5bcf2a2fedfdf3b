use thiserror::Error;

/// Errors surfaced by the engine.
///
/// Missing table entries and unsupported vertices are hard errors by
/// design: the invariant table encodes analytic input the engine cannot
/// compute, and a silent zero would fabricate geometry.
#[derive(Debug, Error)]
pub enum Error {
    #[error("point {0} lies outside the dual intersection complex")]
    OutOfDomain(String),

    #[error("invalid contact data: derivative {dir} leaving face {face}: {reason}")]
    InvalidContact {
        face: String,
        dir: String,
        reason: String,
    },

    #[error("missing invariant table entry for key {0}")]
    MissingInvariant(String),

    #[error("unsupported vertex {id}: {reason}")]
    UnsupportedVertex { id: usize, reason: String },

    #[error("combinatorial type is disconnected")]
    Disconnected,

    #[error("interior vertex {id} is unbalanced: defect {defect}")]
    Unbalanced { id: usize, defect: String },

    #[error("curve is not rigid for this point configuration (deformation dimension {0})")]
    NotRigid(usize),

    #[error("curve has no realization for this point configuration")]
    Unrealizable,

    #[error("non-generic point configuration: {0}")]
    NonGeneric(String),

    #[error("invalid curve: {0}")]
    InvalidCurve(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
