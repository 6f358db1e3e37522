use thiserror::Error;

use crate::hypercube::Vertex;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("vertex {vertex} outside the universe [0, 2^{n})")]
    VertexOutOfRange { vertex: Vertex, n: u32 },

    #[error("offset bits {overlap:#b} overlap the variable coordinates")]
    OffsetOverlap { overlap: u64 },

    #[error("resource cap exceeded: {what} (limit {limit}, reached dimension {dim_reached})")]
    CapExceeded { what: String, limit: usize, dim_reached: usize },

    #[error("simplex {0:?} is not a face of the complex")]
    NotAFace(Vec<Vertex>),

    #[error("invalid cross-polytope pairs: {0}")]
    InvalidPairs(String),

    #[error("small chain not found or not unique ({found} candidates)")]
    SmallChain { found: usize },

    #[error("dimension or ring mismatch: {0}")]
    Mismatch(String),

    #[error("division by zero: {0}")]
    DivisionByZero(String),

    #[error("graph has isolated vertex {0}")]
    IsolatedVertex(usize),

    #[error("monomial support is not the full vertex universe")]
    SupportNotFull,

    #[error("simplex {0:?} is not a maximal simplex of VR(Q_(r+1); r)")]
    NotMaximal(Vec<Vertex>),

    #[error("local diameter condition fails at vertex {0}")]
    LocalDiameter(Vertex),

    #[error("lifted monomial is not a cocycle: {0}")]
    LiftNotCocycle(String),

    #[error("generator list is not strictly increasing in the generator order")]
    Unsorted,

    #[error("decomposition violated: antipodal factor ({0}, {1}) missing from an admissible full-support generator")]
    LemmaViolation(Vertex, Vertex),

    #[error("generator is not admissible or does not have full support")]
    NotFullSupportAdmissible,

    #[error("pattern violation at step {step}: {reason}")]
    PatternViolation { step: usize, reason: String },

    #[error("certificate template violation: {0}")]
    Template(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
