//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("zero vector has no primitive decomposition")]
    ZeroVector,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SupportError {
    #[error("direction ({0}, {1}) is outside the cone of the support function")]
    OutsideCone(String, String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExhaustError {
    #[error("support data is not concave: defect {defect} < 0 at pair {pair}")]
    NotConcave { pair: String, defect: String },
    #[error("exact tail is unavailable for this domain/basis: {0}")]
    TailUnavailable(String),
    #[error("domain has no compact minimal model")]
    NoMinimalModel,
    #[error(transparent)]
    Support(#[from] SupportError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolygonError {
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("polygon has repeated or collinear consecutive vertices near index {0}")]
    DegenerateVertex(usize),
    #[error("polygon is not convex at vertex index {0}")]
    NotConvex(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CausticError {
    #[error(transparent)]
    Polygon(#[from] PolygonError),
    #[error("level {t} exceeds the maximum {m} of the tropical series")]
    LevelAboveMax { t: String, m: String },
    #[error("level must be nonnegative, got {0}")]
    NegativeLevel(String),
    #[error("polygon is not Delzant: {0}")]
    NotDelzant(String),
    #[error("side {0} is not removable")]
    NotRemovable(usize),
    #[error("corner cut of size {size} does not fit at vertex {vertex}")]
    OversizedCut { vertex: usize, size: String },
    #[error("vertex is on the boundary (1-valent); multiplicity is undefined")]
    BoundaryVertex,
    #[error("vertex not found in curve")]
    NoSuchVertex,
    #[error("kinetic process failed to terminate (internal limit reached)")]
    NoTermination,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CfracError {
    #[error("alpha must be positive, got {0}")]
    NonPositive(String),
    #[error("d must not be a perfect square in (p + q*sqrt(d))/r")]
    SquareDiscriminant,
    #[error("denominator r must be nonzero")]
    ZeroDenominator,
    #[error("float precision exhausted after {terms_ok} trustworthy terms (requested {requested})")]
    PrecisionExhausted { terms_ok: usize, requested: usize },
}
