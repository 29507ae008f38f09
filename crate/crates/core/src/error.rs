use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("no value assigned to variable `{0}`")]
    MissingAssignment(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable sets differ: {0:?} vs {1:?}")]
    VariableMismatch(Vec<String>, Vec<String>),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("parse error in `{input}`: {reason}")]
    Parse { input: String, reason: String },
    #[error("unknown lattice `{0}`")]
    UnknownLattice(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("non-integral pairing {0}")]
    NonIntegral(String),
    #[error("unknown node `{0}`")]
    UnknownNode(String),
    #[error("Gram matrix is not symmetric")]
    NotSymmetric,
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("indices must be distinct within rows and within columns")]
    IndexCollision,
    #[error("index {0} out of range 1..=4")]
    IndexOutOfRange(usize),
    #[error("origin is not an interior point of the polytope")]
    OriginNotInterior,
    #[error("polytope is not a lattice polytope after dualising: {0}")]
    NotReflexive(String),
    #[error("not a full-dimensional vertex set: {0}")]
    DegeneratePolytope(String),
    #[error("vertex triple is not a facet")]
    NotAFacet,
    #[error("no lattice shift places the support in the polytope")]
    InfeasibleShift,
    #[error("valuation triple ({0}, {1}, {2}) describes a non-minimal model")]
    NonMinimalModel(String, String, String),
    #[error("valuation triple ({0}, {1}, {2}) matches no Kodaira type")]
    InconsistentValuations(String, String, String),
    #[error("discriminant vanishes identically")]
    DegenerateFamily,
    #[error("Legendre parameter must avoid 0 and 1, got {0}")]
    ForbiddenLambda(String),
    #[error("no constant factor satisfies the identity")]
    NoKappa,
    #[error("point is not in the upper half-plane")]
    NotUpperHalfPlane,
    #[error("modular polynomial level {0} is not supported (1, 2 or 3)")]
    UnsupportedLevel(u32),
    #[error("reconstruction residue {0} exceeds the rounding threshold")]
    PrecisionInsufficient(String),
    #[error("unknown mutation `{0}`")]
    UnknownMutation(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("cache file error: {0}")]
    Cache(String),
}
