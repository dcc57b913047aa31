//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("space mismatch: {0}")]
    SpaceMismatch(String),

    #[error("invalid chart index {chart} for {space}")]
    InvalidChart { chart: usize, space: String },

    #[error("non-finite coordinates")]
    NonFinite,

    #[error("degree error: {0}")]
    Degree(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("class is not Kahler (all coefficients must be > 0)")]
    NotKahler,

    #[error("monomial does not divide all terms")]
    MonomialDivision,

    #[error("indeterminacy set is not finite: {0}")]
    NotFinite(String),

    #[error("indeterminacy points are not Gaussian-rational; supply them explicitly")]
    IrrationalIndeterminacy,

    #[error("point is not exactly representable for this operation")]
    InexactPoint,

    #[error("pole set meets the sampling sphere ({0} of {1} samples at -inf)")]
    PoleOnSphere(usize, usize),

    #[error("tangency slope {0} is never crossed by the obstacle slopes")]
    NoTangency(f64),

    #[error("constraint polygon is empty (gamma exceeds a+b)")]
    EmptyConstraint,

    #[error("dual classification ambiguous for {0:.1}% of points; refine the grid")]
    AmbiguousClassification(f64),

    #[error("grid error: {0}")]
    Grid(String),

    #[error("poles too close for ball radius {0}")]
    PolesTooClose(f64),

    #[error("map is holomorphic on the projective plane (empty indeterminacy set): {0}")]
    EmptyIndeterminacy(String),

    #[error("weak regularity fails: {0}")]
    NotWeaklyRegular(String),

    #[error("iteration size bound exceeded ({0} monomials)")]
    SizeBound(usize),

    #[error("orbit hit the indeterminacy set exactly")]
    OrbitHitsIndeterminacy,

    #[error("monomial factor cancellation failed: {0}")]
    TransferFactor(String),

    #[error("serialization error: {0}")]
    Serde(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
