use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("GF({p}^{n}) needs more than {bits} bits per element")]
    FieldTooLarge { p: u64, n: u32, bits: u32 },
    #[error("GF({p}^{n}) has {size} elements, above the exhaustive-scan cap of {cap}")]
    ScanCapExceeded { p: u64, n: u32, size: u64, cap: u64 },
    #[error("elements or objects from different fields were combined ({0})")]
    ContextMismatch(String),
    #[error("cannot embed GF({p}^{src}) into GF({p2}^{dst})")]
    NoEmbedding { p: u64, src: u32, p2: u64, dst: u32 },
    #[error("GF({p}^{n}) is above the table cap, so it has no canonical embeddings")]
    Untabled { p: u64, n: u32 },
    #[error("{r} does not divide {order}: no primitive {r}-th root of unity")]
    NoRootOfUnity { r: u64, order: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("points coincide: {0}")]
    CoincidentPoints(String),
    #[error("all coordinates are zero")]
    ZeroVector,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("group too large: closure exceeded the cap of {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error("polynomial is not homogeneous of degree {0}")]
    NotHomogeneous(u32),
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("curve is not reduced (repeated component)")]
    NotReduced,
    #[error("invalid curve specification: {0}")]
    BadCurveSpec(String),
    #[error("point {0} is not on the curve")]
    NotOnCurve(String),
    #[error("line {0} is a component of the curve")]
    LineIsComponent(String),
    #[error("restriction to line {line} does not split over GF(p^{have}); needs extension degree {needed}")]
    NotSplit { line: String, have: u32, needed: u32 },
    #[error("line {line} splits only over GF({p}^{needed}), above the table cap")]
    SplittingFieldTooLarge { line: String, p: u64, needed: u32 },
    #[error("rational function exponents sum to {0}, expected 0")]
    NotDegreeZero(i64),
    #[error("center {0} is a singular point of the curve")]
    SingularCenter(String),
    #[error("center {center} is not on line {line}")]
    CenterNotOnLine { center: String, line: String },

    #[error("invalid scenario: {0}")]
    Scenario(String),
    #[error("generator divisor mismatch for {which}: expected {expected}, got {got}")]
    PrescriptionMismatch { which: String, expected: String, got: String },
    #[error("map is not injective outside the allowed exceptional set: {0}")]
    NotBirational(String),
    #[error("no automorphism {0} found; this contradicts the existence argument")]
    NoAutomorphism(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}
