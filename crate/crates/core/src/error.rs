use thiserror::Error;

/// Errors surfaced by the library entry points.
#[derive(Debug, Error)]
pub enum Error {
    #[error("failed to parse rational `{0}`")]
    BadRational(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquareMatrix { rows: usize, cols: usize },
    #[error("matrix size {0} exceeds the supported determinant bound 6")]
    MatrixTooLarge(usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("coefficient field mismatch")]
    FieldMismatch,
    #[error("malformed model file: {0}")]
    BadModelFile(String),
    #[error("coefficient `{name}` has denominator divisible by {p}")]
    NonUnitDenominator { name: String, p: u64 },
    #[error("matrix for a degree-4 model must be symmetric (entry {0},{1})")]
    NotSymmetric(usize, usize),
    #[error("matrix for a degree-5 model must be alternating (entry {0},{1})")]
    NotAlternating(usize, usize),
    #[error("degree-5 matrix entries must be linear forms (entry {0},{1})")]
    NotLinear(usize, usize),
    #[error("no invariant formulas in scope for degree {0}")]
    UnsupportedDegree(u8),
    #[error("covariant map undefined: shifted y-coordinate is zero")]
    ChartDenominatorZero,
    #[error("point does not lie on the curve")]
    PointOffCurve,
    #[error("transform scale u must be nonzero")]
    ZeroScale,
    #[error("weight must be an even integer >= 4, got {0}")]
    BadWeight(i64),
    #[error("prime must exceed 3 for the Hasse congruence, got {0}")]
    PrimeTooSmall(u64),
    #[error("{0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
