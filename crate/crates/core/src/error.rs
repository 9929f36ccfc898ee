use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree {0} is too low for this operation")]
    DegreeTooLow(usize),
    #[error("degree {0} exceeds the supported maximum of {1}")]
    DegreeTooLarge(usize, usize),
    #[error("leading coefficient a_n is zero")]
    LeadingCoefficientZero,
    #[error("all coefficients are zero")]
    ZeroForm,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("({0}, {1}) is not a solution of |F(x, y)| = 1")]
    NotASolution(String, String),
    #[error("({0}, {1}) are not coprime")]
    NotCoprime(String, String),
    #[error("discriminant is zero")]
    ZeroDiscriminant,
    #[error("precision exhausted at {0} bits")]
    PrecisionExhausted(u32),
    #[error("conjugate set is not closed: {0}")]
    NotClosedOrbit(String),
    #[error("conjugate orbit of size {0} is too large for subset search")]
    OrbitTooLarge(usize),
    #[error("polynomial is reducible")]
    ReduciblePolynomial,
    #[error("layer boundary is ambiguous for y = {0}")]
    AmbiguousBoundary(String),
    #[error("form is not monic")]
    NotMonic,
    #[error("evaluation point coincides with a root")]
    DegenerateRoots,
    #[error("height bound A_{0} must be positive")]
    NonPositiveA(usize),
    #[error("chi must be 1 or 2, got {0}")]
    InvalidChi(u32),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("F(x, 1) is constant; the equation has infinitely many solutions")]
    InfiniteSolutions,
    #[error("not a prime: {0}")]
    NotPrime(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("config error: {0}")]
    Config(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
