use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("the zero polynomial is not a valid argument here")]
    ZeroPolynomial,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("polynomial has zero constant term, so x divides it and no exponent exists")]
    ZeroConstantTerm,
    #[error("polynomial must have degree at least 1")]
    ConstantPolynomial,
    #[error("degree {degree} exceeds the supported cap of {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("polynomial is reducible")]
    Reducible,
    #[error("polynomial is not primitive")]
    NotPrimitive,
    #[error("period {0} has no supported factorization of x^N - 1")]
    UnsupportedPeriod(usize),
    #[error("sequence length {got} does not have the required shape: {expected}")]
    InvalidLength { expected: String, got: usize },
    #[error("invalid prime parameter: {0}")]
    InvalidPrime(String),
    #[error("sequence is not annihilated by f(E)^(2^n)")]
    NotGeneratedBy,
    #[error("brute-force size 2^{0} is infeasible")]
    Infeasible(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
