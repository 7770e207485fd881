use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty polynomial string")]
    EmptyPolynomial,

    #[error("invalid character {ch:?} at position {pos} (expected '0' or '1')")]
    InvalidCharacter { pos: usize, ch: char },

    #[error("polynomial string of length {len} exceeds capacity of {max} coefficients")]
    PolynomialTooLong { len: usize, max: usize },

    #[error("ring size k = {k} outside supported range 1..={max}")]
    RingSize { k: usize, max: usize },

    #[error("operand of degree {degree} is not reduced modulo x^{k} + 1")]
    NotReduced { degree: i32, k: usize },

    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,

    #[error("window of length {window} truncates polynomial of degree {degree}")]
    WindowTooShort { window: usize, degree: i32 },

    #[error("invalid tap polynomial: {0}")]
    InvalidTap(&'static str),

    #[error("dimension k = {k} exceeds enumeration limit {max}")]
    Capacity { k: usize, max: usize },

    #[error("malformed weight distribution: {0}")]
    MalformedDistribution(String),

    #[error("block length n = {0} must be even and positive")]
    InvalidLength(i64),

    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
}
