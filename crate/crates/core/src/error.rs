use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0:?} is reducible over F_{1}")]
    Reducible(Vec<u32>, u32),
    #[error("field of order {0} exceeds the supported range (q <= 2^20)")]
    TooLarge(u128),
    #[error("malformed modulus: {0}")]
    BadModulus(String),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("element index {0} is out of range for a field of order {1}")]
    BadElement(u64, u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not invertible modulo {1}")]
    NotCoprime(u64, u64),
    #[error("exponent {s} is not invertible over a field of order {q} (gcd(s, q-1) != 1)")]
    NotInvertibleExponent { q: u32, s: u64 },
    #[error("cyclotomic integers over different primes ({0} and {1})")]
    MixedPrime(u32, u32),
    #[error("Galois index {0} is not coprime to {1}")]
    BadIndex(u64, u32),
    #[error("quadratic decomposition needs p = 1 (mod 4), got p = {0}")]
    WrongResidue(u32),
    #[error("coefficient vector contains a zero entry")]
    ZeroCoefficient,
    #[error("coefficient vector length {0} is outside 1..=4")]
    TooLargeK(usize),
    #[error("group algebra elements over different fields")]
    MixedField,
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("check {check} failed: {detail}")]
    CheckFailed { check: String, detail: String },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
