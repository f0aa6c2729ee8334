use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic 2 is not supported (2 must be invertible)")]
    EvenCharacteristic,
    #[error("modulus {0:?} is reducible over F_p")]
    ReducibleModulus(Vec<u32>),
    #[error("modulus has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("modulus {0:?} is not monic")]
    NonMonicModulus(Vec<u32>),
    #[error("field of order {0} is too large for table-driven arithmetic")]
    FieldTooLarge(u64),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("automorphism power t = {t} must be positive and divide m = {m}")]
    InvalidAutPower { t: u32, m: u32 },
    #[error("operands belong to different rings")]
    ContextMismatch,
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("leading coefficient of the divisor is not a unit")]
    NonUnitLeadingCoeff,
    #[error("enumeration needs {required} candidates, cap is {cap}")]
    CapExceeded { required: u128, cap: u128 },
    #[error("gcd(n = {n}, m/t = {order}) != 1")]
    GcdConditionViolated { n: usize, order: u32 },
    #[error("gcd(n = {n}, q = {q}) != 1")]
    NotCoprimeToQ { n: usize, q: u64 },
    #[error("generator is not a right divisor of x^{n} - 1")]
    NotRightDivisor { n: usize },
    #[error("generator polynomial is not monic")]
    NotMonic,
    #[error("message degree {degree} must be below the dimension {k}")]
    DegreeTooLarge { degree: usize, k: usize },
    #[error("expected length {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("length must be at least 1")]
    ZeroLength,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
