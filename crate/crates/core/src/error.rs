use thiserror::Error;

/// Errors shared by every module of the crate.
///
/// Variants carry enough context to produce a one-line diagnostic; they are
/// never used for control flow inside the library itself.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generators span a lattice of rank {found}, expected full rank {expected}")]
    RankDeficient { expected: usize, found: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("modulus {0} is below 2")]
    BadModulus(String),
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("{0} is not prime")]
    NotPrime(String),
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(String, String),
    #[error("field polynomial must have degree at least 2, got {0}")]
    DegreeTooSmall(usize),
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("operation is undefined for the zero element")]
    ZeroElement,
    #[error("{a} is not a root of the field polynomial modulo {q}")]
    NotARoot { a: String, q: String },
    #[error("prime ideal has residue degree {0}, expected 1")]
    DegreeNotOne(usize),
    #[error("power s = {0} is below the smallest admissible value {1}")]
    SPowerTooSmall(u32, u32),
    #[error("{0} is not an odd prime")]
    NotOddPrime(String),
    #[error("x + y = 0 makes the quotient form degenerate")]
    DegenerateSum,
    #[error("q must differ from p, both were {0}")]
    SamePrime(String),
    #[error("product left nonzero coordinates above the constant: {0:?}")]
    ResultNotRational(Vec<String>),
    #[error("{0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
