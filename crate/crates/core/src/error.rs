use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report. Variants map one-to-one onto the
/// precondition violations of the public operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field cardinality {q} exceeds the bound {bound}")]
    BoundExceeded { q: u64, bound: u64 },
    #[error("modulus is not monic irreducible of degree {degree}")]
    NotIrreducible { degree: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("scalar must be nonzero")]
    ZeroScalar,
    #[error("multiplier {a} is not coprime to {n}")]
    MultiplierNotCoprime { a: usize, n: usize },
    #[error("length {n} is not coprime to the field size {q}")]
    NotCoprime { n: usize, q: u32 },
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("length {n} exceeds the search cutoff {cutoff}")]
    CutoffExceeded { n: usize, cutoff: usize },
    #[error("enumeration of {0} codewords or tuples is too large")]
    TooLarge(u64),
    #[error("generator does not divide x^{n} - 1")]
    NotDivisor { n: usize },
    #[error("scalar is not an {n}-th root of unity")]
    NotRootOfUnity { n: usize },
    #[error("g * f is not x^{n} - 1")]
    NotCofactors { n: usize },
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("row space is not invariant under the shift by {l}")]
    NotShiftInvariant { l: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("kernel and constituent duals disagree")]
    DualMismatch,
    #[error("no element with gamma^2 + 1 = 0 in F_{q}")]
    NoGamma { q: u32 },
    #[error("constituent codes are not all cyclic")]
    NotCyclicConstituents,
    #[error("index {0} is not prime")]
    NotPrimeIndex(usize),
    #[error("independent computations disagree: {0}")]
    RouteMismatch(&'static str),
    #[error("invalid code file: {0}")]
    Format(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::NotPrimePower(_) => "NotPrimePower",
            Error::BoundExceeded { .. } => "BoundExceeded",
            Error::NotIrreducible { .. } => "NotIrreducible",
            Error::DivisionByZero => "DivisionByZero",
            Error::FieldMismatch => "FieldMismatch",
            Error::ZeroConstantTerm => "ZeroConstantTerm",
            Error::ZeroScalar => "ZeroScalar",
            Error::MultiplierNotCoprime { .. } => "MultiplierNotCoprime",
            Error::NotCoprime { .. } => "NotCoprime",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::CutoffExceeded { .. } => "CutoffExceeded",
            Error::TooLarge(_) => "TooLarge",
            Error::NotDivisor { .. } => "NotDivisor",
            Error::NotRootOfUnity { .. } => "NotRootOfUnity",
            Error::NotCofactors { .. } => "NotCofactors",
            Error::BadParameters(_) => "BadParameters",
            Error::NotShiftInvariant { .. } => "NotShiftInvariant",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::DualMismatch => "DualMismatch",
            Error::NoGamma { .. } => "NoGamma",
            Error::NotCyclicConstituents => "NotCyclicConstituents",
            Error::NotPrimeIndex(_) => "NotPrimeIndex",
            Error::RouteMismatch(_) => "RouteMismatch",
            Error::Format(_) => "Format",
        }
    }
}
