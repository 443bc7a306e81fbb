//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by construction and verification routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("extension degree {0} out of range (must be 1..=4)")]
    DegreeOutOfRange(u32),
    #[error("field order {0} exceeds the cap of 256")]
    OrderTooLarge(u64),
    #[error("zero element has no inverse")]
    ZeroInverse,
    #[error("cannot normalize the zero vector")]
    ZeroVector,
    #[error("projective dimension {0} too small (must be at least 2)")]
    DimensionTooSmall(usize),
    #[error("hyperplanes are equal")]
    EqualHyperplanes,
    #[error("{family} standard form needs {parity} projective dimension, got {n}")]
    ParityMismatch {
        family: &'static str,
        parity: &'static str,
        n: usize,
    },
    #[error("the zero form does not define a quadric")]
    ZeroForm,
    #[error("inconsistent vertex dimension {s} for base kind in PG({n},q)")]
    InconsistentCone { s: i64, n: usize },
    #[error("point does not lie on the quadric")]
    PointOffQuadric,
    #[error("polar hyperplane is undefined (degenerate point)")]
    DegeneratePolarPoint,
    #[error("nucleus exists only for even q and even N")]
    NoNucleus,
    #[error("subspace has projective dimension {got}, expected {expected}")]
    WrongSubspaceDimension { got: i64, expected: i64 },
    #[error("base quadric must be non-singular")]
    SingularBase,
    #[error("forms are proportional and span no pencil")]
    ProportionalForms,
    #[error("unsupported threshold for this dimension/family")]
    UnsupportedThreshold,
    #[error("enumeration budget exceeded ({0} items); pass force=true to override")]
    BudgetExceeded(u128),
    #[error("parameters (l={l}, q={q}) outside the verified grid; pass force=true to override")]
    OutsideVerifiedGrid { l: usize, q: u16 },
    #[error("evaluation kernel is not spanned by the base form alone")]
    UnexpectedKernel,
    #[error("pair structure contradicts the case analysis: {0}")]
    UnexpectedPairStructure(String),
    #[error("form does not match any quadric class")]
    UnclassifiableForm,
    #[error("malformed form line: {0}")]
    MalformedFormLine(String),
}

pub type Result<T> = std::result::Result<T, Error>;
