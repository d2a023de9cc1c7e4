//! Crate-wide error type.
//!
//! Every fallible operation reports one of these variants; the CLI prints
//! the variant name verbatim and exits with code 2 on a domain error.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("DivisionByZero")]
    DivisionByZero,
    #[error("NotRational: element has non-constant coefficients")]
    NotRational,
    #[error("NotSquarefree: {0} is not squarefree")]
    NotSquarefree(i64),
    #[error("OutOfRange: {0}")]
    OutOfRange(String),
    #[error("NotPrime: {0} is not prime")]
    NotPrime(u64),
    #[error("ZeroInput")]
    ZeroInput,
    #[error("PerfectSquareInput: element is a square in the field")]
    PerfectSquareInput,
    #[error("OddRamification: ramified set must have even cardinality")]
    OddRamification,
    #[error("UnsupportedOrder: torsion order {0} not supported")]
    UnsupportedOrder(u64),
    #[error("NotPrimePower: {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("NotCoprime: gcd({0}, {1}) > 1")]
    NotCoprime(u64, u64),
    #[error("IdentityPower: power acts trivially")]
    IdentityPower,
    #[error("UnsupportedGroup: {0}")]
    UnsupportedGroup(String),
    #[error("InconsistentScenario: {0}")]
    InconsistentScenario(String),
    #[error("UnsupportedK2: bound only available for K^2 = 4 or 2")]
    UnsupportedK2,
    #[error("BadWeight: {0} branch nodes are incompatible with a rank-{1} cover")]
    BadWeight(u64, u32),
    #[error("BranchNotDivisible: branch curve count {0} is not divisible by 3")]
    BranchNotDivisible(u64),
    #[error("GoldenMismatch: {0}")]
    GoldenMismatch(String),
    #[error("UsageError: {0}")]
    UsageError(String),
    #[error("FieldMismatch: elements belong to different quadratic fields")]
    FieldMismatch,
}

pub type Result<T> = std::result::Result<T, Error>;
