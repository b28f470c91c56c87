use num_bigint::BigInt;
use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("Kronecker symbol (a|n) requires n != 0")]
    ZeroModulus,

    #[error("({a},{b},{c}) is not positive definite with discriminant 0 or 1 mod 4")]
    InvalidForm { a: BigInt, b: BigInt, c: BigInt },

    #[error("{0} is not a negative discriminant (need value < 0 and = 0 or 1 mod 4)")]
    InvalidDiscriminant(BigInt),

    #[error("discriminant mismatch: {0} vs {1}")]
    DiscriminantMismatch(BigInt, BigInt),

    #[error("({0},{1}) is not a primitive representation")]
    NonPrimitiveVector(BigInt, BigInt),

    #[error("form ({a},{b},{c}) is imprimitive (content {content})")]
    ImprimitiveForm {
        a: BigInt,
        b: BigInt,
        c: BigInt,
        content: BigInt,
    },

    #[error("prime {p} is inert for discriminant {disc}: no prime form exists")]
    InertPrime { p: u64, disc: BigInt },

    #[error("no represented value coprime to {0} found within the scan bound")]
    NoCoprimeValue(BigInt),

    #[error("power-residue form needs 0 < 2b <= a, got a = {a}, b = {b}")]
    ConditionViolated { a: u64, b: u64 },

    #[error("form ({a},{b},{c}) is not ambiguous")]
    NotAmbiguous { a: BigInt, b: BigInt, c: BigInt },

    #[error("step budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("trial budget exhausted after collecting {collected} relations (target {target})")]
    CollectionTimeout { collected: usize, target: usize },

    #[error("relation lattice is rank deficient: rank {rank} < {cols} columns")]
    RankDeficient { rank: usize, cols: usize },

    #[error("exponent vector has {got} entries, factor base has {expected}")]
    ExponentLength { got: usize, expected: usize },

    #[error("power(q, multiple) is not principal; multiple of the order required")]
    NotPrincipalMultiple,

    #[error("factor base is empty; nothing to collect relations over")]
    EmptyFactorBase,

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
