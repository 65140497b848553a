use num_bigint::BigUint;
use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid prime set: {0}")]
    InvalidPrimeSpec(String),
    #[error("powers must be positive, got 0")]
    ZeroPower,
    #[error("{a}·n ≡ 1 (mod {b}) has no solution: gcd = {gcd}")]
    NoSolution {
        a: BigUint,
        b: BigUint,
        gcd: BigUint,
    },
    #[error("{n} is not a valid index for this alignment (must lie in the progression and be ≥ {n_min})")]
    NotInProgression { n: BigUint, n_min: BigUint },
    #[error("coefficient of degree {degree} is negative: {value}")]
    NegativeCoefficient { degree: u32, value: String },
    #[error("coefficients sum to {sum}, not 1")]
    SumNotOne { sum: String },
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("truncation level {level} outside 1..={depth}")]
    LevelOutOfRange { level: usize, depth: usize },
    #[error("space of order {order} exceeds the materialization cap {cap}")]
    CapExceeded { order: BigUint, cap: u64 },
    #[error("{q} has no inverse modulo {modulus}")]
    NoInverse { q: u64, modulus: u64 },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("size mismatch: {0}")]
    Mismatch(String),
    #[error("moduli are not pairwise coprime: {0} and {1}")]
    NotCoprime(u64, u64),
    #[error("permutations do not commute: {0}")]
    NotCommuting(String),
    #[error("identity failed: {0}")]
    IdentityFailed(String),
    #[error("no fundamental domain: {0}")]
    NoFundamentalDomain(String),
    #[error("not a doubly stochastic matrix: {0}")]
    NotDoublyStochastic(String),
    #[error("diagonal is not constant: entry {index} is {found}, expected {expected}")]
    NonConstantDiagonal {
        index: usize,
        found: String,
        expected: String,
    },
    #[error("empty progression at stage {0}")]
    EmptyProgression(usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
