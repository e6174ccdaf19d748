use thiserror::Error;

use crate::loopalg::LatticePoint;

/// Errors raised by the algebraic routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative argument {0} to q-factorial")]
    NegativeFactorial(i64),

    #[error("q-binomial [{n} choose {k}] out of range (need n >= k >= 0)")]
    BinomialRange { n: i64, k: i64 },

    #[error("truncation order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("series constant term {0} is not a unit of Z[q, q^-1]")]
    NotInvertible(String),

    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(u32, u32),

    #[error("rank must be at least 1")]
    ZeroRank,

    #[error("node {i} out of range for rank {rank}")]
    NodeOutOfRange { i: i32, rank: u32 },

    #[error("point {0} lies outside the lattice class of the other points")]
    MixedParity(LatticePoint),

    #[error("point {0} is not in the lattice X")]
    NotInX(LatticePoint),

    #[error("points {0} and {1} are not in snake position")]
    NotSnake(LatticePoint, LatticePoint),

    #[error("points {0} and {1} are not in prime snake position")]
    NotPrimeSnake(LatticePoint, LatticePoint),

    #[error("snake of length {0} is too short (need at least {1})")]
    SnakeTooShort(usize, usize),

    #[error("basis index {index} out of range for a module of dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("evaluation module V^({r})(q^{s}) does not lie in the lattice X (need r + s even)")]
    EvalParity { r: u32, s: i64 },

    #[error("vertex {0} is not in the quiver")]
    UnknownVertex(LatticePoint),

    #[error("vertex {0} is frozen")]
    FrozenVertex(LatticePoint),

    #[error("exchange relation at {0} is not exactly divisible (truncation contamination)")]
    Contamination(LatticePoint),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
