use thiserror::Error;

use crate::digraph::CycleType;

/// Errors reported by constructors and operations across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order must be at least 1")]
    InvalidOrder,

    #[error("arc ({u}, {v}) has an endpoint outside [1, {n}]")]
    ArcOutOfRange { u: usize, v: usize, n: usize },

    #[error("duplicate arc ({u}, {v})")]
    DuplicateArc { u: usize, v: usize },

    #[error("image is not a bijection of [1, {n}]")]
    NotBijective { n: usize },

    #[error("vertex {vertex} does not have in-degree and out-degree 1")]
    NotOneRegular { vertex: usize },

    #[error("position ({row}, {col}) lies outside the {n}x{n} board")]
    PositionOutOfRange { row: usize, col: usize, n: usize },

    #[error("duplicate queen at ({row}, {col})")]
    DuplicateQueen { row: usize, col: usize },

    #[error("two queens share row {row}")]
    RepeatedRow { row: usize },

    #[error("two queens share column {col}")]
    RepeatedColumn { col: usize },

    #[error("family must contain at least one digraph")]
    EmptyFamily,

    #[error("family member {index} has order {found}, expected {expected}")]
    FamilyOrderMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("assignment index {index} is out of range for a family of {len}")]
    AssignmentIndexOutOfRange { index: usize, len: usize },

    #[error("arc ({u}, {v}) has no assigned family member")]
    UnassignedArc { u: usize, v: usize },

    #[error("expected {expected} assignment indices, got {found}")]
    AssignmentLengthMismatch { expected: usize, found: usize },

    #[error("assignment mentions ({u}, {v}), which is not an arc of the base digraph")]
    UnknownAssignmentArc { u: usize, v: usize },

    #[error("{g} is not invertible modulo {modulus}")]
    NotCoprime { g: u64, modulus: u64 },

    #[error("modulus must be at least 2")]
    InvalidModulus,

    #[error("{p} is not an odd prime")]
    NotOddPrime { p: u64 },

    #[error("order {n} must be odd")]
    EvenOrder { n: usize },

    #[error("m = {m} must be at least 3 and congruent to 0 or 1 mod 3")]
    InvalidThreeCycleParameter { m: usize },

    #[error("2 is not a primitive root of {p}")]
    NotPrimitiveRoot { p: u64 },

    #[error("standard solutions must be nonempty, share one order and have order greater than 3")]
    BadStandardFamily,

    #[error("standard solution {index} is not a valid queens solution")]
    InvalidStandardSolution { index: usize },

    #[error("modular factor is not a valid modular queens solution of order greater than 3")]
    InvalidModularFactor,

    #[error("gcd({n}, 6) must be 1")]
    GcdConstraint { n: usize },

    #[error("pi must have {expected} entries, each below {family}")]
    BadPi { expected: usize, family: usize },

    #[error("predicted cycle type {predicted} does not match the computed type {actual}")]
    PredictionMismatch {
        predicted: CycleType,
        actual: CycleType,
    },

    #[error("bound check requires 1 <= m, n <= 7 with gcd(m,6) = gcd(n,6) = 1; got ({m}, {n})")]
    BoundCheckInfeasible { m: usize, n: usize },

    #[error("family size {requested} is not in [1, {available}]")]
    BadFamilySize { requested: usize, available: usize },

    #[error("exhaustive bound check would generate {products} products; the cap is {cap}")]
    BoundCheckTooLarge { products: u128, cap: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;
