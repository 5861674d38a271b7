//! Latin squares, latin trades, and the intercalate basis.

mod intercalate;
pub mod io;
mod matrix;
mod moves;
mod square;
mod trade;
mod vector;

use thiserror::Error;

pub use intercalate::{
    decompose, intercalate, intercalate_basis, intercalate_labels, Intercalate, IntercalateCoefficients,
};
pub use matrix::LatinInclusionMatrix;
pub use moves::{apply_move, format_plan, parse_plan, replay, transform, MoveOutcome};
pub use square::{LatinSquare, PartialLatinSquare};
pub use trade::{difference_trade, trade_vector, validate_trade, LatinTrade, TradeViolation};
pub use vector::{LineKind, TripleVector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatinError {
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error("order {n} is below the minimum {min}")]
    OrderTooSmall { n: usize, min: usize },
    #[error("orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("symbol {symbol} outside 0..{n}")]
    SymbolOutOfRange { symbol: usize, n: usize },
    #[error("{0}")]
    Shape(String),
    #[error("not latin: {0}")]
    NotLatin(String),
    #[error("invalid trade: {0}")]
    InvalidTrade(TradeViolation),
    #[error("intercalate ({i},{j},{k}) needs indices in 1..{n}")]
    IntercalateOutOfRange { i: usize, j: usize, k: usize, n: usize },
    #[error("vector is not in the kernel: {line} (row {row}) sums to {sum}")]
    KernelMembership { row: usize, line: String, sum: i64 },
    #[error("malformed state: {line} sums to {sum}, expected 1")]
    MalformedState { line: String, sum: i64 },
    #[error("the squares are identical")]
    IdenticalSquares,
    #[error("reconstruction from coefficients did not reproduce the input")]
    Reconstruction,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
