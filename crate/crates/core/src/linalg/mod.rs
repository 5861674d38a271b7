//! Exact integer and rational linear algebra.
//!
//! Everything here is arbitrary precision. Modular arithmetic is only used
//! where its answer is a certified bound or is verified exactly afterwards.

mod exact;
mod hnf;
mod modular;
pub mod primes;
mod sparse;
mod span;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub use exact::{kernel_basis, make_primitive, rank_exact};
pub use hnf::{hermite_normal_form, integer_kernel_basis, lattice_equal, HNF_MAX_DIM};
pub use modular::{rank_mod_p, residue, residue_i64, ModEchelon};
pub use sparse::SparseIntMatrix;
pub use span::{coefficients_in_span, rational_reconstruction, recombines_to, SpanResult, SpanSolver};

/// Integer vector with arbitrary-precision entries.
pub type IntVector = Vec<BigInt>;

/// Vector of reduced rationals (positive denominators).
pub type RationalVector = Vec<BigRational>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("entry ({row}, {col}) outside a {n_rows}x{n_cols} matrix")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        n_rows: usize,
        n_cols: usize,
    },
    #[error("duplicate entry at ({row}, {col})")]
    DuplicateEntry { row: usize, col: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("modulus {0} is not a prime below 2^63")]
    InvalidModulus(u64),
    #[error("{what}: size {size} exceeds the cap of {cap}")]
    ResourceBudget {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Converts machine integers to an [`IntVector`].
pub fn int_vector(xs: &[i64]) -> IntVector {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

/// Rank over GF(p) for each prime in `primes`.
pub fn ranks_mod_primes(a: &SparseIntMatrix, primes: &[u64]) -> Result<Vec<usize>, LinalgError> {
    primes.iter().map(|&p| rank_mod_p(a, p)).collect()
}
