use crate::linalg::SparseIntMatrix;

use super::{LatinError, LineKind, TripleVector};

/// The `3n^2 x n^3` inclusion matrix between lines and triples.
///
/// Rows come in three blocks (row-column, row-symbol, column-symbol), each
/// ordered lexicographically by the two fixed coordinates. Entry
/// `[(kind, a, b), (i, j, k)]` is 1 iff the triple lies on that line.
#[derive(Clone, Debug)]
pub struct LatinInclusionMatrix {
    n: usize,
    matrix: SparseIntMatrix,
}

impl LatinInclusionMatrix {
    pub fn build(n: usize) -> Result<Self, LatinError> {
        if n == 0 {
            return Err(LatinError::ZeroOrder);
        }
        let mut entries = Vec::with_capacity(3 * n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let col = TripleVector::index(n, i, j, k);
                    for kind in LineKind::ALL {
                        let (a, b) = kind.project(i, j, k);
                        entries.push((Self::row_index(n, kind, a, b), col, 1));
                    }
                }
            }
        }
        let matrix = SparseIntMatrix::from_entries(3 * n * n, n * n * n, entries)
            .expect("inclusion matrix entries are in range and distinct");
        Ok(LatinInclusionMatrix { n, matrix })
    }

    pub fn row_index(n: usize, kind: LineKind, a: usize, b: usize) -> usize {
        kind.block() * n * n + a * n + b
    }

    /// Inverse of [`row_index`](Self::row_index).
    pub fn row_label(&self, row: usize) -> (LineKind, usize, usize) {
        let n = self.n;
        let kind = LineKind::ALL[row / (n * n)];
        (kind, (row / n) % n, row % n)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &SparseIntMatrix {
        &self.matrix
    }

    /// `M v`, which lists the line sums block by block.
    pub fn apply(&self, v: &TripleVector) -> Vec<i64> {
        assert_eq!(v.order(), self.n);
        self.matrix.mul_vec_i64(v.entries()).expect("length n^3")
    }

    /// Checks `M v = 0`, reporting the first violated row.
    pub fn check_kernel(&self, v: &TripleVector) -> Result<(), LatinError> {
        if v.order() != self.n {
            return Err(LatinError::OrderMismatch {
                left: self.n,
                right: v.order(),
            });
        }
        match self.apply(v).iter().position(|&x| x != 0) {
            None => Ok(()),
            Some(row) => {
                let (kind, a, b) = self.row_label(row);
                Err(LatinError::KernelMembership {
                    row,
                    line: format!("{} ({a},{b})", kind.name()),
                    sum: self.apply(v)[row],
                })
            }
        }
    }
}
