use num_bigint::BigInt;

use crate::linalg::IntVector;

/// Which pair of triple coordinates a line fixes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LineKind {
    /// (row, column), a cell
    RowColumn,
    /// (row, symbol)
    RowSymbol,
    /// (column, symbol)
    ColumnSymbol,
}

impl LineKind {
    pub const ALL: [LineKind; 3] = [LineKind::RowColumn, LineKind::RowSymbol, LineKind::ColumnSymbol];

    pub fn block(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            LineKind::RowColumn => "row-column",
            LineKind::RowSymbol => "row-symbol",
            LineKind::ColumnSymbol => "column-symbol",
        }
    }

    /// The two coordinates of `(i, j, k)` this line kind fixes.
    pub fn project(self, i: usize, j: usize, k: usize) -> (usize, usize) {
        match self {
            LineKind::RowColumn => (i, j),
            LineKind::RowSymbol => (i, k),
            LineKind::ColumnSymbol => (j, k),
        }
    }
}

/// Integer vector over the `n^3` triples `(row, column, symbol)`, indexed
/// `i*n^2 + j*n + k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TripleVector {
    n: usize,
    entries: Vec<i64>,
}

impl TripleVector {
    pub fn zeros(n: usize) -> Self {
        TripleVector {
            n,
            entries: vec![0; n * n * n],
        }
    }

    pub fn from_entries(n: usize, entries: Vec<i64>) -> Self {
        assert_eq!(entries.len(), n * n * n, "triple vector length must be n^3");
        TripleVector { n, entries }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn index(n: usize, i: usize, j: usize, k: usize) -> usize {
        i * n * n + j * n + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> i64 {
        self.entries[Self::index(self.n, i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: i64) {
        let idx = Self::index(self.n, i, j, k);
        self.entries[idx] = value;
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// `(i, j, k, value)` for each nonzero entry, in index order.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, usize, i64)> + '_ {
        let n = self.n;
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(move |(idx, &x)| (idx / (n * n), (idx / n) % n, idx % n, x))
    }

    pub fn support_size(&self) -> usize {
        self.entries.iter().filter(|&&x| x != 0).count()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    /// `self + factor * other`.
    pub fn add_scaled(&self, other: &TripleVector, factor: i64) -> TripleVector {
        assert_eq!(self.n, other.n);
        TripleVector {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + factor * b).collect(),
        }
    }

    pub fn sub(&self, other: &TripleVector) -> TripleVector {
        self.add_scaled(other, -1)
    }

    /// Sums along every line, as a `3 x n x n` table indexed by
    /// [`LineKind::block`] and the two fixed coordinates.
    pub fn line_sums(&self) -> Vec<Vec<Vec<i64>>> {
        let n = self.n;
        let mut sums = vec![vec![vec![0i64; n]; n]; 3];
        for (i, j, k, x) in self.nonzero() {
            for kind in LineKind::ALL {
                let (a, b) = kind.project(i, j, k);
                sums[kind.block()][a][b] += x;
            }
        }
        sums
    }

    /// First line whose sum differs from `expected`, as `(kind, a, b, sum)`.
    pub fn first_bad_line(&self, expected: i64) -> Option<(LineKind, usize, usize, i64)> {
        let sums = self.line_sums();
        for kind in LineKind::ALL {
            for (a, row) in sums[kind.block()].iter().enumerate() {
                for (b, &s) in row.iter().enumerate() {
                    if s != expected {
                        return Some((kind, a, b, s));
                    }
                }
            }
        }
        None
    }

    /// Entries outside `{0, 1}`.
    pub fn improper_cells(&self) -> usize {
        self.entries.iter().filter(|&&x| x != 0 && x != 1).count()
    }

    /// All line sums 1 and all entries in {0, 1}.
    pub fn is_latin_square(&self) -> bool {
        self.improper_cells() == 0 && self.first_bad_line(1).is_none()
    }

    pub fn to_int_vector(&self) -> IntVector {
        self.entries.iter().map(|&x| BigInt::from(x)).collect()
    }
}
