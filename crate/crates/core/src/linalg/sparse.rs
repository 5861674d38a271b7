use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::LinalgError;

/// Exact integer matrix stored row-wise; each row keeps its nonzero entries
/// sorted by column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseIntMatrix {
    n_rows: usize,
    n_cols: usize,
    rows: Vec<Vec<(usize, BigInt)>>,
}

impl SparseIntMatrix {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        SparseIntMatrix {
            n_rows,
            n_cols,
            rows: vec![Vec::new(); n_rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for (i, row) in m.rows.iter_mut().enumerate() {
            row.push((i, BigInt::from(1)));
        }
        m
    }

    /// Builds a matrix from `(row, col, value)` triples. Zero values are
    /// dropped; duplicate keys and out-of-range indices are rejected.
    pub fn from_entries<I, V>(n_rows: usize, n_cols: usize, entries: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = (usize, usize, V)>,
        V: Into<BigInt>,
    {
        let mut rows: Vec<Vec<(usize, BigInt)>> = vec![Vec::new(); n_rows];
        for (r, c, v) in entries {
            if r >= n_rows || c >= n_cols {
                return Err(LinalgError::IndexOutOfRange {
                    row: r,
                    col: c,
                    n_rows,
                    n_cols,
                });
            }
            let v = v.into();
            if !v.is_zero() {
                rows[r].push((c, v));
            }
        }
        for (r, row) in rows.iter_mut().enumerate() {
            row.sort_by_key(|(c, _)| *c);
            if let Some(w) = row.windows(2).find(|w| w[0].0 == w[1].0) {
                return Err(LinalgError::DuplicateEntry { row: r, col: w[0].0 });
            }
        }
        Ok(SparseIntMatrix { n_rows, n_cols, rows })
    }

    /// Stacks the given vectors as the rows of a matrix.
    pub fn from_row_vectors(n_cols: usize, vectors: &[Vec<BigInt>]) -> Result<Self, LinalgError> {
        let mut rows = Vec::with_capacity(vectors.len());
        for v in vectors {
            if v.len() != n_cols {
                return Err(LinalgError::DimensionMismatch {
                    expected: n_cols,
                    found: v.len(),
                });
            }
            rows.push(
                v.iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(c, x)| (c, x.clone()))
                    .collect(),
            );
        }
        Ok(SparseIntMatrix {
            n_rows: vectors.len(),
            n_cols,
            rows,
        })
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn row(&self, r: usize) -> &[(usize, BigInt)] {
        &self.rows[r]
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        self.rows[r]
            .binary_search_by_key(&c, |(col, _)| *col)
            .map(|i| self.rows[r][i].1.clone())
            .unwrap_or_default()
    }

    /// All stored entries in (row, col) order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn transpose(&self) -> Self {
        let mut rows: Vec<Vec<(usize, BigInt)>> = vec![Vec::new(); self.n_cols];
        for (r, c, v) in self.entries() {
            rows[c].push((r, v.clone()));
        }
        SparseIntMatrix {
            n_rows: self.n_cols,
            n_cols: self.n_rows,
            rows,
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut out = vec![vec![BigInt::zero(); self.n_cols]; self.n_rows];
        for (r, c, v) in self.entries() {
            out[r][c] = v.clone();
        }
        out
    }

    pub fn mul_vec(&self, x: &[BigInt]) -> Result<Vec<BigInt>, LinalgError> {
        if x.len() != self.n_cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.n_cols,
                found: x.len(),
            });
        }
        Ok(self
            .rows
            .iter()
            .map(|row| row.iter().map(|(c, v)| v * &x[*c]).sum())
            .collect())
    }

    /// Product with a machine-integer vector. Entries of the matrix must fit
    /// in an `i64`, which holds for every 0/1 inclusion matrix.
    pub fn mul_vec_i64(&self, x: &[i64]) -> Result<Vec<i64>, LinalgError> {
        if x.len() != self.n_cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.n_cols,
                found: x.len(),
            });
        }
        Ok(self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|(c, v)| v.to_i64().expect("matrix entry exceeds i64") * x[*c])
                    .sum()
            })
            .collect())
    }

    /// Number of nonzero entries per column.
    pub fn column_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.n_cols];
        for (_, c, _) in self.entries() {
            counts[c] += 1;
        }
        counts
    }

    /// Debug dump: a `rows=<r> cols=<c>` header, then one `row col value`
    /// line per stored entry.
    pub fn dump(&self) -> String {
        let mut out = format!("rows={} cols={}\n", self.n_rows, self.n_cols);
        for (r, c, v) in self.entries() {
            writeln!(out, "{r} {c} {v}").unwrap();
        }
        out
    }

    pub fn parse_dump(text: &str) -> Result<Self, LinalgError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .enumerate()
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (_, header) = lines.next().ok_or_else(|| LinalgError::Parse {
            line: 1,
            message: "missing `rows=<r> cols=<c>` header".into(),
        })?;
        let mut n_rows = None;
        let mut n_cols = None;
        for tok in header.split_whitespace() {
            match tok.split_once('=') {
                Some(("rows", v)) => n_rows = v.parse::<usize>().ok(),
                Some(("cols", v)) => n_cols = v.parse::<usize>().ok(),
                _ => {}
            }
        }
        let (n_rows, n_cols) = n_rows.zip(n_cols).ok_or_else(|| LinalgError::Parse {
            line: 1,
            message: format!("bad header `{header}`"),
        })?;
        let mut entries = Vec::new();
        for (idx, line) in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            let bad = || LinalgError::Parse {
                line: idx + 1,
                message: format!("expected `row col value`, got `{line}`"),
            };
            if parts.len() != 3 {
                return Err(bad());
            }
            let r = parts[0].parse::<usize>().map_err(|_| bad())?;
            let c = parts[1].parse::<usize>().map_err(|_| bad())?;
            let v = parts[2].parse::<BigInt>().map_err(|_| bad())?;
            entries.push((r, c, v));
        }
        Self::from_entries(n_rows, n_cols, entries)
    }
}
