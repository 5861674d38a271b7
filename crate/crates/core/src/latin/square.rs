use std::collections::BTreeSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use super::{LatinError, TripleVector};

/// A latin square of order `n`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatinSquare {
    n: usize,
    cells: Vec<usize>,
}

impl LatinSquare {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, LatinError> {
        let n = rows.len();
        if n == 0 {
            return Err(LatinError::ZeroOrder);
        }
        let mut cells = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(LatinError::Shape(format!("row {i} has {} cells, expected {n}", row.len())));
            }
            cells.extend(row);
        }
        let sq = LatinSquare { n, cells };
        sq.check()?;
        Ok(sq)
    }

    fn check(&self) -> Result<(), LatinError> {
        let n = self.n;
        if let Some(pos) = self.cells.iter().position(|&s| s >= n) {
            return Err(LatinError::SymbolOutOfRange {
                symbol: self.cells[pos],
                n,
            });
        }
        for i in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for j in 0..n {
                let r = self.get(i, j);
                if std::mem::replace(&mut seen_row[r], true) {
                    return Err(LatinError::NotLatin(format!("symbol {r} repeated in row {i}")));
                }
                let c = self.get(j, i);
                if std::mem::replace(&mut seen_col[c], true) {
                    return Err(LatinError::NotLatin(format!("symbol {c} repeated in column {i}")));
                }
            }
        }
        Ok(())
    }

    /// The cyclic square `L[i][j] = (i + j) mod n`.
    pub fn cyclic(n: usize) -> Self {
        LatinSquare {
            n,
            cells: (0..n * n).map(|x| (x / n + x % n) % n).collect(),
        }
    }

    /// A random latin square, filled cell by cell with randomized
    /// backtracking.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        fn fill<R: Rng + ?Sized>(
            n: usize,
            pos: usize,
            cells: &mut [usize],
            row_used: &mut [Vec<bool>],
            col_used: &mut [Vec<bool>],
            rng: &mut R,
        ) -> bool {
            if pos == n * n {
                return true;
            }
            let (i, j) = (pos / n, pos % n);
            let mut symbols: Vec<usize> = (0..n).filter(|&s| !row_used[i][s] && !col_used[j][s]).collect();
            symbols.shuffle(rng);
            for s in symbols {
                cells[pos] = s;
                row_used[i][s] = true;
                col_used[j][s] = true;
                if fill(n, pos + 1, cells, row_used, col_used, rng) {
                    return true;
                }
                row_used[i][s] = false;
                col_used[j][s] = false;
            }
            false
        }
        let mut cells = vec![0; n * n];
        let mut row_used = vec![vec![false; n]; n];
        let mut col_used = vec![vec![false; n]; n];
        let ok = fill(n, 0, &mut cells, &mut row_used, &mut col_used, rng);
        debug_assert!(ok);
        LatinSquare { n, cells }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> usize {
        self.cells[row * self.n + col]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    /// The triples `(i, j, L_ij)` in row-major order.
    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        (0..self.n * self.n).map(move |x| (x / self.n, x % self.n, self.cells[x]))
    }

    /// 0/1 indicator vector of the triples.
    pub fn to_vector(&self) -> TripleVector {
        let mut v = TripleVector::zeros(self.n);
        for (i, j, k) in self.triples() {
            v.set(i, j, k, 1);
        }
        v
    }

    /// Inverse of [`to_vector`](Self::to_vector); `None` unless the vector
    /// is the indicator of a latin square.
    pub fn from_vector(v: &TripleVector) -> Option<Self> {
        if !v.is_latin_square() {
            return None;
        }
        let n = v.order();
        let mut cells = vec![0; n * n];
        for (i, j, k, x) in v.nonzero() {
            if x == 1 {
                cells[i * n + j] = k;
            }
        }
        Some(LatinSquare { n, cells })
    }

    pub fn to_partial(&self) -> PartialLatinSquare {
        PartialLatinSquare {
            n: self.n,
            cells: self.cells.iter().map(|&s| Some(s)).collect(),
        }
    }
}

impl fmt::Display for LatinSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.n)?;
        for row in self.cells.chunks(self.n) {
            let line: Vec<String> = row.iter().map(usize::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// A partially filled array in which each symbol occurs at most once per row
/// and per column.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialLatinSquare {
    n: usize,
    cells: Vec<Option<usize>>,
}

impl PartialLatinSquare {
    pub fn empty(n: usize) -> Self {
        PartialLatinSquare {
            n,
            cells: vec![None; n * n],
        }
    }

    pub fn from_triples<I>(n: usize, triples: I) -> Result<Self, LatinError>
    where
        I: IntoIterator<Item = (usize, usize, usize)>,
    {
        let mut p = Self::empty(n);
        for (i, j, k) in triples {
            if i >= n || j >= n || k >= n {
                return Err(LatinError::Shape(format!("triple ({i},{j};{k}) outside order {n}")));
            }
            if p.cells[i * n + j].replace(k).is_some() {
                return Err(LatinError::NotLatin(format!("cell ({i},{j}) filled twice")));
            }
        }
        p.check()?;
        Ok(p)
    }

    /// Builds from rows of optional symbols (`None` = empty cell).
    pub fn from_rows(rows: Vec<Vec<Option<usize>>>) -> Result<Self, LatinError> {
        let n = rows.len();
        let mut triples = Vec::new();
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(LatinError::Shape(format!("row {i} has {} cells, expected {n}", row.len())));
            }
            triples.extend(row.into_iter().enumerate().filter_map(|(j, s)| s.map(|k| (i, j, k))));
        }
        Self::from_triples(n, triples)
    }

    fn check(&self) -> Result<(), LatinError> {
        let n = self.n;
        for r in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for c in 0..n {
                if let Some(s) = self.get(r, c) {
                    if std::mem::replace(&mut seen_row[s], true) {
                        return Err(LatinError::NotLatin(format!("symbol {s} repeated in row {r}")));
                    }
                }
                if let Some(s) = self.get(c, r) {
                    if std::mem::replace(&mut seen_col[s], true) {
                        return Err(LatinError::NotLatin(format!("symbol {s} repeated in column {r}")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> Option<usize> {
        self.cells[row * self.n + col]
    }

    /// Filled cells.
    pub fn shape(&self) -> BTreeSet<(usize, usize)> {
        self.triples().map(|(i, j, _)| (i, j)).collect()
    }

    pub fn volume(&self) -> usize {
        self.cells.iter().filter(|c| c.is_some()).count()
    }

    pub fn row_content(&self, r: usize) -> BTreeSet<usize> {
        (0..self.n).filter_map(|c| self.get(r, c)).collect()
    }

    pub fn column_content(&self, c: usize) -> BTreeSet<usize> {
        (0..self.n).filter_map(|r| self.get(r, c)).collect()
    }

    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.cells
            .iter()
            .enumerate()
            .filter_map(move |(x, s)| s.map(|k| (x / self.n, x % self.n, k)))
    }

    pub fn to_vector(&self) -> TripleVector {
        let mut v = TripleVector::zeros(self.n);
        for (i, j, k) in self.triples() {
            v.set(i, j, k, 1);
        }
        v
    }

    /// Grid lines with `.` for empty cells, without a header.
    pub fn grid(&self) -> String {
        let mut out = String::new();
        for r in 0..self.n {
            let line: Vec<String> = (0..self.n)
                .map(|c| self.get(r, c).map_or_else(|| ".".to_string(), |s| s.to_string()))
                .collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for PartialLatinSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.n)?;
        f.write_str(&self.grid())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn cyclic_is_latin() {
        for n in 1..7 {
            let sq = LatinSquare::cyclic(n);
            assert!(LatinSquare::new(sq.rows()).is_ok());
        }
    }

    #[test]
    fn rejects_repeats() {
        assert!(LatinSquare::new(vec![vec![0, 1], vec![0, 1]]).is_err());
        assert!(LatinSquare::new(vec![vec![0, 2], vec![2, 0]]).is_err());
        assert!(matches!(LatinSquare::new(vec![]), Err(LatinError::ZeroOrder)));
    }

    #[test]
    fn random_squares_are_latin() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..8 {
            let sq = LatinSquare::random(n, &mut rng);
            assert!(LatinSquare::new(sq.rows()).is_ok());
            assert_eq!(LatinSquare::from_vector(&sq.to_vector()).unwrap(), sq);
        }
    }

    #[test]
    fn partial_contents() {
        let p = PartialLatinSquare::from_rows(vec![
            vec![Some(0), None, Some(2)],
            vec![None, None, None],
            vec![Some(1), Some(2), None],
        ])
        .unwrap();
        assert_eq!(p.volume(), 4);
        assert_eq!(p.row_content(0), [0, 2].into());
        assert_eq!(p.column_content(0), [0, 1].into());
        assert_eq!(p.grid(), "0 . 2\n. . .\n1 2 .\n");
        assert!(PartialLatinSquare::from_rows(vec![vec![Some(0), Some(0)], vec![None, None]]).is_err());
    }
}
