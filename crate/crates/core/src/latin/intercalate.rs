//! The intercalate basis of the latin trade space.
//!
//! For `1 <= i, j, k <= n-1`, `B_ijk` is the intercalate on rows {0, i},
//! columns {0, j}, symbols {0, k} with
//! `P = {(0,0;0), (0,j;k), (i,0;k), (i,j;0)}`. Its vector is the tensor
//! `(e0 - ei) x (e0 - ej) x (e0 - ek)`, so `B_ijk` is the only basis
//! element touching a triple with all coordinates nonzero, where it is -1.
//! That makes decomposition a read-off: `c_ijk = -v[i,j,k]`.

use std::fmt;

use super::{LatinError, LatinInclusionMatrix, LatinTrade, PartialLatinSquare, TripleVector};

/// Label `(i, j, k)` of an anchored intercalate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Intercalate {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl Intercalate {
    pub fn new(i: usize, j: usize, k: usize, n: usize) -> Result<Self, LatinError> {
        if [i, j, k].iter().any(|&x| x == 0 || x >= n) {
            return Err(LatinError::IntercalateOutOfRange { i, j, k, n });
        }
        Ok(Intercalate { i, j, k })
    }

    pub fn p_triples(self) -> [(usize, usize, usize); 4] {
        let Intercalate { i, j, k } = self;
        [(0, 0, 0), (0, j, k), (i, 0, k), (i, j, 0)]
    }

    pub fn q_triples(self) -> [(usize, usize, usize); 4] {
        let Intercalate { i, j, k } = self;
        [(0, 0, k), (0, j, 0), (i, 0, 0), (i, j, k)]
    }

    pub fn trade(self, n: usize) -> LatinTrade {
        let p = PartialLatinSquare::from_triples(n, self.p_triples()).expect("intercalate is partial latin");
        let q = PartialLatinSquare::from_triples(n, self.q_triples()).expect("intercalate is partial latin");
        LatinTrade::new(p, q).expect("intercalate is a trade")
    }

    pub fn vector(self, n: usize) -> TripleVector {
        let mut v = TripleVector::zeros(n);
        self.add_to(&mut v, 1);
        v
    }

    /// `v += factor * B_ijk` without allocating.
    pub fn add_to(self, v: &mut TripleVector, factor: i64) {
        for (a, b, c) in self.p_triples() {
            v.set(a, b, c, v.get(a, b, c) + factor);
        }
        for (a, b, c) in self.q_triples() {
            v.set(a, b, c, v.get(a, b, c) - factor);
        }
    }
}

impl fmt::Display for Intercalate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.i, self.j, self.k)
    }
}

/// The anchored intercalate `B_ijk` as a trade.
pub fn intercalate(i: usize, j: usize, k: usize, n: usize) -> Result<LatinTrade, LatinError> {
    Ok(Intercalate::new(i, j, k, n)?.trade(n))
}

/// Labels of the `(n-1)^3` basis intercalates, lexicographic in `(i,j,k)`.
pub fn intercalate_labels(n: usize) -> Result<Vec<Intercalate>, LatinError> {
    if n < 2 {
        return Err(LatinError::OrderTooSmall { n, min: 2 });
    }
    let mut out = Vec::with_capacity((n - 1).pow(3));
    for i in 1..n {
        for j in 1..n {
            for k in 1..n {
                out.push(Intercalate { i, j, k });
            }
        }
    }
    Ok(out)
}

/// Vectors of the basis intercalates, in label order.
pub fn intercalate_basis(n: usize) -> Result<Vec<TripleVector>, LatinError> {
    Ok(intercalate_labels(n)?.into_iter().map(|b| b.vector(n)).collect())
}

/// Integer coefficients over the intercalate basis, indexed by label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntercalateCoefficients {
    n: usize,
    coeffs: Vec<i64>,
}

impl IntercalateCoefficients {
    fn slot(&self, i: usize, j: usize, k: usize) -> usize {
        let m = self.n - 1;
        ((i - 1) * m + (j - 1)) * m + (k - 1)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> i64 {
        self.coeffs[self.slot(i, j, k)]
    }

    /// All coefficients in label order.
    pub fn as_slice(&self) -> &[i64] {
        &self.coeffs
    }

    /// Nonzero `(label, coefficient)` pairs in label order.
    pub fn nonzero(&self) -> Vec<(Intercalate, i64)> {
        intercalate_labels(self.n)
            .unwrap()
            .into_iter()
            .zip(&self.coeffs)
            .filter(|(_, &c)| c != 0)
            .map(|(b, &c)| (b, c))
            .collect()
    }

    /// Total number of unit moves, `sum |c|`.
    pub fn weight(&self) -> u64 {
        self.coeffs.iter().map(|c| c.unsigned_abs()).sum()
    }

    pub fn reconstruct(&self) -> TripleVector {
        let mut v = TripleVector::zeros(self.n);
        for (b, c) in self.nonzero() {
            b.add_to(&mut v, c);
        }
        v
    }
}

/// Writes a kernel vector as a combination of basis intercalates.
pub fn decompose(v: &TripleVector) -> Result<IntercalateCoefficients, LatinError> {
    let n = v.order();
    if n < 2 {
        return Err(LatinError::OrderTooSmall { n, min: 2 });
    }
    LatinInclusionMatrix::build(n)?.check_kernel(v)?;
    let mut coeffs = Vec::with_capacity((n - 1).pow(3));
    for i in 1..n {
        for j in 1..n {
            for k in 1..n {
                coeffs.push(-v.get(i, j, k));
            }
        }
    }
    let c = IntercalateCoefficients { n, coeffs };
    let rebuilt = c.reconstruct();
    if &rebuilt != v {
        return Err(LatinError::Reconstruction);
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_form() {
        let n = 4;
        for b in intercalate_labels(n).unwrap() {
            let v = b.vector(n);
            let e = |a: usize, x: usize| -> i64 {
                (x == 0) as i64 - (x == a) as i64
            };
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        assert_eq!(v.get(x, y, z), e(b.i, x) * e(b.j, y) * e(b.k, z));
                    }
                }
            }
        }
    }

    #[test]
    fn labels_rejected_out_of_range() {
        assert!(intercalate(0, 1, 1, 3).is_err());
        assert!(intercalate(1, 3, 1, 3).is_err());
        assert!(intercalate(2, 2, 2, 3).is_ok());
        assert!(matches!(intercalate_basis(1), Err(LatinError::OrderTooSmall { .. })));
    }

    #[test]
    fn first_intercalate_n2() {
        let v = intercalate(1, 1, 1, 2).unwrap().vector();
        let plus = [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)];
        let minus = [(0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1)];
        for (i, j, k) in plus {
            assert_eq!(v.get(i, j, k), 1);
        }
        for (i, j, k) in minus {
            assert_eq!(v.get(i, j, k), -1);
        }
    }

    #[test]
    fn basis_counts() {
        assert_eq!(intercalate_basis(2).unwrap().len(), 1);
        assert_eq!(intercalate_basis(3).unwrap().len(), 8);
        assert_eq!(intercalate_basis(4).unwrap().len(), 27);
    }

    #[test]
    fn decompose_zero_and_single() {
        let c = decompose(&TripleVector::zeros(3)).unwrap();
        assert!(c.as_slice().iter().all(|&x| x == 0));
        let v = Intercalate::new(2, 3, 1, 5).unwrap().vector(5);
        let c = decompose(&v).unwrap();
        assert_eq!(c.nonzero(), vec![(Intercalate { i: 2, j: 3, k: 1 }, 1)]);
    }

    #[test]
    fn decompose_rejects_non_kernel() {
        let mut v = TripleVector::zeros(3);
        v.set(1, 1, 1, 1);
        assert!(matches!(decompose(&v), Err(LatinError::KernelMembership { row: 4, .. })));
    }
}
