//! Fraction-free (Bareiss) elimination over the integers.
//!
//! Pivots are chosen column by column; within a column the first row (in
//! current order) holding a nonzero entry is used. After every step all
//! stored entries are minors of the input, so every division is exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{IntVector, SparseIntMatrix};

/// Result of a fraction-free elimination.
pub(crate) struct Elimination {
    /// Reduced matrix. In Gauss-Jordan mode every pivot entry equals
    /// `scale` and pivot columns are zero outside their pivot row.
    pub rows: Vec<Vec<BigInt>>,
    /// `(row, column)` of each pivot, in elimination order; pivot `r` lives
    /// in row `r`.
    pub pivots: Vec<usize>,
    /// The last pivot (1 for a zero matrix).
    pub scale: BigInt,
}

#[inline]
fn exact_div(num: BigInt, den: &BigInt) -> BigInt {
    if den.is_one() {
        return num;
    }
    let (q, r) = num.div_rem(den);
    debug_assert!(r.is_zero(), "fraction-free division was not exact");
    q
}

pub(crate) fn eliminate(mut a: Vec<Vec<BigInt>>, n_cols: usize, jordan: bool) -> Elimination {
    let n_rows = a.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n_cols {
        if r == n_rows {
            break;
        }
        let Some(pr) = (r..n_rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, pr);
        let pivot_row = std::mem::take(&mut a[r]);
        let p = pivot_row[c].clone();
        let start = if jordan { 0 } else { r + 1 };
        for (i, row) in a.iter_mut().enumerate().skip(start) {
            if i == r {
                continue;
            }
            let f = std::mem::take(&mut row[c]);
            for j in 0..n_cols {
                if j == c {
                    continue;
                }
                let x = &row[j];
                let y = &pivot_row[j];
                if x.is_zero() && (f.is_zero() || y.is_zero()) {
                    continue;
                }
                let mut v = &p * x;
                if !f.is_zero() && !y.is_zero() {
                    v -= &f * y;
                }
                row[j] = exact_div(v, &prev);
            }
            // Column c is eliminated in every non-pivot row.
            row[c] = BigInt::zero();
        }
        a[r] = pivot_row;
        prev = p;
        pivots.push(c);
        r += 1;
    }
    Elimination {
        rows: a,
        pivots,
        scale: prev,
    }
}

/// Rank over the rationals.
pub fn rank_exact(a: &SparseIntMatrix) -> usize {
    // Eliminating along the shorter side does less work.
    let dense = if a.n_rows() > a.n_cols() {
        a.transpose().to_dense()
    } else {
        a.to_dense()
    };
    let width = dense.first().map_or(0, Vec::len);
    eliminate(dense, width, false).pivots.len()
}

/// Divides by the gcd of the entries and makes the first nonzero entry
/// positive. The zero vector is returned unchanged.
pub fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return;
    }
    let negate = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    for x in v.iter_mut() {
        *x = &*x / &g;
        if negate {
            *x = -&*x;
        }
    }
}

/// A basis of the rational kernel, one primitive integer vector per
/// non-pivot column, ordered by that column.
pub fn kernel_basis(a: &SparseIntMatrix) -> Vec<IntVector> {
    let n = a.n_cols();
    let elim = eliminate(a.to_dense(), n, true);
    let mut is_pivot = vec![false; n];
    for &c in &elim.pivots {
        is_pivot[c] = true;
    }
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![BigInt::zero(); n];
            v[f] = elim.scale.clone();
            for (r, &pc) in elim.pivots.iter().enumerate() {
                v[pc] = -&elim.rows[r][f];
            }
            make_primitive(&mut v);
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> SparseIntMatrix {
        let vs: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        SparseIntMatrix::from_row_vectors(rows[0].len(), &vs).unwrap()
    }

    #[test]
    fn identity_rank() {
        assert_eq!(rank_exact(&SparseIntMatrix::identity(3)), 3);
        assert!(kernel_basis(&SparseIntMatrix::identity(2)).is_empty());
    }

    #[test]
    fn zero_and_empty() {
        assert_eq!(rank_exact(&SparseIntMatrix::zeros(2, 2)), 0);
        assert_eq!(rank_exact(&SparseIntMatrix::zeros(0, 0)), 0);
        assert_eq!(kernel_basis(&SparseIntMatrix::zeros(2, 3)).len(), 3);
    }

    #[test]
    fn rank_deficient() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank_exact(&m), 2);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 1);
        let expect: Vec<BigInt> = [1, 1, -1].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(k[0], expect);
        assert!(m.mul_vec(&k[0]).unwrap().iter().all(Zero::is_zero));
    }

    #[test]
    fn kernel_is_primitive_with_positive_lead() {
        let m = mat(&[&[3, 0, 2, -6], &[0, 5, 0, 10]]);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
            let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            assert!(g.is_one());
            assert!(v.iter().find(|x| !x.is_zero()).unwrap().is_positive());
        }
    }
}
