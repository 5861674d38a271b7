//! Hermite normal form of integer lattices given by generators.
//!
//! Generators are rows; the lattice is their integer row span. The reduced
//! form has strictly increasing pivot columns, positive pivots, and entries
//! above each pivot in `[0, pivot)`. It is unique for a given lattice, so
//! two families generate the same lattice exactly when their forms agree.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{IntVector, LinalgError, SparseIntMatrix};

/// Largest generator count or vector length accepted by the HNF routines.
pub const HNF_MAX_DIM: usize = 600;

fn check_budget(count: usize, len: usize) -> Result<(), LinalgError> {
    if count > HNF_MAX_DIM || len > HNF_MAX_DIM {
        return Err(LinalgError::ResourceBudget {
            what: "hermite normal form",
            size: count.max(len),
            cap: HNF_MAX_DIM,
        });
    }
    Ok(())
}

fn sub_multiple(dst: &mut [BigInt], src: &[BigInt], q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d -= q * s;
        }
    }
}

/// Reduces `rows` in place, pivoting only on the first `width` columns.
/// Returns the number of pivot rows; they occupy the front of `rows`, and
/// the remaining rows are zero on the first `width` columns.
fn reduce(rows: &mut [Vec<BigInt>], width: usize) -> usize {
    let m = rows.len();
    let mut r = 0;
    for c in 0..width {
        if r == m {
            break;
        }
        // Euclid on column c among rows r..m.
        loop {
            let best = (r..m)
                .filter(|&i| !rows[i][c].is_zero())
                .min_by(|&a, &b| rows[a][c].abs().cmp(&rows[b][c].abs()).then(a.cmp(&b)));
            let Some(best) = best else { break };
            rows.swap(r, best);
            let mut done = true;
            let (head, tail) = rows.split_at_mut(r + 1);
            let pivot = &head[r];
            for row in tail.iter_mut() {
                if row[c].is_zero() {
                    continue;
                }
                let q = row[c].div_floor(&pivot[c]);
                sub_multiple(row, pivot, &q);
                if !row[c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if rows[r][c].is_zero() {
            continue;
        }
        if rows[r][c].is_negative() {
            for x in rows[r].iter_mut() {
                *x = -&*x;
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let pivot = &tail[0];
        for row in head.iter_mut() {
            let q = row[c].div_floor(&pivot[c]);
            sub_multiple(row, pivot, &q);
        }
        r += 1;
    }
    r
}

/// Hermite normal form of the lattice spanned by `generators`; only the
/// nonzero rows are returned.
pub fn hermite_normal_form(generators: &[IntVector]) -> Result<Vec<IntVector>, LinalgError> {
    let Some(len) = generators.first().map(Vec::len) else {
        return Ok(Vec::new());
    };
    if let Some(g) = generators.iter().find(|g| g.len() != len) {
        return Err(LinalgError::DimensionMismatch {
            expected: len,
            found: g.len(),
        });
    }
    check_budget(generators.len(), len)?;
    let mut rows = generators.to_vec();
    let rank = reduce(&mut rows, len);
    rows.truncate(rank);
    Ok(rows)
}

/// Whether two families generate the same integer lattice.
pub fn lattice_equal(gens_a: &[IntVector], gens_b: &[IntVector]) -> Result<bool, LinalgError> {
    let len_a = gens_a.first().map(Vec::len);
    let len_b = gens_b.first().map(Vec::len);
    if let (Some(a), Some(b)) = (len_a, len_b) {
        if a != b {
            return Err(LinalgError::DimensionMismatch { expected: a, found: b });
        }
    }
    Ok(hermite_normal_form(gens_a)? == hermite_normal_form(gens_b)?)
}

/// A basis of the integer kernel `{x in Z^n : A x = 0}`, returned in
/// Hermite normal form. Unlike [`kernel_basis`](super::kernel_basis), this
/// lattice is saturated: every integer kernel vector is an integer
/// combination of the result.
pub fn integer_kernel_basis(a: &SparseIntMatrix) -> Result<Vec<IntVector>, LinalgError> {
    let n = a.n_cols();
    let m = a.n_rows();
    check_budget(n, m + n)?;
    // Row j is (column j of A | e_j); unimodular row operations that clear
    // the left block leave kernel vectors in the right block.
    let at = a.transpose().to_dense();
    let mut rows: Vec<Vec<BigInt>> = at
        .into_iter()
        .enumerate()
        .map(|(j, mut row)| {
            row.extend((0..n).map(|i| BigInt::from((i == j) as i64)));
            row
        })
        .collect();
    let rank = reduce(&mut rows, m);
    let kernel: Vec<IntVector> = rows[rank..].iter().map(|row| row[m..].to_vec()).collect();
    hermite_normal_form(&kernel)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(xs: &[i64]) -> IntVector {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn lattice_equality_examples() {
        assert!(lattice_equal(&[iv(&[2, 0]), iv(&[0, 2])], &[iv(&[2, 0]), iv(&[0, 2]), iv(&[2, 2])]).unwrap());
        assert!(!lattice_equal(&[iv(&[1, 0]), iv(&[0, 1])], &[iv(&[2, 0]), iv(&[0, 1])]).unwrap());
        assert!(lattice_equal(&[iv(&[1, 1])], &[iv(&[-1, -1])]).unwrap());
    }

    #[test]
    fn hnf_shape() {
        let h = hermite_normal_form(&[iv(&[4, 6, 0]), iv(&[2, 4, 2]), iv(&[6, 10, 2])]).unwrap();
        assert_eq!(h, vec![iv(&[2, 0, -6]), iv(&[0, 2, 4])]);
    }

    #[test]
    fn budget_enforced() {
        let v = vec![BigInt::zero(); HNF_MAX_DIM + 1];
        assert!(matches!(
            hermite_normal_form(&[v]),
            Err(LinalgError::ResourceBudget { .. })
        ));
    }

    #[test]
    fn integer_kernel_is_saturated() {
        // The row (2 2 0) has integer kernel spanned by (1,-1,0), (0,0,1).
        let a = SparseIntMatrix::from_entries(1, 3, [(0, 0, 2), (0, 1, 2)]).unwrap();
        let k = integer_kernel_basis(&a).unwrap();
        assert!(lattice_equal(&k, &[iv(&[1, -1, 0]), iv(&[0, 0, 1])]).unwrap());
    }
}
