//! Linear algebra over prime fields of word size.

use num_bigint::{BigInt, Sign};
use num_traits::ToPrimitive;

use super::primes::{inv_mod, is_prime, mul_mod, sub_mod};
use super::{LinalgError, SparseIntMatrix};

/// Reduces an integer into `[0, p)`.
pub fn residue(x: &BigInt, p: u64) -> u64 {
    let m = (x.magnitude() % p).to_u64().unwrap();
    if x.sign() == Sign::Minus && m != 0 {
        p - m
    } else {
        m
    }
}

pub fn residue_i64(x: i64, p: u64) -> u64 {
    let m = x.unsigned_abs() % p;
    if x < 0 && m != 0 {
        p - m
    } else {
        m
    }
}

fn check_modulus(p: u64) -> Result<(), LinalgError> {
    if p < 2 || !is_prime(p) || p >= 1 << 63 {
        return Err(LinalgError::InvalidModulus(p));
    }
    Ok(())
}

/// Row echelon form over GF(p), grown one vector at a time.
///
/// Each stored row is monic at its pivot and zero at the pivots of all
/// earlier rows. With tracking enabled, row `r` also carries its expression
/// as a combination of the accepted input vectors.
#[derive(Clone, Debug)]
pub struct ModEchelon {
    p: u64,
    width: usize,
    rows: Vec<Vec<u64>>,
    pivot_cols: Vec<usize>,
    combos: Option<Vec<Vec<u64>>>,
}

impl ModEchelon {
    pub fn new(p: u64, width: usize) -> Result<Self, LinalgError> {
        check_modulus(p)?;
        Ok(ModEchelon {
            p,
            width,
            rows: Vec::new(),
            pivot_cols: Vec::new(),
            combos: None,
        })
    }

    pub fn with_tracking(p: u64, width: usize) -> Result<Self, LinalgError> {
        let mut e = Self::new(p, width)?;
        e.combos = Some(Vec::new());
        Ok(e)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Subtracts multiples of the stored rows from `v`; returns the
    /// multipliers used, one per stored row.
    fn reduce_in_place(&self, v: &mut [u64]) -> Vec<u64> {
        let p = self.p;
        let mut factors = vec![0u64; self.rows.len()];
        for (r, (row, &c)) in self.rows.iter().zip(&self.pivot_cols).enumerate() {
            let f = v[c];
            if f == 0 {
                continue;
            }
            factors[r] = f;
            for j in c..self.width {
                if row[j] != 0 {
                    v[j] = sub_mod(v[j], mul_mod(f, row[j], p), p);
                }
            }
        }
        factors
    }

    /// Inserts `v` (entries already reduced mod p). Returns whether the rank
    /// grew. Dependent vectors are discarded.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        assert_eq!(v.len(), self.width);
        let p = self.p;
        let mut v = v.to_vec();
        let factors = self.reduce_in_place(&mut v);
        let Some(c) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = inv_mod(v[c], p);
        for x in v.iter_mut().skip(c) {
            *x = mul_mod(*x, inv, p);
        }
        if let Some(combos) = self.combos.as_mut() {
            let k = combos.len();
            let mut combo = vec![0u64; k + 1];
            combo[k] = 1;
            for (f, prev) in factors.iter().zip(combos.iter()) {
                if *f == 0 {
                    continue;
                }
                for (dst, src) in combo.iter_mut().zip(prev) {
                    *dst = sub_mod(*dst, mul_mod(*f, *src, p), p);
                }
            }
            for x in combo.iter_mut() {
                *x = mul_mod(*x, inv, p);
            }
            for prev in combos.iter_mut() {
                prev.push(0);
            }
            combos.push(combo);
        }
        self.rows.push(v);
        self.pivot_cols.push(c);
        true
    }

    pub fn insert_int(&mut self, v: &[BigInt]) -> bool {
        let w: Vec<u64> = v.iter().map(|x| residue(x, self.p)).collect();
        self.insert(&w)
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let mut v = v.to_vec();
        self.reduce_in_place(&mut v);
        v.iter().all(|&x| x == 0)
    }

    /// Coefficients of `v` over the accepted input vectors, or `None` when
    /// `v` is outside their span mod p. Requires tracking.
    pub fn solve(&self, v: &[u64]) -> Option<Vec<u64>> {
        let combos = self.combos.as_ref().expect("solve requires tracking");
        let p = self.p;
        let mut v = v.to_vec();
        let factors = self.reduce_in_place(&mut v);
        if v.iter().any(|&x| x != 0) {
            return None;
        }
        let mut out = vec![0u64; combos.len()];
        for (f, combo) in factors.iter().zip(combos) {
            if *f == 0 {
                continue;
            }
            for (dst, src) in out.iter_mut().zip(combo) {
                if *src != 0 {
                    *dst = (*dst + mul_mod(*f, *src, p)) % p;
                }
            }
        }
        Some(out)
    }
}

/// Rank over GF(p). Rejects moduli that are not primes below 2^63.
pub fn rank_mod_p(a: &SparseIntMatrix, p: u64) -> Result<usize, LinalgError> {
    let (m, width) = if a.n_rows() > a.n_cols() {
        (a.transpose(), a.n_rows())
    } else {
        (a.clone(), a.n_cols())
    };
    let mut e = ModEchelon::new(p, width)?;
    let target = m.n_rows().min(width);
    for r in 0..m.n_rows() {
        if e.rank() == target {
            break;
        }
        let mut v = vec![0u64; width];
        for (c, x) in m.row(r) {
            v[*c] = residue(x, p);
        }
        e.insert(&v);
    }
    Ok(e.rank())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(rank_mod_p(&SparseIntMatrix::identity(3), 2).unwrap(), 3);
        assert_eq!(rank_mod_p(&SparseIntMatrix::zeros(2, 2), 5).unwrap(), 0);
    }

    #[test]
    fn rejects_bad_modulus() {
        let m = SparseIntMatrix::identity(2);
        assert!(matches!(rank_mod_p(&m, 0), Err(LinalgError::InvalidModulus(0))));
        assert!(matches!(rank_mod_p(&m, 1), Err(LinalgError::InvalidModulus(1))));
        assert!(rank_mod_p(&m, 4).is_err());
    }

    #[test]
    fn characteristic_matters() {
        // det = 2: singular mod 2 only.
        let m = SparseIntMatrix::from_entries(2, 2, [(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, -1)])
            .unwrap();
        assert_eq!(rank_mod_p(&m, 2).unwrap(), 1);
        assert_eq!(rank_mod_p(&m, 3).unwrap(), 2);
    }

    #[test]
    fn residues() {
        assert_eq!(residue(&BigInt::from(-1), 7), 6);
        assert_eq!(residue(&BigInt::from(-14), 7), 0);
        assert_eq!(residue_i64(-15, 7), 6);
    }

    #[test]
    fn tracked_solve() {
        let p = 1_000_003;
        let mut e = ModEchelon::with_tracking(p, 3).unwrap();
        assert!(e.insert(&[1, 1, 0]));
        assert!(e.insert(&[0, 1, 1]));
        assert!(!e.insert(&[1, 2, 1]));
        // (1,3,2) = 1*(1,1,0) + 2*(0,1,1)
        assert_eq!(e.solve(&[1, 3, 2]).unwrap(), vec![1, 2]);
        assert!(e.solve(&[0, 0, 1]).is_none());
    }
}
