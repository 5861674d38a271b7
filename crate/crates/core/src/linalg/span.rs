//! Exact coefficients of a target vector over a generating family.
//!
//! Independent families are solved modulo several word-size primes; the
//! residues are combined by CRT, lifted by rational reconstruction, and the
//! lifted answer is checked against the integers before it is returned.
//! Anything the modular route cannot certify goes through fraction-free
//! Gauss-Jordan elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::exact::eliminate;
use super::modular::{residue, ModEchelon};
use super::primes::solver_primes;
use super::{IntVector, LinalgError, RationalVector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpanResult {
    InSpan(RationalVector),
    NotInSpan,
}

impl SpanResult {
    pub fn coefficients(&self) -> Option<&RationalVector> {
        match self {
            SpanResult::InSpan(c) => Some(c),
            SpanResult::NotInSpan => None,
        }
    }
}

/// Pre-processed generating family, reusable across many targets.
#[derive(Clone, Debug)]
pub struct SpanSolver {
    generators: Vec<IntVector>,
    dim: usize,
    /// Tracked echelon forms, one per prime. Only kept when the family is
    /// independent modulo every prime used.
    echelons: Vec<ModEchelon>,
}

impl SpanSolver {
    pub fn new(generators: Vec<IntVector>, dim: usize) -> Result<Self, LinalgError> {
        if let Some(g) = generators.iter().find(|g| g.len() != dim) {
            return Err(LinalgError::DimensionMismatch {
                expected: dim,
                found: g.len(),
            });
        }
        let mut echelons = Vec::new();
        // A family independent mod p is independent over Q, so the first
        // prime decides whether the modular route applies at all.
        for &p in solver_primes().iter().take(2) {
            let mut e = ModEchelon::with_tracking(p, dim)?;
            let independent = generators.iter().all(|g| e.insert_int(g));
            if !independent {
                echelons.clear();
                break;
            }
            echelons.push(e);
        }
        Ok(SpanSolver {
            generators,
            dim,
            echelons,
        })
    }

    pub fn generators(&self) -> &[IntVector] {
        &self.generators
    }

    /// True when the family was certified linearly independent.
    pub fn is_independent(&self) -> bool {
        !self.echelons.is_empty()
    }

    pub fn solve(&self, target: &[BigInt]) -> Result<SpanResult, LinalgError> {
        if target.len() != self.dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.dim,
                found: target.len(),
            });
        }
        if self.generators.is_empty() {
            return Ok(if target.iter().all(Zero::is_zero) {
                SpanResult::InSpan(Vec::new())
            } else {
                SpanResult::NotInSpan
            });
        }
        if self.is_independent() {
            if let Some(res) = self.solve_modular(target)? {
                return Ok(res);
            }
        }
        Ok(solve_exact(&self.generators, target))
    }

    fn solve_modular(&self, target: &[BigInt]) -> Result<Option<SpanResult>, LinalgError> {
        let k = self.generators.len();
        let mut modulus = BigInt::one();
        let mut residues = vec![BigInt::zero(); k];
        let mut extra: Option<ModEchelon>;
        for (idx, &p) in solver_primes().iter().enumerate() {
            let e = match self.echelons.get(idx) {
                Some(e) => e,
                None => {
                    let mut e = ModEchelon::with_tracking(p, self.dim)?;
                    if !self.generators.iter().all(|g| e.insert_int(g)) {
                        // p divides a maximal minor; skip it.
                        continue;
                    }
                    extra = Some(e);
                    extra.as_ref().unwrap()
                }
            };
            let t: Vec<u64> = target.iter().map(|x| residue(x, p)).collect();
            let Some(sol) = e.solve(&t) else {
                // Full column rank mod p, so no rational solution exists.
                return Ok(Some(SpanResult::NotInSpan));
            };
            let pb = BigInt::from(p);
            for (acc, r) in residues.iter_mut().zip(sol) {
                *acc = crt_pair(acc, &modulus, &BigInt::from(r), &pb);
            }
            modulus *= &pb;
            let lifted: Option<Vec<BigRational>> = residues
                .iter()
                .map(|r| rational_reconstruction(r, &modulus))
                .collect();
            if let Some(c) = lifted {
                if recombines_to(&self.generators, &c, target) {
                    return Ok(Some(SpanResult::InSpan(c)));
                }
            }
        }
        Ok(None)
    }
}

/// Exact coefficients `c` with `sum c_i * generators[i] == target`, or
/// `NotInSpan`. When the generators are dependent, free coefficients are 0.
pub fn coefficients_in_span(generators: &[IntVector], target: &[BigInt]) -> Result<SpanResult, LinalgError> {
    SpanSolver::new(generators.to_vec(), target.len())?.solve(target)
}

fn solve_exact(generators: &[IntVector], target: &[BigInt]) -> SpanResult {
    let k = generators.len();
    let dim = target.len();
    // Columns are the generators, with the target appended.
    let a: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| {
            generators
                .iter()
                .map(|g| g[i].clone())
                .chain(std::iter::once(target[i].clone()))
                .collect()
        })
        .collect();
    let elim = eliminate(a, k + 1, true);
    if elim.pivots.contains(&k) {
        return SpanResult::NotInSpan;
    }
    let mut c = vec![BigRational::zero(); k];
    for (r, &pc) in elim.pivots.iter().enumerate() {
        c[pc] = BigRational::new(elim.rows[r][k].clone(), elim.scale.clone());
    }
    debug_assert!(recombines_to(generators, &c, target));
    SpanResult::InSpan(c)
}

/// Checks `sum c_i * g_i == target` exactly, clearing denominators first.
pub fn recombines_to(generators: &[IntVector], c: &[BigRational], target: &[BigInt]) -> bool {
    let lcm = c.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let scaled: Vec<BigInt> = c.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    (0..target.len()).all(|i| {
        let s: BigInt = generators
            .iter()
            .zip(&scaled)
            .filter(|(_, s)| !s.is_zero())
            .map(|(g, s)| &g[i] * s)
            .sum();
        s == &target[i] * &lcm
    })
}

/// x with x = a (mod m) and x = b (mod n), for coprime m, n; result in [0, mn).
fn crt_pair(a: &BigInt, m: &BigInt, b: &BigInt, n: &BigInt) -> BigInt {
    let e = m.extended_gcd(n);
    debug_assert!(e.gcd.is_one());
    let mn = m * n;
    // a + m * ((b - a) * m^{-1} mod n)
    let t = ((b - a) * &e.x).mod_floor(n);
    (a + m * t).mod_floor(&mn)
}

/// Finds p/q with p = q*a (mod m), |p|, q <= sqrt(m/2), if one exists.
pub fn rational_reconstruction(a: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    let q = BigRational::new(r1, t1);
    // Reject if the denominator shares a factor with the modulus.
    if !q.denom().gcd(m).is_one() {
        return None;
    }
    Some(q)
}
