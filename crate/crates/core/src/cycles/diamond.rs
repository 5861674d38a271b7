use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::linalg::primes::{random_31bit_primes, solver_primes};
use crate::linalg::{rank_exact, rank_mod_p, residue_i64, IntVector, ModEchelon, SpanResult, SpanSolver, SparseIntMatrix};

use super::graph::{binomial, cycle_column, cycle_count, edge_count, FourCycle};
use super::system::{build_inclusion_matrix, CycleSystem, CycleTradePair, CycleVector};
use super::CycleError;

/// One of the three ways to split four middles into two pairs:
/// `P0 = m0m1|m2m3`, `P1 = m0m2|m1m3`, `P2 = m0m3|m1m2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pairing {
    P0,
    P1,
    P2,
}

impl Pairing {
    pub const ALL: [Pairing; 3] = [Pairing::P0, Pairing::P1, Pairing::P2];

    pub fn index(self) -> usize {
        self as usize
    }

    /// The two pairs, as positions into the middles.
    pub fn positions(self) -> [(usize, usize); 2] {
        match self {
            Pairing::P0 => [(0, 1), (2, 3)],
            Pairing::P1 => [(0, 2), (1, 3)],
            Pairing::P2 => [(0, 3), (1, 2)],
        }
    }

    pub fn pairs(self, middles: [usize; 4]) -> [(usize, usize); 2] {
        self.positions().map(|(x, y)| (middles[x], middles[y]))
    }

    /// Pairing of `middles` that puts `x` and `y` together.
    pub fn joining(middles: [usize; 4], x: usize, y: usize) -> Option<Pairing> {
        Pairing::ALL.into_iter().find(|p| {
            p.pairs(middles)
                .iter()
                .any(|&(a, b)| (a, b) == (x, y) || (a, b) == (y, x))
        })
    }
}

/// A double-diamond: poles `a < b`, sorted middles, and two distinct
/// pairings. Its trade has `T` = the cycles `(a,x,b,y)` over the source
/// pairs and `T*` the same over the target pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DoubleDiamond {
    poles: (usize, usize),
    middles: [usize; 4],
    source: Pairing,
    target: Pairing,
}

impl DoubleDiamond {
    pub fn new(poles: (usize, usize), mut middles: [usize; 4], source: Pairing, target: Pairing) -> Result<Self, CycleError> {
        let (a, b) = (poles.0.min(poles.1), poles.0.max(poles.1));
        middles.sort_unstable();
        let bad = |m: &str| Err(CycleError::InvalidCycle(format!("double-diamond: {m}")));
        if a == b {
            return bad("poles coincide");
        }
        if middles.windows(2).any(|w| w[0] == w[1]) {
            return bad("repeated middle");
        }
        if middles.contains(&a) || middles.contains(&b) {
            return bad("a pole is also a middle");
        }
        if source == target {
            return bad("source and target pairings coincide");
        }
        Ok(DoubleDiamond {
            poles: (a, b),
            middles,
            source,
            target,
        })
    }

    pub fn poles(&self) -> (usize, usize) {
        self.poles
    }

    pub fn middles(&self) -> [usize; 4] {
        self.middles
    }

    pub fn source(&self) -> Pairing {
        self.source
    }

    pub fn target(&self) -> Pairing {
        self.target
    }

    pub fn max_vertex(&self) -> usize {
        self.poles.1.max(self.middles[3])
    }

    /// Same configuration with source and target exchanged.
    pub fn reversed(&self) -> DoubleDiamond {
        DoubleDiamond {
            source: self.target,
            target: self.source,
            ..*self
        }
    }

    fn cycles_of(&self, p: Pairing) -> [FourCycle; 2] {
        let (a, b) = self.poles;
        p.pairs(self.middles)
            .map(|(x, y)| FourCycle::new(a, x, b, y).expect("distinct vertices"))
    }

    pub fn source_cycles(&self) -> [FourCycle; 2] {
        self.cycles_of(self.source)
    }

    pub fn target_cycles(&self) -> [FourCycle; 2] {
        self.cycles_of(self.target)
    }

    pub fn trade(&self) -> CycleTradePair {
        CycleTradePair::new(self.source_cycles().to_vec(), self.target_cycles().to_vec())
            .expect("a double-diamond is a trade")
    }

    /// +1 on the source cycles, -1 on the target cycles.
    pub fn vector(&self, n: usize) -> CycleVector {
        let mut v = CycleVector::zeros(n);
        for c in self.source_cycles() {
            v.add(&c, 1);
        }
        for c in self.target_cycles() {
            v.add(&c, -1);
        }
        v
    }

    /// `v += factor * vector(n)`.
    pub fn add_to(&self, v: &mut CycleVector, factor: i64) {
        let n = v.order();
        for c in self.source_cycles() {
            v.add(&c, factor);
        }
        for c in self.target_cycles() {
            v.add(&c, -factor);
        }
        debug_assert!(self.max_vertex() < n);
    }

    fn columns(&self, n: usize) -> [(usize, i64); 4] {
        let [s0, s1] = self.source_cycles();
        let [t0, t1] = self.target_cycles();
        [
            (cycle_column(n, &s0), 1),
            (cycle_column(n, &s1), 1),
            (cycle_column(n, &t0), -1),
            (cycle_column(n, &t1), -1),
        ]
    }

    /// Relabels vertices; the pairings are recomputed for the new middle
    /// order.
    pub fn relabel(&self, perm: &[usize]) -> DoubleDiamond {
        let m = self.middles.map(|x| perm[x]);
        let mut sorted = m;
        sorted.sort_unstable();
        let map = |p: Pairing| {
            let (x, y) = p.pairs(m)[0];
            Pairing::joining(sorted, x, y).unwrap()
        };
        DoubleDiamond::new((perm[self.poles.0], perm[self.poles.1]), sorted, map(self.source), map(self.target))
            .expect("permutation keeps vertices distinct")
    }
}

fn fmt_pairing(f: &mut fmt::Formatter<'_>, middles: [usize; 4], p: Pairing) -> fmt::Result {
    let [(a, b), (c, d)] = p.pairs(middles);
    write!(f, "{a}-{b}|{c}-{d}")
}

impl fmt::Display for DoubleDiamond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.middles;
        write!(f, "poles={},{} middles={},{},{},{} from=", self.poles.0, self.poles.1, m[0], m[1], m[2], m[3])?;
        fmt_pairing(f, m, self.source)?;
        f.write_str(" to=")?;
        fmt_pairing(f, m, self.target)
    }
}

fn parse_list(s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| format!("bad vertex `{x}`")))
        .collect()
}

fn parse_pairing(middles: [usize; 4], s: &str) -> Result<Pairing, String> {
    let (left, right) = s.split_once('|').ok_or_else(|| format!("bad pairing `{s}`"))?;
    let pair = |t: &str| -> Result<(usize, usize), String> {
        let (x, y) = t.split_once('-').ok_or_else(|| format!("bad pair `{t}`"))?;
        Ok((
            x.parse().map_err(|_| format!("bad vertex `{x}`"))?,
            y.parse().map_err(|_| format!("bad vertex `{y}`"))?,
        ))
    };
    let (x, y) = pair(left)?;
    let (z, w) = pair(right)?;
    let mut all = [x, y, z, w];
    all.sort_unstable();
    if all != middles {
        return Err(format!("pairing `{s}` does not use the middles"));
    }
    Pairing::joining(middles, x, y).ok_or_else(|| format!("bad pairing `{s}`"))
}

/// Parses the [`Display`](fmt::Display) form
/// `poles=a,b middles=m1,m2,m3,m4 from=x-y|z-w to=x-y|z-w`.
impl FromStr for DoubleDiamond {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut poles = None;
        let mut middles = None;
        let mut from = None;
        let mut to = None;
        for tok in s.split_whitespace() {
            let (key, val) = tok.split_once('=').ok_or_else(|| format!("bad field `{tok}`"))?;
            match key {
                "poles" => poles = Some(parse_list(val)?),
                "middles" => middles = Some(parse_list(val)?),
                "from" => from = Some(val.to_string()),
                "to" => to = Some(val.to_string()),
                _ => return Err(format!("unknown field `{key}`")),
            }
        }
        let poles = poles.ok_or("missing poles")?;
        let middles = middles.ok_or("missing middles")?;
        if poles.len() != 2 || middles.len() != 4 {
            return Err("need 2 poles and 4 middles".into());
        }
        let mut m = [middles[0], middles[1], middles[2], middles[3]];
        m.sort_unstable();
        let source = parse_pairing(m, &from.ok_or("missing from")?)?;
        let target = parse_pairing(m, &to.ok_or("missing to")?)?;
        DoubleDiamond::new((poles[0], poles[1]), m, source, target).map_err(|e| e.to_string())
    }
}

/// Result of [`enumerate_double_diamonds`]. `warning` is set when the order
/// is below the foundation size 6 and the list is necessarily empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiamondEnumeration {
    pub diamonds: Vec<DoubleDiamond>,
    pub warning: Option<String>,
}

/// Every double-diamond of `K_n`, one per (poles, middles, unordered pair of
/// pairings), with the smaller pairing as source. Ordered by poles, then
/// middles, then pairing pair, all lexicographically.
pub fn enumerate_double_diamonds(n: usize) -> DiamondEnumeration {
    if n < 6 {
        return DiamondEnumeration {
            diamonds: Vec::new(),
            warning: Some(format!("order {n} is below the double-diamond foundation 6")),
        };
    }
    let mut out = Vec::with_capacity(3 * binomial(n, 2) * binomial(n - 2, 4));
    for a in 0..n {
        for b in a + 1..n {
            let rest: Vec<usize> = (0..n).filter(|&v| v != a && v != b).collect();
            let r = rest.len();
            for i in 0..r {
                for j in i + 1..r {
                    for k in j + 1..r {
                        for l in k + 1..r {
                            let m = [rest[i], rest[j], rest[k], rest[l]];
                            for (s, t) in [(0, 1), (0, 2), (1, 2)] {
                                out.push(DoubleDiamond {
                                    poles: (a, b),
                                    middles: m,
                                    source: Pairing::ALL[s],
                                    target: Pairing::ALL[t],
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    DiamondEnumeration {
        diamonds: out,
        warning: None,
    }
}

/// Stacked diamond vectors, one row per diamond.
pub fn diamond_vectors(n: usize, diamonds: &[DoubleDiamond]) -> SparseIntMatrix {
    let entries = diamonds
        .iter()
        .enumerate()
        .flat_map(|(r, d)| d.columns(n).map(|(c, v)| (r, c, v)));
    SparseIntMatrix::from_entries(diamonds.len(), cycle_count(n), entries).expect("distinct columns per diamond")
}

fn residue_row(n: usize, d: &DoubleDiamond, p: u64) -> Vec<u64> {
    let mut row = vec![0u64; cycle_count(n)];
    for (c, v) in d.columns(n) {
        row[c] = residue_i64(v, p);
    }
    row
}

/// How a span rank was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RankMethod {
    Exact,
    /// Ranks modulo each prime. `certified` is set when every prime reached
    /// the kernel-dimension upper bound, which makes the rank exact.
    Modular { primes: Vec<u64>, ranks: Vec<usize>, certified: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanRankReport {
    pub n: usize,
    pub diamond_count: usize,
    pub rank: usize,
    /// `3 C(n,4) - rank(M)`.
    pub kernel_dim: usize,
    pub method: RankMethod,
}

impl SpanRankReport {
    pub fn spans_kernel(&self) -> bool {
        self.rank == self.kernel_dim
    }

    pub fn is_exact(&self) -> bool {
        match &self.method {
            RankMethod::Exact => true,
            RankMethod::Modular { certified, .. } => *certified,
        }
    }
}

/// Orders at or below this are ranked by exact elimination.
const EXACT_SPAN_MAX_ORDER: usize = 7;

/// Seed for the primes drawn by [`diamond_span_rank`] above the exact range.
const SPAN_PRIME_SEED: u64 = 0x5eed_d1a3;

/// Rank of the stacked double-diamond vectors of `K_n`. Exact for
/// `n <= 7`; above that, modular over three random 31-bit primes.
pub fn diamond_span_rank(n: usize) -> Result<SpanRankReport, CycleError> {
    if n < 4 {
        return Err(CycleError::OrderTooSmall { n, min: 4 });
    }
    if n <= EXACT_SPAN_MAX_ORDER {
        let m = build_inclusion_matrix(n)?;
        let diamonds = enumerate_double_diamonds(n).diamonds;
        let rank = if diamonds.is_empty() { 0 } else { rank_exact(&diamond_vectors(n, &diamonds)) };
        return Ok(SpanRankReport {
            n,
            diamond_count: diamonds.len(),
            rank,
            kernel_dim: cycle_count(n) - rank_exact(&m),
            method: RankMethod::Exact,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SPAN_PRIME_SEED ^ n as u64);
    let primes = random_31bit_primes(&mut rng, 3);
    diamond_span_rank_modular(n, &primes)
}

/// Modular span rank. Each prime gives a lower bound on the rational rank;
/// `cols - rank_p(M)` bounds it from above, and the two meet when
/// `certified` is reported.
pub fn diamond_span_rank_modular(n: usize, primes: &[u64]) -> Result<SpanRankReport, CycleError> {
    if n < 4 {
        return Err(CycleError::OrderTooSmall { n, min: 4 });
    }
    let m = build_inclusion_matrix(n)?;
    let diamonds = enumerate_double_diamonds(n).diamonds;
    let cols = cycle_count(n);
    let mut ranks = Vec::with_capacity(primes.len());
    let mut certified = !primes.is_empty();
    let mut kernel_dim = cols;
    for &p in primes {
        let bound = cols - rank_mod_p(&m, p)?;
        kernel_dim = kernel_dim.min(bound);
        let mut e = ModEchelon::new(p, cols)?;
        for d in &diamonds {
            if e.rank() == bound {
                break;
            }
            e.insert(&residue_row(n, d, p));
        }
        certified &= e.rank() == bound;
        ranks.push(e.rank());
    }
    let rank = ranks.iter().copied().max().unwrap_or(0);
    Ok(SpanRankReport {
        n,
        diamond_count: diamonds.len(),
        rank,
        kernel_dim,
        method: RankMethod::Modular {
            primes: primes.to_vec(),
            ranks,
            certified,
        },
    })
}

/// A double-diamond basis of the kernel, with a solver for decompositions.
#[derive(Clone, Debug)]
pub struct DiamondBasis {
    n: usize,
    diamonds: Vec<DoubleDiamond>,
    solver: SpanSolver,
}

impl DiamondBasis {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn diamonds(&self) -> &[DoubleDiamond] {
        &self.diamonds
    }

    pub fn len(&self) -> usize {
        self.diamonds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diamonds.is_empty()
    }

    pub fn position(&self, d: &DoubleDiamond) -> Option<usize> {
        self.diamonds.iter().position(|x| x == d)
    }

    /// `sum c_i D_i` as an exact rational vector.
    pub fn reconstruct(&self, coefficients: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); cycle_count(self.n)];
        for (d, c) in self.diamonds.iter().zip(coefficients) {
            if c.is_zero() {
                continue;
            }
            for (col, v) in d.columns(self.n) {
                out[col] += c * BigRational::from_integer(BigInt::from(v));
            }
        }
        out
    }
}

/// Greedy basis: diamonds taken in enumeration order, keeping those that
/// raise the rank, until the rank reaches the kernel dimension.
///
/// Rank updates run modulo a 62-bit prime. Vectors independent modulo a
/// prime are independent over Q, and the count is checked against the
/// kernel dimension, so a returned basis is exact.
pub fn diamond_basis(n: usize) -> Result<DiamondBasis, CycleError> {
    if n < 4 {
        return Err(CycleError::OrderTooSmall { n, min: 4 });
    }
    let p = solver_primes()[0];
    let cols = cycle_count(n);
    let m = build_inclusion_matrix(n)?;
    let m_rank = rank_mod_p(&m, p)?;
    let kernel_dim = cols - m_rank;
    // A full-rank M certifies the kernel dimension. Otherwise fall back to
    // the exact rank.
    let kernel_dim = if m_rank == edge_count(n) { kernel_dim } else { cols - rank_exact(&m) };
    let mut e = ModEchelon::new(p, cols)?;
    let mut chosen = Vec::with_capacity(kernel_dim);
    for d in enumerate_double_diamonds(n).diamonds {
        if chosen.len() == kernel_dim {
            break;
        }
        if e.insert(&residue_row(n, &d, p)) {
            chosen.push(d);
        }
    }
    if chosen.len() != kernel_dim {
        return Err(CycleError::SpanDeficient {
            n,
            rank: chosen.len(),
            kernel_dim,
        });
    }
    let gens: Vec<IntVector> = chosen.iter().map(|d| d.vector(n).to_int_vector()).collect();
    let solver = SpanSolver::new(gens, cols)?;
    Ok(DiamondBasis {
        n,
        diamonds: chosen,
        solver,
    })
}

/// Coefficients of a kernel vector over a diamond basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TradeDecomposition {
    pub coefficients: Vec<BigRational>,
    pub integral: bool,
}

impl TradeDecomposition {
    /// `(basis index, coefficient)` for the nonzero coefficients.
    pub fn support(&self) -> Vec<(usize, &BigRational)> {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// Integer coefficients, when integral and small enough.
    pub fn integer_coefficients(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.coefficients
            .iter()
            .map(|c| if c.is_integer() { c.to_integer().to_i64() } else { None })
            .collect()
    }
}

/// Unique rational coefficients of `v` over `basis`. The solver verifies
/// the reconstruction exactly.
pub fn decompose_trade(basis: &DiamondBasis, v: &CycleVector) -> Result<TradeDecomposition, CycleError> {
    if v.order() != basis.n {
        return Err(CycleError::OrderMismatch {
            left: basis.n,
            right: v.order(),
        });
    }
    v.check_kernel()?;
    let coefficients = match basis.solver.solve(&v.to_int_vector())? {
        SpanResult::InSpan(c) => c,
        // The basis spans the kernel, so this would be a solver defect.
        SpanResult::NotInSpan => {
            return Err(CycleError::SpanDeficient {
                n: basis.n,
                rank: basis.len(),
                kernel_dim: basis.len(),
            })
        }
    };
    debug_assert_eq!(
        basis.reconstruct(&coefficients),
        v.entries().iter().map(|&x| BigRational::from_integer(x.into())).collect::<Vec<_>>()
    );
    let integral = coefficients.iter().all(|c| c.denom().is_one());
    Ok(TradeDecomposition { coefficients, integral })
}

/// Index pairs `(i, j)`, `i < j`, of cycles whose union is a double-diamond:
/// exactly two shared vertices, opposite in both cycles.
pub fn double_diamond_pairs(cycles: &[FourCycle]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            if is_diamond_pair(&cycles[i], &cycles[j]) {
                out.push((i, j));
            }
        }
    }
    out
}

pub(crate) fn is_diamond_pair(c1: &FourCycle, c2: &FourCycle) -> bool {
    if c1.shared_vertices(c2) != 2 {
        return false;
    }
    let o1 = c1.opposite_pairs();
    c2.opposite_pairs().iter().any(|p| o1.contains(p))
}

pub fn count_double_diamond_configs(cs: &CycleSystem) -> usize {
    double_diamond_pairs(cs.cycles()).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(a: usize, b: usize, cc: usize, d: usize) -> FourCycle {
        FourCycle::new(a, b, cc, d).unwrap()
    }

    fn sample() -> DoubleDiamond {
        DoubleDiamond::new((0, 1), [2, 3, 4, 5], Pairing::P0, Pairing::P1).unwrap()
    }

    #[test]
    fn sample_cycles() {
        let d = sample();
        assert_eq!(d.source_cycles(), [c(0, 2, 1, 3), c(0, 4, 1, 5)]);
        assert_eq!(d.target_cycles(), [c(0, 2, 1, 4), c(0, 3, 1, 5)]);
        assert_eq!(d.to_string(), "poles=0,1 middles=2,3,4,5 from=2-3|4-5 to=2-4|3-5");
        assert_eq!(d.to_string().parse::<DoubleDiamond>().unwrap(), d);
        d.vector(6).check_kernel().unwrap();
    }

    #[test]
    fn invalid_diamonds() {
        assert!(DoubleDiamond::new((0, 0), [2, 3, 4, 5], Pairing::P0, Pairing::P1).is_err());
        assert!(DoubleDiamond::new((0, 2), [2, 3, 4, 5], Pairing::P0, Pairing::P1).is_err());
        assert!(DoubleDiamond::new((0, 1), [2, 3, 4, 5], Pairing::P2, Pairing::P2).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_double_diamonds(6).diamonds.len(), 45);
        assert_eq!(enumerate_double_diamonds(9).diamonds.len(), 3780);
        let e5 = enumerate_double_diamonds(5);
        assert!(e5.diamonds.is_empty() && e5.warning.is_some());
        let all = enumerate_double_diamonds(7).diamonds;
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(sorted, all);
    }

    #[test]
    fn pairing_relation() {
        let n = 6;
        let mk = |s, t| DoubleDiamond::new((0, 1), [2, 3, 4, 5], s, t).unwrap().vector(n);
        let mut lhs = mk(Pairing::P0, Pairing::P1);
        lhs.add_vector(&mk(Pairing::P1, Pairing::P2), 1);
        assert_eq!(lhs, mk(Pairing::P0, Pairing::P2));
    }

    #[test]
    fn small_span_ranks() {
        let r6 = diamond_span_rank(6).unwrap();
        assert_eq!((r6.rank, r6.kernel_dim, r6.diamond_count), (30, 30, 45));
        let r5 = diamond_span_rank(5).unwrap();
        assert_eq!((r5.rank, r5.kernel_dim), (0, 5));
        let m6 = diamond_span_rank_modular(6, &[1_000_003, 998_244_353]).unwrap();
        assert_eq!(m6.rank, 30);
        assert!(m6.is_exact());
    }

    #[test]
    fn basis_n6_and_n5() {
        let b = diamond_basis(6).unwrap();
        assert_eq!(b.len(), 30);
        assert!(matches!(
            diamond_basis(5),
            Err(CycleError::SpanDeficient { n: 5, rank: 0, kernel_dim: 5 })
        ));
    }

    #[test]
    fn decompose_basis_member() {
        let b = diamond_basis(6).unwrap();
        let d = b.diamonds()[7];
        let dec = decompose_trade(&b, &d.vector(6)).unwrap();
        assert!(dec.integral);
        assert_eq!(dec.support().len(), 1);
        assert_eq!(dec.support()[0].0, 7);
        assert!(dec.support()[0].1.is_one());
        let zero = decompose_trade(&b, &CycleVector::zeros(6)).unwrap();
        assert!(zero.support().is_empty());
        let mut bad = CycleVector::zeros(6);
        bad.add(&c(0, 1, 2, 3), 1);
        assert!(matches!(decompose_trade(&b, &bad), Err(CycleError::KernelMembership { .. })));
    }

    #[test]
    fn diamond_pairs() {
        assert!(is_diamond_pair(&c(0, 2, 1, 3), &c(0, 4, 1, 5)));
        // Shared edge.
        assert!(!is_diamond_pair(&c(0, 1, 2, 3), &c(0, 1, 4, 5)));
        // Two shared vertices, adjacent in one cycle.
        assert!(!is_diamond_pair(&c(0, 2, 1, 3), &c(0, 1, 4, 5)));
    }

    #[test]
    fn relabel_diamond() {
        let d = sample();
        let perm = [5, 4, 3, 2, 1, 0];
        let r = d.relabel(&perm);
        let want: Vec<FourCycle> = d.source_cycles().iter().map(|c| c.relabel(&perm)).collect();
        let mut got = r.source_cycles().to_vec();
        got.sort();
        let mut want = want;
        want.sort();
        assert_eq!(got, want);
    }
}
