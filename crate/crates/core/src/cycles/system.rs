use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;

use crate::linalg::{IntVector, SparseIntMatrix};

use super::graph::{all_cycles, cycle_column, cycle_count, edge_count, edge_endpoints, FourCycle};
use super::CycleError;

/// Edge-by-cycle inclusion matrix of `K_n`: `C(n,2)` rows, `3 C(n,4)`
/// columns, each column holding the four edges of its cycle.
pub fn build_inclusion_matrix(n: usize) -> Result<SparseIntMatrix, CycleError> {
    if n < 4 {
        return Err(CycleError::OrderTooSmall { n, min: 4 });
    }
    let entries = all_cycles(n)
        .iter()
        .enumerate()
        .flat_map(|(col, c)| c.edge_indices(n).map(|e| (e, col, 1)))
        .collect::<Vec<_>>();
    Ok(SparseIntMatrix::from_entries(edge_count(n), cycle_count(n), entries)
        .expect("a cycle has four distinct edges"))
}

/// Integer vector over the canonical cycles of `K_n`. Also used as a
/// multiset of cycles.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleVector {
    n: usize,
    entries: Vec<i64>,
}

impl CycleVector {
    pub fn zeros(n: usize) -> Self {
        CycleVector {
            n,
            entries: vec![0; cycle_count(n)],
        }
    }

    pub fn from_entries(n: usize, entries: Vec<i64>) -> Self {
        assert_eq!(entries.len(), cycle_count(n));
        CycleVector { n, entries }
    }

    pub fn from_cycles<'a, I: IntoIterator<Item = &'a FourCycle>>(n: usize, cycles: I) -> Self {
        let mut v = Self::zeros(n);
        for c in cycles {
            v.add(c, 1);
        }
        v
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn get(&self, c: &FourCycle) -> i64 {
        self.entries[cycle_column(self.n, c)]
    }

    pub fn add(&mut self, c: &FourCycle, amount: i64) {
        let col = cycle_column(self.n, c);
        self.entries[col] += amount;
    }

    pub fn add_vector(&mut self, other: &CycleVector, factor: i64) {
        assert_eq!(self.n, other.n);
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            *a += factor * b;
        }
    }

    pub fn sub(&self, other: &CycleVector) -> CycleVector {
        let mut out = self.clone();
        out.add_vector(other, -1);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn negative_entries(&self) -> usize {
        self.entries.iter().filter(|&&x| x < 0).count()
    }

    /// `(cycle, value)` for each nonzero entry, in column order.
    pub fn nonzero(&self) -> Vec<(FourCycle, i64)> {
        let cycles = all_cycles(self.n);
        self.entries
            .iter()
            .zip(cycles)
            .filter(|(&x, _)| x != 0)
            .map(|(&x, c)| (c, x))
            .collect()
    }

    /// Edge multiplicities `M v`.
    pub fn edge_image(&self) -> Vec<i64> {
        let mut out = vec![0i64; edge_count(self.n)];
        for (col, c) in all_cycles(self.n).iter().enumerate() {
            let x = self.entries[col];
            if x != 0 {
                for e in c.edge_indices(self.n) {
                    out[e] += x;
                }
            }
        }
        out
    }

    /// Checks `M v = 0`, naming the first edge with nonzero sum.
    pub fn check_kernel(&self) -> Result<(), CycleError> {
        match self.edge_image().iter().position(|&x| x != 0) {
            None => Ok(()),
            Some(e) => Err(CycleError::KernelMembership {
                edge: edge_endpoints(self.n, e),
                sum: self.edge_image()[e],
            }),
        }
    }

    pub fn to_int_vector(&self) -> IntVector {
        self.entries.iter().map(|&x| BigInt::from(x)).collect()
    }
}

fn check_vertices(n: usize, cycles: &[FourCycle]) -> Result<(), CycleError> {
    match cycles.iter().find(|c| c.max_vertex() >= n) {
        Some(c) => Err(CycleError::InvalidCycle(format!("cycle {c} has a vertex outside 0..{n}"))),
        None => Ok(()),
    }
}

/// A 4-cycle system: 4-cycles partitioning the edges of `K_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleSystem {
    n: usize,
    /// Sorted by canonical column.
    cycles: Vec<FourCycle>,
}

impl CycleSystem {
    pub fn new(n: usize, mut cycles: Vec<FourCycle>) -> Result<Self, CycleError> {
        check_vertices(n, &cycles)?;
        let mut covered = vec![false; edge_count(n)];
        for c in &cycles {
            for (u, v) in c.edges() {
                let e = super::graph::edge_index(n, u, v);
                if std::mem::replace(&mut covered[e], true) {
                    return Err(CycleError::InvalidSystem(format!("edge {{{u},{v}}} covered twice")));
                }
            }
        }
        if let Some(e) = covered.iter().position(|&c| !c) {
            let (u, v) = edge_endpoints(n, e);
            return Err(CycleError::InvalidSystem(format!("edge {{{u},{v}}} not covered")));
        }
        cycles.sort_by_key(|c| cycle_column(n, c));
        Ok(CycleSystem { n, cycles })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn cycles(&self) -> &[FourCycle] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn to_vector(&self) -> CycleVector {
        CycleVector::from_cycles(self.n, &self.cycles)
    }

    /// Reads a system back from a 0/1 vector with all-ones edge image.
    pub fn from_vector(v: &CycleVector) -> Result<Self, CycleError> {
        if v.entries().iter().any(|&x| x != 0 && x != 1) {
            return Err(CycleError::InvalidSystem("multiplicities outside {0,1}".into()));
        }
        let cycles = v.nonzero().into_iter().map(|(c, _)| c).collect();
        Self::new(v.order(), cycles)
    }

    /// Image under a vertex permutation.
    pub fn relabel(&self, perm: &[usize]) -> CycleSystem {
        let cycles = self.cycles.iter().map(|c| c.relabel(perm)).collect();
        CycleSystem::new(self.n, cycles).expect("relabeling preserves a decomposition")
    }
}

impl fmt::Display for CycleSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.n)?;
        for c in &self.cycles {
            let v = c.vertices();
            writeln!(f, "{} {} {} {}", v[0], v[1], v[2], v[3])?;
        }
        Ok(())
    }
}

/// Why a pair of cycle sets is not a 4-cycle bitrade.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycleTradeViolation {
    /// Two cycles on one side share an edge.
    NotEdgeDisjoint { side: &'static str, edge: (usize, usize) },
    /// A cycle lies in both T and T*.
    CommonCycle(FourCycle),
    /// An edge is covered by only one side.
    EdgeUnionMismatch { edge: (usize, usize) },
}

impl fmt::Display for CycleTradeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycleTradeViolation::NotEdgeDisjoint { side, edge } => {
                write!(f, "{side} is not edge-disjoint: edge {{{},{}}} repeated", edge.0, edge.1)
            }
            CycleTradeViolation::CommonCycle(c) => write!(f, "cycle {c} lies in both T and T*"),
            CycleTradeViolation::EdgeUnionMismatch { edge } => {
                write!(f, "edge {{{},{}}} is covered by only one side", edge.0, edge.1)
            }
        }
    }
}

/// A 4-cycle bitrade `(T, T*)`: edge-disjoint cycle sets with no common
/// cycle and equal edge unions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleTradePair {
    t: Vec<FourCycle>,
    t_star: Vec<FourCycle>,
}

fn edge_set(side: &'static str, cycles: &[FourCycle]) -> Result<BTreeSet<(usize, usize)>, CycleTradeViolation> {
    let mut set = BTreeSet::new();
    for c in cycles {
        for e in c.edges() {
            if !set.insert(e) {
                return Err(CycleTradeViolation::NotEdgeDisjoint { side, edge: e });
            }
        }
    }
    Ok(set)
}

impl CycleTradePair {
    pub fn new(mut t: Vec<FourCycle>, mut t_star: Vec<FourCycle>) -> Result<Self, CycleTradeViolation> {
        t.sort();
        t_star.sort();
        let et = edge_set("T", &t)?;
        let es = edge_set("T*", &t_star)?;
        if let Some(c) = t.iter().find(|c| t_star.contains(c)) {
            return Err(CycleTradeViolation::CommonCycle(*c));
        }
        if let Some(&edge) = et.symmetric_difference(&es).next() {
            return Err(CycleTradeViolation::EdgeUnionMismatch { edge });
        }
        Ok(CycleTradePair { t, t_star })
    }

    pub fn t(&self) -> &[FourCycle] {
        &self.t
    }

    pub fn t_star(&self) -> &[FourCycle] {
        &self.t_star
    }

    pub fn volume(&self) -> usize {
        self.t.len()
    }

    pub fn foundation(&self) -> usize {
        self.t.iter().flat_map(|c| c.vertices()).collect::<BTreeSet<_>>().len()
    }

    pub fn swapped(&self) -> CycleTradePair {
        CycleTradePair {
            t: self.t_star.clone(),
            t_star: self.t.clone(),
        }
    }

    /// Smallest order whose vertex set holds the trade.
    pub fn min_order(&self) -> usize {
        self.t.iter().chain(&self.t_star).map(|c| c.max_vertex() + 1).max().unwrap_or(0)
    }
}

/// +1 on T, -1 on T*; the result is checked to lie in the kernel.
pub fn trade_vector(n: usize, tp: &CycleTradePair) -> Result<CycleVector, CycleError> {
    if n < 4 {
        return Err(CycleError::OrderTooSmall { n, min: 4 });
    }
    check_vertices(n, &tp.t)?;
    check_vertices(n, &tp.t_star)?;
    let mut v = CycleVector::from_cycles(n, &tp.t);
    v.add_vector(&CycleVector::from_cycles(n, &tp.t_star), -1);
    v.check_kernel()?;
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::graph::binomial;
    use crate::linalg::rank_exact;

    fn c(a: usize, b: usize, cc: usize, d: usize) -> FourCycle {
        FourCycle::new(a, b, cc, d).unwrap()
    }

    #[test]
    fn matrix_shape() {
        for n in 4..9 {
            let m = build_inclusion_matrix(n).unwrap();
            assert_eq!(m.n_rows(), binomial(n, 2));
            assert_eq!(m.n_cols(), 3 * binomial(n, 4));
            assert!(m.column_counts().iter().all(|&x| x == 4));
            for r in 0..m.n_rows() {
                assert_eq!(m.row(r).len(), 2 * binomial(n - 2, 2));
            }
        }
        assert!(build_inclusion_matrix(3).is_err());
    }

    #[test]
    fn n4_is_not_full_rank() {
        let m = build_inclusion_matrix(4).unwrap();
        assert_eq!((m.n_rows(), m.n_cols()), (6, 3));
        assert_eq!(rank_exact(&m), 3);
    }

    #[test]
    fn diamond_trade_vector() {
        let tp = CycleTradePair::new(vec![c(0, 2, 1, 3), c(0, 4, 1, 5)], vec![c(0, 2, 1, 4), c(0, 3, 1, 5)]).unwrap();
        assert_eq!(tp.volume(), 2);
        assert_eq!(tp.foundation(), 6);
        let v = trade_vector(6, &tp).unwrap();
        let nz = v.nonzero();
        assert_eq!(nz.len(), 4);
        assert_eq!(v.get(&c(0, 2, 1, 3)), 1);
        assert_eq!(v.get(&c(0, 4, 1, 5)), 1);
        assert_eq!(v.get(&c(0, 2, 1, 4)), -1);
        assert_eq!(v.get(&c(0, 3, 1, 5)), -1);
        let back = trade_vector(6, &tp.swapped()).unwrap();
        assert_eq!(back, CycleVector::zeros(6).sub(&v));
    }

    #[test]
    fn trade_violations() {
        assert!(matches!(
            CycleTradePair::new(vec![c(0, 1, 2, 3), c(0, 1, 4, 5)], vec![]),
            Err(CycleTradeViolation::NotEdgeDisjoint { side: "T", .. })
        ));
        assert!(matches!(
            CycleTradePair::new(vec![c(0, 1, 2, 3)], vec![c(0, 1, 2, 3)]),
            Err(CycleTradeViolation::CommonCycle(_))
        ));
        assert!(matches!(
            CycleTradePair::new(vec![c(0, 1, 2, 3)], vec![c(0, 2, 1, 3)]),
            Err(CycleTradeViolation::EdgeUnionMismatch { .. })
        ));
    }

    #[test]
    fn system_validation() {
        assert!(CycleSystem::new(5, vec![]).is_err());
        assert!(CycleSystem::new(1, vec![]).is_ok());
        let err = CycleSystem::new(4, vec![c(0, 1, 2, 3), c(0, 1, 3, 2)]).unwrap_err();
        assert!(matches!(err, CycleError::InvalidSystem(_)));
    }
}
