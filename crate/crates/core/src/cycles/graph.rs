//! Edges and 4-cycles of the complete graph, with their fixed indexing.

use std::fmt;

use super::CycleError;

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Index of edge `{u, v}` (`u < v`) of `K_n`: `u*n - u(u+1)/2 + (v-u-1)`.
#[inline]
pub fn edge_index(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    debug_assert!(u != v && v < n);
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

/// Endpoints of an edge index; inverse of [`edge_index`].
pub fn edge_endpoints(n: usize, mut idx: usize) -> (usize, usize) {
    for u in 0..n {
        let row = n - u - 1;
        if idx < row {
            return (u, u + 1 + idx);
        }
        idx -= row;
    }
    panic!("edge index out of range");
}

pub fn edge_count(n: usize) -> usize {
    binomial(n, 2)
}

/// A 4-cycle in canonical form `(v0, v1, v2, v3)`: `v0` is the smallest
/// vertex and its neighbours satisfy `v1 < v3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FourCycle([usize; 4]);

impl FourCycle {
    /// Canonicalizes the cycle `a - b - c - d - a`.
    pub fn new(a: usize, b: usize, c: usize, d: usize) -> Result<Self, CycleError> {
        let vs = [a, b, c, d];
        for x in 0..4 {
            for y in x + 1..4 {
                if vs[x] == vs[y] {
                    return Err(CycleError::InvalidCycle(format!("repeated vertex in ({a},{b},{c},{d})")));
                }
            }
        }
        let start = (0..4).min_by_key(|&i| vs[i]).unwrap();
        let r = |i: usize| vs[(start + i) % 4];
        let (v1, v3) = (r(1), r(3));
        Ok(if v1 < v3 {
            FourCycle([r(0), v1, r(2), v3])
        } else {
            FourCycle([r(0), v3, r(2), v1])
        })
    }

    pub fn vertices(&self) -> [usize; 4] {
        self.0
    }

    pub fn max_vertex(&self) -> usize {
        *self.0.iter().max().unwrap()
    }

    /// The four edges as `(min, max)` pairs.
    pub fn edges(&self) -> [(usize, usize); 4] {
        let v = self.0;
        let e = |a: usize, b: usize| (a.min(b), a.max(b));
        [e(v[0], v[1]), e(v[1], v[2]), e(v[2], v[3]), e(v[3], v[0])]
    }

    pub fn edge_indices(&self, n: usize) -> [usize; 4] {
        self.edges().map(|(u, v)| edge_index(n, u, v))
    }

    /// The two pairs of non-adjacent vertices, each as `(min, max)`.
    pub fn opposite_pairs(&self) -> [(usize, usize); 2] {
        let v = self.0;
        [(v[0].min(v[2]), v[0].max(v[2])), (v[1].min(v[3]), v[1].max(v[3]))]
    }

    pub fn sorted_vertices(&self) -> [usize; 4] {
        let mut s = self.0;
        s.sort_unstable();
        s
    }

    pub fn shared_vertices(&self, other: &FourCycle) -> usize {
        self.0.iter().filter(|v| other.0.contains(v)).count()
    }

    /// Which of the three cycles on its vertex set this is: 0 for
    /// `(w,x,y,z)`, 1 for `(w,x,z,y)`, 2 for `(w,y,x,z)`.
    pub fn variant(&self) -> usize {
        let [_, x, y, z] = self.sorted_vertices();
        let opposite = self.0[2];
        if opposite == y {
            0
        } else if opposite == z {
            1
        } else {
            debug_assert_eq!(opposite, x);
            2
        }
    }

    /// Image under a vertex relabeling.
    pub fn relabel(&self, perm: &[usize]) -> FourCycle {
        let v = self.0;
        FourCycle::new(perm[v[0]], perm[v[1]], perm[v[2]], perm[v[3]]).expect("permutation keeps vertices distinct")
    }
}

impl fmt::Display for FourCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.0;
        write!(f, "({},{},{},{})", v[0], v[1], v[2], v[3])
    }
}

/// Lexicographic rank of a sorted 4-subset of `0..n`.
fn subset_rank(n: usize, s: [usize; 4]) -> usize {
    let mut rank = 0;
    let mut prev = 0;
    for (i, &x) in s.iter().enumerate() {
        for v in prev..x {
            rank += binomial(n - 1 - v, 3 - i);
        }
        prev = x + 1;
    }
    rank
}

/// Column of a cycle in the canonical order: 4-subsets lexicographic, three
/// variants per subset.
pub fn cycle_column(n: usize, c: &FourCycle) -> usize {
    3 * subset_rank(n, c.sorted_vertices()) + c.variant()
}

pub fn cycle_count(n: usize) -> usize {
    3 * binomial(n, 4)
}

/// All `3 * C(n,4)` cycles of `K_n` in canonical order.
pub fn enumerate_cycles(n: usize) -> Result<Vec<FourCycle>, CycleError> {
    if n < 4 {
        return Err(CycleError::OrderTooSmall { n, min: 4 });
    }
    Ok(all_cycles(n))
}

pub(crate) fn all_cycles(n: usize) -> Vec<FourCycle> {
    let mut out = Vec::with_capacity(cycle_count(n));
    for w in 0..n {
        for x in w + 1..n {
            for y in x + 1..n {
                for z in y + 1..n {
                    out.push(FourCycle([w, x, y, z]));
                    out.push(FourCycle([w, x, z, y]));
                    out.push(FourCycle([w, y, x, z]));
                }
            }
        }
    }
    out
}

/// Cycles of `K_n` with their edge incidences, for search routines.
#[derive(Clone, Debug)]
pub struct CycleIndex {
    n: usize,
    cycles: Vec<FourCycle>,
    edges_of: Vec<[usize; 4]>,
    /// Columns of the cycles through each edge, ascending.
    through: Vec<Vec<usize>>,
}

impl CycleIndex {
    pub fn new(n: usize) -> Self {
        let cycles = all_cycles(n);
        let edges_of: Vec<[usize; 4]> = cycles.iter().map(|c| c.edge_indices(n)).collect();
        let mut through = vec![Vec::new(); edge_count(n)];
        for (col, es) in edges_of.iter().enumerate() {
            for &e in es {
                through[e].push(col);
            }
        }
        CycleIndex {
            n,
            cycles,
            edges_of,
            through,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn cycle(&self, col: usize) -> FourCycle {
        self.cycles[col]
    }

    pub fn cycles(&self) -> &[FourCycle] {
        &self.cycles
    }

    pub fn edges_of(&self, col: usize) -> [usize; 4] {
        self.edges_of[col]
    }

    pub fn through(&self, edge: usize) -> &[usize] {
        &self.through[edge]
    }

    pub fn column(&self, c: &FourCycle) -> usize {
        cycle_column(self.n, c)
    }
}
