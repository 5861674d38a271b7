use rand::seq::SliceRandom;
use rand::Rng;

use super::graph::{edge_count, CycleIndex};
use super::system::CycleSystem;
use super::CycleError;

/// Default node limit for [`find_cycle_system`].
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

/// `n = 1 (mod 8)`, or the trivial `n = 1`.
pub fn is_admissible(n: usize) -> bool {
    n % 8 == 1
}

struct Search<'a, R> {
    idx: &'a CycleIndex,
    covered: Vec<bool>,
    chosen: Vec<usize>,
    nodes: u64,
    budget: u64,
    rng: Option<&'a mut R>,
}

impl<R: Rng> Search<'_, R> {
    /// Covers the lowest uncovered edge at or after `from` with each
    /// fitting cycle in turn.
    fn run(&mut self, from: usize) -> Result<bool, CycleError> {
        let Some(e) = (from..self.covered.len()).find(|&e| !self.covered[e]) else {
            return Ok(true);
        };
        let mut candidates: Vec<usize> = self
            .idx
            .through(e)
            .iter()
            .copied()
            .filter(|&c| self.idx.edges_of(c).iter().all(|&x| !self.covered[x]))
            .collect();
        if let Some(rng) = self.rng.as_deref_mut() {
            candidates.shuffle(rng);
        }
        for c in candidates {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(CycleError::Exhausted { nodes: self.budget });
            }
            let es = self.idx.edges_of(c);
            for &x in &es {
                self.covered[x] = true;
            }
            self.chosen.push(c);
            if self.run(e + 1)? {
                return Ok(true);
            }
            self.chosen.pop();
            for &x in &es {
                self.covered[x] = false;
            }
        }
        Ok(false)
    }
}

fn search<R: Rng>(n: usize, budget: u64, rng: Option<&mut R>) -> Result<CycleSystem, CycleError> {
    if !is_admissible(n) {
        return Err(CycleError::NotAdmissible(n));
    }
    if n == 1 {
        return CycleSystem::new(1, Vec::new());
    }
    let idx = CycleIndex::new(n);
    find_in(&idx, budget, rng)
}

pub(crate) fn find_in<R: Rng>(idx: &CycleIndex, budget: u64, rng: Option<&mut R>) -> Result<CycleSystem, CycleError> {
    let n = idx.order();
    match cover(idx, vec![false; edge_count(n)], budget, rng)? {
        Some(chosen) => CycleSystem::new(n, chosen.iter().map(|&c| idx.cycle(c)).collect()),
        None => Err(CycleError::Exhausted { nodes: 0 }),
    }
}

/// Columns of cycles partitioning the edges not marked in `covered`, or
/// `None` when no partition exists.
pub(crate) fn cover<R: Rng>(
    idx: &CycleIndex,
    covered: Vec<bool>,
    budget: u64,
    rng: Option<&mut R>,
) -> Result<Option<Vec<usize>>, CycleError> {
    let mut s = Search {
        idx,
        covered,
        chosen: Vec::new(),
        nodes: 0,
        budget,
        rng,
    };
    Ok(if s.run(0)? { Some(s.chosen) } else { None })
}

/// A 4-cycle system of `K_n` by backtracking: cover the lowest uncovered
/// edge, trying its cycles in canonical order. Deterministic.
pub fn find_cycle_system(n: usize, budget: u64) -> Result<CycleSystem, CycleError> {
    search::<rand_chacha::ChaCha8Rng>(n, budget, None)
}

/// As [`find_cycle_system`], with the candidate cycles at every node
/// shuffled by `rng`.
pub fn find_cycle_system_shuffled<R: Rng>(n: usize, budget: u64, rng: &mut R) -> Result<CycleSystem, CycleError> {
    search(n, budget, Some(rng))
}
