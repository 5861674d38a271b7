use rand::seq::{IteratorRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::diamond::double_diamond_pairs;
use super::find::{cover, find_in, is_admissible};
use super::graph::{edge_count, CycleIndex, FourCycle};
use super::system::CycleSystem;
use super::CycleError;

/// Seed used when none is given. At `n = 9` it succeeds on restart 5.
pub const DEFAULT_SEARCH_SEED: u64 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub seed: u64,
    pub restarts: usize,
    /// Hill-climbing moves per restart.
    pub steps: usize,
    /// Node budget for each backtracking call.
    pub budget: u64,
    /// Restarts run concurrently. Results do not depend on it.
    pub jobs: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            seed: DEFAULT_SEARCH_SEED,
            restarts: 500,
            steps: 2000,
            budget: super::find::DEFAULT_NODE_BUDGET,
            jobs: 1,
        }
    }
}

/// Best state seen when no diamond-free system was found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FailureReport {
    pub best_count: usize,
    pub best_system: CycleSystem,
    pub restarts: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found {
        system: CycleSystem,
        /// Zero-based restart that succeeded.
        restart: usize,
        /// Hill-climbing moves used within that restart.
        steps: usize,
    },
    NotFound(FailureReport),
}

struct RestartResult {
    system: CycleSystem,
    count: usize,
    steps: usize,
}

/// Largest number of extra cycles pulled into a move besides the diamond
/// pair.
const MAX_EXTRA: usize = 2;

/// Replaces the cycles at `positions` by a random decomposition of their
/// edge union.
fn redecompose<R: Rng>(
    idx: &CycleIndex,
    cycles: &[FourCycle],
    positions: &[usize],
    budget: u64,
    rng: &mut R,
) -> Result<Option<Vec<FourCycle>>, CycleError> {
    let n = idx.order();
    let mut covered = vec![true; edge_count(n)];
    for &p in positions {
        for e in cycles[p].edge_indices(n) {
            covered[e] = false;
        }
    }
    let Some(cols) = cover(idx, covered, budget, Some(rng))? else {
        return Ok(None);
    };
    let mut next: Vec<FourCycle> = cycles
        .iter()
        .enumerate()
        .filter(|(i, _)| !positions.contains(i))
        .map(|(_, c)| *c)
        .collect();
    next.extend(cols.into_iter().map(|c| idx.cycle(c)));
    Ok(Some(next))
}

fn run_restart(idx: &CycleIndex, cfg: &SearchConfig, restart: usize) -> Result<RestartResult, CycleError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(restart as u64);
    let start = find_in(idx, cfg.budget, Some(&mut rng))?;
    let mut cycles = start.cycles().to_vec();
    let mut pairs = double_diamond_pairs(&cycles);
    let mut steps = 0;
    while !pairs.is_empty() && steps < cfg.steps {
        steps += 1;
        let &(i, j) = pairs.choose(&mut rng).unwrap();
        let extra = rng.gen_range(0..=MAX_EXTRA);
        let mut positions = vec![i, j];
        positions.extend(
            (0..cycles.len())
                .filter(|p| *p != i && *p != j)
                .choose_multiple(&mut rng, extra),
        );
        if let Some(next) = redecompose(idx, &cycles, &positions, cfg.budget, &mut rng)? {
            let next_pairs = double_diamond_pairs(&next);
            if next_pairs.len() <= pairs.len() {
                cycles = next;
                pairs = next_pairs;
            }
        }
    }
    let system = CycleSystem::new(idx.order(), cycles)?;
    Ok(RestartResult {
        count: pairs.len(),
        system,
        steps,
    })
}

/// Seeded restart hill-climbing for a 4-cycle system with no
/// double-diamond.
///
/// Each restart starts from a backtracking search with shuffled candidate
/// order. A move picks a diamond pair of cycles plus up to two other cycles
/// and replaces them with a random decomposition of their edge union, which
/// is a kernel move; moves that raise the diamond count are rejected.
/// Restart `r` draws from stream `r` of the seeded generator, so the result
/// is the same for any `jobs`.
pub fn search_diamond_free(n: usize, cfg: &SearchConfig) -> Result<SearchOutcome, CycleError> {
    if !is_admissible(n) {
        return Err(CycleError::NotAdmissible(n));
    }
    if n == 1 {
        return Ok(SearchOutcome::Found {
            system: CycleSystem::new(1, Vec::new())?,
            restart: 0,
            steps: 0,
        });
    }
    let idx = CycleIndex::new(n);
    let jobs = cfg.jobs.max(1);
    let mut best: Option<RestartResult> = None;
    let mut next = 0;
    while next < cfg.restarts {
        let wave: Vec<usize> = (next..cfg.restarts.min(next + jobs)).collect();
        next += wave.len();
        let results: Vec<Result<RestartResult, CycleError>> = if jobs == 1 {
            wave.iter().map(|&r| run_restart(&idx, cfg, r)).collect()
        } else {
            std::thread::scope(|s| {
                let handles: Vec<_> = wave
                    .iter()
                    .map(|&r| {
                        let idx = &idx;
                        s.spawn(move || run_restart(idx, cfg, r))
                    })
                    .collect();
                handles.into_iter().map(|h| h.join().expect("search thread panicked")).collect()
            })
        };
        for (r, res) in wave.into_iter().zip(results) {
            let res = res?;
            if res.count == 0 {
                return Ok(SearchOutcome::Found {
                    system: res.system,
                    restart: r,
                    steps: res.steps,
                });
            }
            if best.as_ref().is_none_or(|b| res.count < b.count) {
                best = Some(res);
            }
        }
    }
    let best = best.expect("at least one restart");
    Ok(SearchOutcome::NotFound(FailureReport {
        best_count: best.count,
        best_system: best.system,
        restarts: cfg.restarts,
    }))
}
