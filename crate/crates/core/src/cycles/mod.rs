//! 4-cycle systems of complete graphs, double-diamond trades and the
//! diamond-move planner.

mod diamond;
mod find;
mod graph;
pub mod io;
mod search;
mod system;
mod transform;

use thiserror::Error;

use crate::linalg::LinalgError;

pub use diamond::{
    count_double_diamond_configs, decompose_trade, diamond_basis, diamond_span_rank, diamond_span_rank_modular,
    diamond_vectors, double_diamond_pairs, enumerate_double_diamonds, DiamondBasis, DiamondEnumeration,
    DoubleDiamond, Pairing, RankMethod, SpanRankReport, TradeDecomposition,
};
pub use find::{find_cycle_system, find_cycle_system_shuffled, is_admissible, DEFAULT_NODE_BUDGET};
pub use graph::{
    binomial, cycle_column, cycle_count, edge_count, edge_endpoints, edge_index, enumerate_cycles, CycleIndex,
    FourCycle,
};
pub use search::{search_diamond_free, FailureReport, SearchConfig, SearchOutcome, DEFAULT_SEARCH_SEED};
pub use system::{build_inclusion_matrix, trade_vector, CycleSystem, CycleTradePair, CycleTradeViolation, CycleVector};
pub use transform::{
    apply_diamond_move, augmented, format_plan, parse_plan, replay, transform, Certificate, DiamondPlan, Mode, TransformOutcome,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycleError {
    #[error("order {n} is below the minimum {min}")]
    OrderTooSmall { n: usize, min: usize },
    #[error("NotAdmissible: no 4-cycle system of order {0} exists (requires n = 1 mod 8)")]
    NotAdmissible(usize),
    #[error("Exhausted: node budget spent after {nodes} nodes")]
    Exhausted { nodes: u64 },
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("invalid cycle system: {0}")]
    InvalidSystem(String),
    #[error("invalid trade: {0}")]
    InvalidTrade(CycleTradeViolation),
    #[error("vector is not in the kernel: edge {{{},{}}} has sum {sum}", edge.0, edge.1)]
    KernelMembership { edge: (usize, usize), sum: i64 },
    #[error("SpanDeficient: double-diamonds of order {n} span {rank} of {kernel_dim} kernel dimensions")]
    SpanDeficient { n: usize, rank: usize, kernel_dim: usize },
    #[error("missing cycles: {}", fmt_cycles(.0))]
    MissingCycles(Vec<FourCycle>),
    #[error("ScheduleFailure: stuck after {applied} of {total} moves")]
    ScheduleFailure { applied: usize, total: usize, prefix: String },
    #[error("replaying the plan did not reach the target")]
    Reconstruction,
    #[error("orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

fn fmt_cycles(cs: &[FourCycle]) -> String {
    cs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}
