//! Exact linear algebra for latin trades and 4-cycle trades.

pub mod cycles;
pub mod latin;
pub mod linalg;
pub mod plan;
