use std::path::PathBuf;

use anyhow::Result;
use clap::Subcommand;
use serde_json::json;
use trade_kernel::linalg::{
    integer_kernel_basis, kernel_basis, lattice_equal, rank_exact, rank_mod_p, LinalgError, SparseIntMatrix,
};

use crate::json::int_vec;
use crate::{Ctx, Output};

/// Matrices are read in the dump format: a `rows=<r> cols=<c>` header, then
/// `row col value` lines. For `lattice-eq`, the rows are the generators.
#[derive(Subcommand, Debug)]
pub enum LinalgCommand {
    /// Rank over Q, or over GF(p) with --prime.
    Rank {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Primitive rational kernel basis, or a saturated integer basis with
    /// --integer.
    Kernel {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        integer: bool,
    },
    /// Whether two generator families span the same integer lattice.
    LatticeEq {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
}

fn rows_of(m: &SparseIntMatrix) -> Vec<Vec<num_bigint::BigInt>> {
    m.to_dense()
}

fn budget_or(e: LinalgError) -> Result<Output> {
    match e {
        LinalgError::ResourceBudget { .. } => Ok(Output::negative("ResourceBudget", e.to_string())),
        _ => Err(e.into()),
    }
}

pub fn run(cmd: LinalgCommand, ctx: &mut Ctx) -> Result<Output> {
    match cmd {
        LinalgCommand::Rank { matrix, prime } => {
            let m = SparseIntMatrix::parse_dump(&ctx.read(&matrix)?)?;
            let (rank, mode) = match prime {
                Some(p) => (rank_mod_p(&m, p)?, format!("mod {p}")),
                None => (rank_exact(&m), "exact".to_string()),
            };
            let payload = json!({
                "rows": m.n_rows(), "cols": m.n_cols(), "rank": rank, "nullity": m.n_cols() - rank, "mode": mode,
            });
            Ok(Output::ok(payload, format!("{rank}\n")))
        }
        LinalgCommand::Kernel { matrix, integer } => {
            let m = SparseIntMatrix::parse_dump(&ctx.read(&matrix)?)?;
            let basis = if integer {
                match integer_kernel_basis(&m) {
                    Ok(b) => b,
                    Err(e) => return budget_or(e),
                }
            } else {
                kernel_basis(&m)
            };
            let text: String = basis
                .iter()
                .map(|v| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ") + "\n")
                .collect();
            let payload = json!({
                "cols": m.n_cols(), "dimension": basis.len(), "integer": integer,
                "basis": basis.iter().map(|v| int_vec(v)).collect::<Vec<_>>(),
            });
            Ok(Output::ok(payload, text))
        }
        LinalgCommand::LatticeEq { a, b } => {
            let ma = SparseIntMatrix::parse_dump(&ctx.read(&a)?)?;
            let mb = SparseIntMatrix::parse_dump(&ctx.read(&b)?)?;
            let eq = match lattice_equal(&rows_of(&ma), &rows_of(&mb)) {
                Ok(eq) => eq,
                Err(e) => return budget_or(e),
            };
            Ok(Output::ok(json!({ "equal": eq }), format!("{eq}\n")))
        }
    }
}
