use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::Subcommand;
use serde_json::{json, Value};
use trade_kernel::latin::{
    self, decompose, format_plan, intercalate_basis, intercalate_labels, io, parse_plan, replay, trade_vector,
    LatinError, LatinInclusionMatrix,
};
use trade_kernel::linalg::{rank_exact, SparseIntMatrix};

use crate::{write_out, Ctx, Output};

#[derive(Subcommand, Debug)]
pub enum LatinCommand {
    /// Inclusion matrix of order n (text: matrix dump).
    Matrix {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact rank and nullity of the inclusion matrix.
    Rank {
        #[arg(long)]
        n: usize,
    },
    /// Intercalate basis labels and the rank of the stacked family.
    Basis {
        #[arg(long)]
        n: usize,
    },
    /// Intercalate coefficients of a trade.
    Decompose {
        #[arg(long)]
        trade: PathBuf,
    },
    /// Intercalate moves from one square to another.
    Transform {
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Checks a square, a trade, or a plan (with --from and --to).
    Validate {
        #[arg(long, group = "what")]
        square: Option<PathBuf>,
        #[arg(long, group = "what")]
        trade: Option<PathBuf>,
        #[arg(long, group = "what", requires_all = ["from", "to"])]
        plan: Option<PathBuf>,
        #[arg(long)]
        from: Option<PathBuf>,
        #[arg(long)]
        to: Option<PathBuf>,
    },
}

fn label(i: usize, j: usize, k: usize) -> String {
    format!("({i},{j},{k})")
}

fn invalid(e: LatinError) -> Output {
    Output::negative("Invalid", e.to_string())
}

pub fn run(cmd: LatinCommand, ctx: &mut Ctx) -> Result<Output> {
    match cmd {
        LatinCommand::Matrix { n, out } => {
            let m = LatinInclusionMatrix::build(n)?;
            let dump = m.matrix().dump();
            write_out(&out, &dump)?;
            Ok(Output::ok(
                json!({ "n": n, "rows": m.matrix().n_rows(), "cols": m.matrix().n_cols(), "nnz": m.matrix().nnz() }),
                dump,
            ))
        }
        LatinCommand::Rank { n } => {
            let m = LatinInclusionMatrix::build(n)?;
            let (rows, cols) = (m.matrix().n_rows(), m.matrix().n_cols());
            let rank = rank_exact(m.matrix());
            let payload = json!({
                "n": n, "rows": rows, "cols": cols, "rank": rank, "nullity": cols - rank, "mode": "exact",
            });
            let text = format!("n={n} rows={rows} cols={cols} rank={rank} nullity={}\n", cols - rank);
            Ok(Output::ok(payload, text))
        }
        LatinCommand::Basis { n } => {
            let labels = intercalate_labels(n)?;
            let vectors = intercalate_basis(n)?;
            let stack = SparseIntMatrix::from_row_vectors(
                n * n * n,
                &vectors.iter().map(|v| v.to_int_vector()).collect::<Vec<_>>(),
            )?;
            let rank = rank_exact(&stack);
            let text: String = labels.iter().map(|b| format!("{} {} {}\n", b.i, b.j, b.k)).collect();
            let payload = json!({
                "n": n,
                "count": labels.len(),
                "rank": rank,
                "labels": labels.iter().map(|b| json!([b.i, b.j, b.k])).collect::<Vec<_>>(),
            });
            Ok(Output::ok(payload, text))
        }
        LatinCommand::Decompose { trade } => {
            let text = ctx.read(&trade)?;
            let t = io::parse_trade(&text)?;
            let v = trade_vector(&t)?;
            let c = decompose(&v)?;
            let mut coeffs = serde_json::Map::new();
            let mut lines = String::new();
            for (b, x) in c.nonzero() {
                coeffs.insert(label(b.i, b.j, b.k), Value::from(x));
                lines.push_str(&format!("{x:+} {} {} {}\n", b.i, b.j, b.k));
            }
            let payload = json!({
                "n": t.order(), "volume": t.volume(), "weight": c.weight(), "coefficients": coeffs,
            });
            Ok(Output::ok(payload, lines))
        }
        LatinCommand::Transform { from, to, out } => {
            let l1 = io::parse_square(&ctx.read(&from)?)?;
            let l2 = io::parse_square(&ctx.read(&to)?)?;
            let plan = latin::transform(&l1, &l2)?;
            let text = format_plan(&plan);
            write_out(&out, &text)?;
            let payload = json!({
                "n": l1.order(),
                "moves": plan.len(),
                "improper_max": plan.audit_max(),
                "plan": plan.moves.iter().map(|m| format!("{} {} {} {}", m.sign, m.mv.i, m.mv.j, m.mv.k)).collect::<Vec<_>>(),
                "audit": plan.audit,
            });
            Ok(Output::ok(payload, text))
        }
        LatinCommand::Validate { square, trade, plan, from, to } => {
            if let Some(p) = square {
                return Ok(match io::parse_square(&ctx.read(&p)?) {
                    Ok(sq) => Output::ok(json!({ "valid": true, "kind": "square", "n": sq.order() }), "valid square\n"),
                    Err(e @ LatinError::Parse { .. }) => return Err(e.into()),
                    Err(e) => invalid(e),
                });
            }
            if let Some(p) = trade {
                let (pp, qq) = io::parse_trade_pair(&ctx.read(&p)?)?;
                return Ok(match latin::validate_trade(pp, qq) {
                    Ok(t) => Output::ok(
                        json!({ "valid": true, "kind": "trade", "n": t.order(), "volume": t.volume() }),
                        format!("valid trade, volume {}\n", t.volume()),
                    ),
                    Err(v) => Output {
                        payload: json!({ "valid": false, "kind": "trade", "condition": v.condition(), "violation": v.to_string() }),
                        text: format!("invalid trade: {v}\n"),
                        negative: true,
                    },
                });
            }
            if let (Some(p), Some(f), Some(t)) = (plan, from, to) {
                let (moves, improper_max) = parse_plan(&ctx.read(&p)?)?;
                let l1 = io::parse_square(&ctx.read(&f)?)?;
                let l2 = io::parse_square(&ctx.read(&t)?)?;
                let (end, audit) = match replay(&l1, &moves) {
                    Ok(r) => r,
                    Err(e) => return Ok(invalid(e)),
                };
                let reached = end == l2.to_vector();
                let max_ok = audit.iter().copied().max().unwrap_or(0) == improper_max;
                let payload = json!({
                    "valid": reached && max_ok, "kind": "plan", "moves": moves.len(),
                    "reaches_target": reached, "improper_max_matches": max_ok,
                });
                let text = format!("reaches_target={reached} improper_max_matches={max_ok}\n");
                return Ok(Output {
                    payload,
                    text,
                    negative: !(reached && max_ok),
                });
            }
            bail!("validate needs --square, --trade, or --plan with --from and --to")
        }
    }
}
