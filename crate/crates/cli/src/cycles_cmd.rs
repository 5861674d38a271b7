use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::Subcommand;
use serde_json::{json, Value};
use trade_kernel::cycles::{
    self, augmented, build_inclusion_matrix, count_double_diamond_configs, cycle_count, decompose_trade,
    diamond_basis, diamond_span_rank, double_diamond_pairs, enumerate_double_diamonds, find_cycle_system, format_plan,
    io, parse_plan, replay, search_diamond_free, trade_vector, CycleError, CycleSystem, Mode, RankMethod,
    SearchConfig, SearchOutcome, SpanRankReport, TransformOutcome, DEFAULT_SEARCH_SEED,
};
use trade_kernel::linalg::rank_exact;

use crate::json::rational;
use crate::{write_out, Ctx, Output};

#[derive(Subcommand, Debug)]
pub enum CyclesCommand {
    /// Edge-by-cycle inclusion matrix (text: matrix dump).
    Matrix {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rank and nullity of the inclusion matrix, with the diamond span rank.
    Rank {
        #[arg(long)]
        n: usize,
    },
    /// All double-diamonds of K_n.
    Diamonds {
        #[arg(long)]
        n: usize,
    },
    /// Rank of the double-diamond family against the kernel dimension.
    Span {
        #[arg(long)]
        n: usize,
    },
    /// Greedy double-diamond basis of the kernel.
    Basis {
        #[arg(long)]
        n: usize,
    },
    /// Rational coefficients of a cycle trade over the diamond basis.
    Decompose {
        #[arg(long)]
        trade: PathBuf,
        /// Order of K_n; defaults to the order in the trade file.
        #[arg(long)]
        n: Option<usize>,
    },
    /// A 4-cycle system of K_n by backtracking.
    Find {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded search for a system without double-diamonds.
    DiamondFree {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 500)]
        restarts: usize,
        #[arg(long, default_value_t = 2000)]
        steps: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Number of double-diamond pairs in a system.
    CountDiamonds {
        #[arg(long)]
        system: PathBuf,
    },
    /// Diamond moves from one system to another (see --mode).
    Transform {
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Checks a system, a trade, or a plan (with --from and --to).
    Validate {
        #[arg(long, group = "what")]
        system: Option<PathBuf>,
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

/// Negative results get exit status 1; other errors are input errors.
fn domain(e: CycleError) -> Result<Output> {
    let status = match &e {
        CycleError::NotAdmissible(_) => "NotAdmissible",
        CycleError::Exhausted { .. } => "Exhausted",
        CycleError::SpanDeficient { .. } => "SpanDeficient",
        CycleError::ScheduleFailure { .. } => "ScheduleFailure",
        CycleError::MissingCycles(_) => "MissingCycles",
        CycleError::InvalidSystem(_) => "InvalidSystem",
        CycleError::InvalidTrade(_) => "InvalidTrade",
        CycleError::KernelMembership { .. } => "KernelMembership",
        CycleError::Reconstruction => "Reconstruction",
        _ => return Err(e.into()),
    };
    let mut out = Output::negative(status, e.to_string());
    if let CycleError::ScheduleFailure { prefix, .. } = &e {
        out.payload["prefix"] = Value::from(prefix.lines().collect::<Vec<_>>());
    }
    Ok(out)
}

fn system_json(cs: &CycleSystem) -> Value {
    json!({
        "n": cs.order(),
        "cycles": cs.cycles().iter().map(|c| c.vertices().to_vec()).collect::<Vec<_>>(),
    })
}

fn span_json(r: &SpanRankReport) -> Value {
    let (mode, primes, ranks) = match &r.method {
        RankMethod::Exact => ("exact".to_string(), Value::Null, Value::Null),
        RankMethod::Modular { primes, ranks, certified } => (
            if *certified { "modular-certified" } else { "modular" }.to_string(),
            json!(primes),
            json!(ranks),
        ),
    };
    json!({
        "n": r.n, "diamond_count": r.diamond_count, "diamond_span_rank": r.rank,
        "kernel_dim": r.kernel_dim, "spans_kernel": r.spans_kernel(), "mode": mode,
        "primes": primes, "prime_ranks": ranks,
    })
}

pub fn run(cmd: CyclesCommand, ctx: &mut Ctx) -> Result<Output> {
    match cmd {
        CyclesCommand::Matrix { n, out } => {
            let m = build_inclusion_matrix(n)?;
            let dump = m.dump();
            write_out(&out, &dump)?;
            Ok(Output::ok(
                json!({ "n": n, "rows": m.n_rows(), "cols": m.n_cols(), "nnz": m.nnz() }),
                dump,
            ))
        }
        CyclesCommand::Rank { n } => {
            let m = build_inclusion_matrix(n)?;
            let rank = rank_exact(&m);
            let span = diamond_span_rank(n)?;
            let mode = span_json(&span)["mode"].clone();
            let payload = json!({
                "n": n, "rows": m.n_rows(), "cols": m.n_cols(), "rank": rank,
                "nullity": m.n_cols() - rank, "diamond_count": span.diamond_count,
                "diamond_span_rank": span.rank, "mode": mode,
            });
            let text = format!(
                "n={n} rows={} cols={} rank={rank} nullity={} diamond_count={} diamond_span_rank={}\n",
                m.n_rows(),
                m.n_cols(),
                m.n_cols() - rank,
                span.diamond_count,
                span.rank
            );
            Ok(Output::ok(payload, text))
        }
        CyclesCommand::Diamonds { n } => {
            let e = enumerate_double_diamonds(n);
            let lines: Vec<String> = e.diamonds.iter().map(ToString::to_string).collect();
            if let Some(w) = &e.warning {
                eprintln!("warning: {w}");
            }
            let payload = json!({ "n": n, "count": lines.len(), "warning": e.warning, "diamonds": lines });
            Ok(Output::ok(payload, lines.iter().map(|l| format!("{l}\n")).collect::<String>()))
        }
        CyclesCommand::Span { n } => {
            let r = diamond_span_rank(n)?;
            let text = format!("n={n} diamond_span_rank={} kernel_dim={}\n", r.rank, r.kernel_dim);
            Ok(Output::ok(span_json(&r), text))
        }
        CyclesCommand::Basis { n } => match diamond_basis(n) {
            Ok(b) => {
                let lines: Vec<String> = b.diamonds().iter().map(ToString::to_string).collect();
                let text = lines.iter().map(|l| format!("{l}\n")).collect::<String>();
                Ok(Output::ok(json!({ "n": n, "size": lines.len(), "diamonds": lines }), text))
            }
            Err(e) => domain(e),
        },
        CyclesCommand::Decompose { trade, n } => {
            let (file_n, pair) = io::parse_trade(&ctx.read(&trade)?)?;
            let n = n.unwrap_or(file_n);
            let v = match trade_vector(n, &pair) {
                Ok(v) => v,
                Err(e) => return domain(e),
            };
            let basis = match diamond_basis(n) {
                Ok(b) => b,
                Err(e) => return domain(e),
            };
            let dec = match decompose_trade(&basis, &v) {
                Ok(d) => d,
                Err(e) => return domain(e),
            };
            let mut coeffs = serde_json::Map::new();
            let mut text = String::new();
            for (i, c) in dec.support() {
                let d = basis.diamonds()[i];
                coeffs.insert(d.to_string(), rational(c));
                text.push_str(&format!("{c} {d}\n"));
            }
            let payload = json!({
                "n": n, "volume": pair.volume(), "foundation": pair.foundation(),
                "integral": dec.integral, "coefficients": coeffs,
            });
            Ok(Output::ok(payload, text))
        }
        CyclesCommand::Find { n, out } => match find_cycle_system(n, ctx.budget()?) {
            Ok(cs) => {
                let text = cs.to_string();
                write_out(&out, &text)?;
                Ok(Output::ok(system_json(&cs), text))
            }
            Err(e) => domain(e),
        },
        CyclesCommand::DiamondFree { n, restarts, steps, out } => {
            let cfg = SearchConfig {
                seed: ctx.seed(DEFAULT_SEARCH_SEED),
                restarts,
                steps,
                budget: ctx.budget()?,
                jobs: ctx.global.jobs,
            };
            match search_diamond_free(n, &cfg) {
                Ok(SearchOutcome::Found { system, restart, steps }) => {
                    let text = system.to_string();
                    write_out(&out, &text)?;
                    let mut payload = system_json(&system);
                    payload["diamond_count"] = json!(count_double_diamond_configs(&system));
                    payload["restart"] = json!(restart);
                    payload["steps"] = json!(steps);
                    Ok(Output::ok(payload, text))
                }
                Ok(SearchOutcome::NotFound(r)) => {
                    let mut o = Output::negative(
                        "FailureReport",
                        format!("no diamond-free system in {} restarts; best count {}", r.restarts, r.best_count),
                    );
                    o.payload["best_count"] = json!(r.best_count);
                    o.payload["best_system"] = system_json(&r.best_system);
                    Ok(o)
                }
                Err(e) => domain(e),
            }
        }
        CyclesCommand::CountDiamonds { system } => {
            let cs = match io::parse_system(&ctx.read(&system)?) {
                Ok(cs) => cs,
                Err(e) => return domain(e),
            };
            let pairs: Vec<Value> = double_diamond_pairs(cs.cycles())
                .into_iter()
                .map(|(i, j)| json!([cs.cycles()[i].to_string(), cs.cycles()[j].to_string()]))
                .collect();
            let count = count_double_diamond_configs(&cs);
            Ok(Output::ok(json!({ "n": cs.order(), "count": count, "pairs": pairs }), format!("{count}\n")))
        }
        CyclesCommand::Transform { from, to, out } => {
            let cs1 = io::parse_system(&ctx.read(&from)?)?;
            let cs2 = io::parse_system(&ctx.read(&to)?)?;
            if cs1.order() != cs2.order() {
                bail!("orders differ: {} vs {}", cs1.order(), cs2.order());
            }
            let basis = match diamond_basis(cs1.order()) {
                Ok(b) => b,
                Err(e) => return domain(e),
            };
            let mode = ctx.global.mode;
            match cycles::transform(&basis, &cs1, &cs2, mode) {
                Ok(TransformOutcome::Plan(p)) => {
                    let text = format_plan(&p);
                    write_out(&out, &text)?;
                    let payload = json!({
                        "n": cs1.order(), "outcome": "plan", "mode": mode.to_string(),
                        "lambda": if mode == Mode::Virtual { Value::Null } else { json!(p.lambda) },
                        "moves": p.plan.len(), "improper_max": p.plan.audit_max(),
                        "fillers": p.fillers.iter().map(system_json).collect::<Vec<_>>(),
                        "plan": p.plan.moves.iter().map(|m| format!("{} {}", m.sign, m.mv)).collect::<Vec<_>>(),
                    });
                    Ok(Output::ok(payload, text))
                }
                Ok(TransformOutcome::Certificate(c)) => {
                    let mut coeffs = serde_json::Map::new();
                    let mut text = String::from("# non-integral coefficients of vector(from) - vector(to)\n");
                    for (d, x) in &c.coefficients {
                        coeffs.insert(d.to_string(), rational(x));
                        text.push_str(&format!("{x} {d}\n"));
                    }
                    let payload = json!({
                        "n": cs1.order(), "outcome": "certificate", "mode": mode.to_string(),
                        "integral": false, "coefficients": coeffs,
                    });
                    Ok(Output::ok(payload, text))
                }
                Err(e) => domain(e),
            }
        }
        CyclesCommand::Validate { system, trade, plan, from, to } => {
            if let Some(p) = system {
                return match io::parse_system(&ctx.read(&p)?) {
                    Ok(cs) => Ok(Output::ok(
                        json!({ "valid": true, "kind": "system", "n": cs.order(), "cycles": cs.len() }),
                        "valid system\n",
                    )),
                    Err(e) => domain(e),
                };
            }
            if let Some(p) = trade {
                return match io::parse_trade(&ctx.read(&p)?).and_then(|(n, t)| trade_vector(n, &t).map(|_| (n, t))) {
                    Ok((n, t)) => Ok(Output::ok(
                        json!({ "valid": true, "kind": "trade", "n": n, "volume": t.volume(), "foundation": t.foundation() }),
                        format!("valid trade, volume {}\n", t.volume()),
                    )),
                    Err(e) => domain(e),
                };
            }
            if let (Some(p), Some(f), Some(t)) = (plan, from, to) {
                let (moves, lambda) = parse_plan(&ctx.read(&p)?)?;
                let cs1 = io::parse_system(&ctx.read(&f)?)?;
                let cs2 = io::parse_system(&ctx.read(&t)?)?;
                return validate_plan(&moves, lambda, &cs1, &cs2);
            }
            bail!("validate needs --system, --trade, or --plan with --from and --to")
        }
    }
}

/// Replays a plan file. Lifted plans do not store their fillers, so the
/// check rebuilds them by running the transform again and compares.
fn validate_plan(
    moves: &[trade_kernel::plan::SignedMove<cycles::DoubleDiamond>],
    lambda: Option<usize>,
    cs1: &CycleSystem,
    cs2: &CycleSystem,
) -> Result<Output> {
    let n = cs1.order();
    if moves.iter().any(|m| m.mv.max_vertex() >= n) {
        return Ok(Output::negative("Invalid", format!("plan uses a vertex outside 0..{n}")));
    }
    let (start, goal, checked) = match lambda {
        None => (cs1.to_vector(), cs2.to_vector(), false),
        Some(1) => (cs1.to_vector(), cs2.to_vector(), true),
        Some(l) => {
            let basis = match diamond_basis(n) {
                Ok(b) => b,
                Err(e) => return domain(e),
            };
            let fillers = match cycles::transform(&basis, cs1, cs2, Mode::Lifted) {
                Ok(TransformOutcome::Plan(p)) if p.lambda == l => p.fillers,
                _ => return Ok(Output::negative("Invalid", format!("cannot rebuild fillers for lambda={l}"))),
            };
            (augmented(cs1, &fillers), augmented(cs2, &fillers), true)
        }
    };
    debug_assert_eq!(start.entries().len(), cycle_count(n));
    let ok = match replay(&start, moves, checked) {
        Ok((end, _)) => end == goal,
        Err(e) => return domain(e),
    };
    let payload = json!({ "valid": ok, "kind": "plan", "moves": moves.len(), "lambda": lambda, "reaches_target": ok });
    Ok(Output {
        payload,
        text: format!("reaches_target={ok}\n"),
        negative: !ok,
    })
}
