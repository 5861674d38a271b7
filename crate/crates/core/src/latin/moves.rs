use std::fmt::Write as _;

use crate::plan::{MovePlan, Sign, SignedMove};

use super::intercalate::{decompose, Intercalate};
use super::{LatinError, LatinSquare, TripleVector};

/// State after a single move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveOutcome {
    pub state: TripleVector,
    /// Entries outside {0, 1}.
    pub improper: usize,
}

fn check_state(state: &TripleVector) -> Result<(), LatinError> {
    match state.first_bad_line(1) {
        None => Ok(()),
        Some((kind, a, b, sum)) => Err(LatinError::MalformedState {
            line: format!("{} ({a},{b})", kind.name()),
            sum,
        }),
    }
}

/// `state + sign * B_ijk`. The state must have every line sum equal to 1;
/// the result does too, but may leave {0, 1}.
pub fn apply_move(state: &TripleVector, b: Intercalate, sign: Sign) -> Result<MoveOutcome, LatinError> {
    let n = state.order();
    Intercalate::new(b.i, b.j, b.k, n)?;
    check_state(state)?;
    let mut next = state.clone();
    b.add_to(&mut next, sign.factor());
    debug_assert!(check_state(&next).is_ok());
    let improper = next.improper_cells();
    Ok(MoveOutcome { state: next, improper })
}

/// Intercalate moves taking `from` to `to`, with the improper-cell count
/// after each step as audit data.
///
/// Moves follow the basis coefficients of `to - from`: positive ones first,
/// then negative, each in label order and repeated `|c|` times. The plan is
/// replayed before it is returned.
pub fn transform(from: &LatinSquare, to: &LatinSquare) -> Result<MovePlan<Intercalate>, LatinError> {
    let n = from.order();
    if to.order() != n {
        return Err(LatinError::OrderMismatch { left: n, right: to.order() });
    }
    if from == to {
        return Ok(MovePlan::empty());
    }
    let start = from.to_vector();
    let goal = to.to_vector();
    let coeffs = decompose(&goal.sub(&start))?;
    let nonzero = coeffs.nonzero();
    let mut moves = Vec::new();
    for wanted in [Sign::Plus, Sign::Minus] {
        for &(b, c) in &nonzero {
            if Sign::of(c) == Some(wanted) {
                moves.extend((0..c.unsigned_abs()).map(|_| SignedMove { sign: wanted, mv: b }));
            }
        }
    }
    let mut state = start;
    let mut audit = Vec::with_capacity(moves.len());
    for m in &moves {
        let out = apply_move(&state, m.mv, m.sign)?;
        audit.push(out.improper);
        state = out.state;
    }
    if state != goal {
        return Err(LatinError::Reconstruction);
    }
    Ok(MovePlan { moves, audit })
}

/// Plan text: one `<sign> <i> <j> <k>` line per move, then
/// `improper_max=<count>`.
pub fn format_plan(plan: &MovePlan<Intercalate>) -> String {
    let mut out = String::new();
    for m in &plan.moves {
        writeln!(out, "{} {} {} {}", m.sign, m.mv.i, m.mv.j, m.mv.k).unwrap();
    }
    writeln!(out, "improper_max={}", plan.audit_max()).unwrap();
    out
}

/// Parses [`format_plan`] output. Audit figures are not stored in the text,
/// so they come back empty; replay recomputes them.
pub fn parse_plan(text: &str) -> Result<(Vec<SignedMove<Intercalate>>, usize), LatinError> {
    let mut moves = Vec::new();
    let mut improper_max = None;
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let bad = |m: &str| LatinError::Parse {
            line: idx + 1,
            message: m.to_string(),
        };
        if let Some(v) = line.strip_prefix("improper_max=") {
            improper_max = Some(v.parse().map_err(|_| bad("bad improper_max"))?);
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 4 {
            return Err(bad("expected `<sign> <i> <j> <k>`"));
        }
        let sign: Sign = parts[0].parse().map_err(|e: String| bad(&e))?;
        let idx: Vec<usize> = parts[1..]
            .iter()
            .map(|p| p.parse().map_err(|_| bad("bad index")))
            .collect::<Result<_, _>>()?;
        moves.push(SignedMove {
            sign,
            mv: Intercalate {
                i: idx[0],
                j: idx[1],
                k: idx[2],
            },
        });
    }
    let improper_max = improper_max.ok_or(LatinError::Parse {
        line: text.lines().count(),
        message: "missing improper_max line".into(),
    })?;
    Ok((moves, improper_max))
}

/// Applies a move list to a square; returns the final state and the
/// per-step improper counts.
pub fn replay(from: &LatinSquare, moves: &[SignedMove<Intercalate>]) -> Result<(TripleVector, Vec<usize>), LatinError> {
    let mut state = from.to_vector();
    let mut audit = Vec::with_capacity(moves.len());
    for m in moves {
        let out = apply_move(&state, m.mv, m.sign)?;
        audit.push(out.improper);
        state = out.state;
    }
    Ok((state, audit))
}
