use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;

use crate::plan::{MovePlan, Sign, SignedMove};

use super::diamond::{decompose_trade, DiamondBasis, DoubleDiamond};
use super::find::{find_cycle_system, DEFAULT_NODE_BUDGET};
use super::graph::{cycle_count, FourCycle};
use super::system::{CycleSystem, CycleVector};
use super::CycleError;

/// How intermediate states of a diamond-move path are constrained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Every intermediate state is a 4-cycle system.
    Strict,
    /// Both endpoints carry `lambda - 1` filler systems; every intermediate
    /// state is a multiset of cycles covering each edge `lambda` times.
    Lifted,
    /// Negative multiplicities allowed.
    Virtual,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Strict => "strict",
            Mode::Lifted => "lifted",
            Mode::Virtual => "virtual",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "strict" => Ok(Mode::Strict),
            "lifted" => Ok(Mode::Lifted),
            "virtual" => Ok(Mode::Virtual),
            _ => Err(format!("unknown mode `{s}` (expected strict, lifted or virtual)")),
        }
    }
}

/// A replay-verified diamond-move path. The audit figure per step is the
/// number of cycles with multiplicity outside {0, 1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiamondPlan {
    pub mode: Mode,
    /// Edge multiplicity of the intermediate states; 1 in strict mode and
    /// in virtual mode.
    pub lambda: usize,
    /// Systems added to both endpoints, `lambda - 1` of them.
    pub fillers: Vec<CycleSystem>,
    pub plan: MovePlan<DoubleDiamond>,
}

/// Rational coefficients of `vector(cs1) - vector(cs2)` over the basis,
/// returned when they are not all integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub coefficients: Vec<(DoubleDiamond, BigRational)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TransformOutcome {
    Plan(DiamondPlan),
    Certificate(Certificate),
}

fn improper(state: &CycleVector) -> usize {
    state.entries().iter().filter(|&&x| x != 0 && x != 1).count()
}

/// `state + sign * vector(d)`: sign `+` removes the target cycles and adds
/// the source cycles, `-` the reverse. The removed cycles must be present.
pub fn apply_diamond_move(state: &CycleVector, d: &DoubleDiamond, sign: Sign) -> Result<CycleVector, CycleError> {
    if d.max_vertex() >= state.order() {
        return Err(CycleError::InvalidCycle(format!("{d} does not fit order {}", state.order())));
    }
    let removed = match sign {
        Sign::Plus => d.target_cycles(),
        Sign::Minus => d.source_cycles(),
    };
    let missing: Vec<FourCycle> = removed.into_iter().filter(|c| state.get(c) < 1).collect();
    if !missing.is_empty() {
        return Err(CycleError::MissingCycles(missing));
    }
    let mut next = state.clone();
    d.add_to(&mut next, sign.factor());
    Ok(next)
}

fn apply_unchecked(state: &mut CycleVector, m: &SignedMove<DoubleDiamond>) {
    m.mv.add_to(state, m.sign.factor());
}

/// Applies moves from `start`; with `checked`, every removed cycle must be
/// present. Returns the end state and the per-step audit.
pub fn replay(
    start: &CycleVector,
    moves: &[SignedMove<DoubleDiamond>],
    checked: bool,
) -> Result<(CycleVector, Vec<usize>), CycleError> {
    let mut state = start.clone();
    let mut audit = Vec::with_capacity(moves.len());
    for m in moves {
        if checked {
            state = apply_diamond_move(&state, &m.mv, m.sign)?;
        } else {
            apply_unchecked(&mut state, m);
        }
        audit.push(improper(&state));
    }
    Ok((state, audit))
}

/// Greedy order: repeatedly apply the first pending move whose removed
/// cycles are present. Returns the applied order, or the stuck prefix.
fn schedule_greedy(
    start: &CycleVector,
    moves: &[SignedMove<DoubleDiamond>],
) -> Result<Vec<SignedMove<DoubleDiamond>>, Vec<SignedMove<DoubleDiamond>>> {
    let mut pending: Vec<SignedMove<DoubleDiamond>> = moves.to_vec();
    let mut done = Vec::with_capacity(moves.len());
    let mut state = start.clone();
    while !pending.is_empty() {
        let Some(pos) = pending
            .iter()
            .position(|m| apply_diamond_move(&state, &m.mv, m.sign).is_ok())
        else {
            return Err(done);
        };
        let m = pending.remove(pos);
        apply_unchecked(&mut state, &m);
        done.push(m);
    }
    Ok(done)
}

fn format_moves(moves: &[SignedMove<DoubleDiamond>]) -> String {
    let mut out = String::new();
    for m in moves {
        writeln!(out, "{} {}", m.sign, m.mv).unwrap();
    }
    out
}

/// Lowest multiplicity each cycle reaches along `moves` from `start`.
fn prefix_minima(start: &CycleVector, moves: &[SignedMove<DoubleDiamond>]) -> Vec<i64> {
    let mut state = start.clone();
    let mut minima = state.entries().to_vec();
    for m in moves {
        apply_unchecked(&mut state, m);
        for (lo, &x) in minima.iter_mut().zip(state.entries()) {
            *lo = (*lo).min(x);
        }
    }
    minima
}

/// Vertex permutation taking cycle `from` onto cycle `to`, vertex by
/// vertex; the other vertices keep their relative order.
fn permutation_onto(n: usize, from: &FourCycle, to: &FourCycle) -> Vec<usize> {
    let (f, t) = (from.vertices(), to.vertices());
    let mut perm = vec![usize::MAX; n];
    for i in 0..4 {
        perm[f[i]] = t[i];
    }
    let mut free = (0..n).filter(|v| !t.contains(v));
    for p in perm.iter_mut().filter(|p| **p == usize::MAX) {
        *p = free.next().unwrap();
    }
    perm
}

/// Filler systems for lifted mode: the first system found by
/// backtracking, then, for every cycle the fixed-order path drives to
/// `-d`, `d` relabeled copies of it containing that cycle. With all of them
/// added the fixed-order path stays nonnegative.
fn filler_sequence(
    n: usize,
    start: &CycleVector,
    moves: &[SignedMove<DoubleDiamond>],
) -> Result<Vec<CycleSystem>, CycleError> {
    let base = find_cycle_system(n, DEFAULT_NODE_BUDGET)?;
    let anchor = base.cycles()[0];
    let mut out = vec![base.clone()];
    let all = super::graph::all_cycles(n);
    for (col, &lo) in prefix_minima(start, moves).iter().enumerate() {
        if lo < 0 {
            let copy = base.relabel(&permutation_onto(n, &anchor, &all[col]));
            out.extend(std::iter::repeat_n(copy, lo.unsigned_abs() as usize));
        }
    }
    Ok(out)
}

fn plan_from(
    mode: Mode,
    lambda: usize,
    fillers: Vec<CycleSystem>,
    start: &CycleVector,
    goal: &CycleVector,
    moves: Vec<SignedMove<DoubleDiamond>>,
) -> Result<DiamondPlan, CycleError> {
    let (end, audit) = replay(start, &moves, mode != Mode::Virtual)?;
    if &end != goal {
        return Err(CycleError::Reconstruction);
    }
    Ok(DiamondPlan {
        mode,
        lambda,
        fillers,
        plan: MovePlan { moves, audit },
    })
}

/// Diamond moves taking `cs1` to `cs2`, or a rational certificate when
/// `vector(cs1) - vector(cs2)` has non-integral coefficients over the
/// basis.
///
/// Each basis diamond with coefficient `c` contributes `|c|` moves of sign
/// `-sign(c)`, in basis order. Strict mode schedules them greedily and may
/// fail. Lifted mode tries `lambda = 1, 2, ...`, each time with the greedy
/// order and then the fixed order, adding the first `lambda - 1` systems of
/// the filler sequence to both endpoints; the last `lambda` always
/// succeeds. Virtual mode applies the fixed order without constraints.
/// Every plan is replayed before it is returned.
pub fn transform(
    basis: &DiamondBasis,
    cs1: &CycleSystem,
    cs2: &CycleSystem,
    mode: Mode,
) -> Result<TransformOutcome, CycleError> {
    let n = basis.order();
    for cs in [cs1, cs2] {
        if cs.order() != n {
            return Err(CycleError::OrderMismatch {
                left: n,
                right: cs.order(),
            });
        }
    }
    let start = cs1.to_vector();
    let goal = cs2.to_vector();
    let dec = decompose_trade(basis, &start.sub(&goal))?;
    if !dec.integral {
        let coefficients = dec
            .coefficients
            .iter()
            .zip(basis.diamonds())
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, d)| (*d, c.clone()))
            .collect();
        return Ok(TransformOutcome::Certificate(Certificate { coefficients }));
    }
    let coeffs = dec.integer_coefficients().expect("integral coefficients fit in i64");
    let mut moves = Vec::new();
    for (d, &c) in basis.diamonds().iter().zip(&coeffs) {
        if let Some(s) = Sign::of(c) {
            moves.extend((0..c.unsigned_abs()).map(|_| SignedMove { sign: s.flip(), mv: *d }));
        }
    }
    let plan = match mode {
        Mode::Virtual => plan_from(mode, 1, Vec::new(), &start, &goal, moves)?,
        Mode::Strict => match schedule_greedy(&start, &moves) {
            Ok(order) => plan_from(mode, 1, Vec::new(), &start, &goal, order)?,
            Err(prefix) => {
                return Err(CycleError::ScheduleFailure {
                    applied: prefix.len(),
                    total: moves.len(),
                    prefix: format_moves(&prefix),
                })
            }
        },
        Mode::Lifted => lifted(n, &start, &goal, moves)?,
    };
    Ok(TransformOutcome::Plan(plan))
}

fn lifted(
    n: usize,
    start: &CycleVector,
    goal: &CycleVector,
    moves: Vec<SignedMove<DoubleDiamond>>,
) -> Result<DiamondPlan, CycleError> {
    let all_fillers = filler_sequence(n, start, &moves)?;
    let mut extra = CycleVector::zeros(n);
    for lambda in 1..=all_fillers.len() + 1 {
        if lambda > 1 {
            extra.add_vector(&all_fillers[lambda - 2].to_vector(), 1);
        }
        let mut s = start.clone();
        s.add_vector(&extra, 1);
        let mut g = goal.clone();
        g.add_vector(&extra, 1);
        let order = match schedule_greedy(&s, &moves) {
            Ok(order) => Some(order),
            Err(_) => replay(&s, &moves, true).ok().map(|_| moves.clone()),
        };
        if let Some(order) = order {
            let fillers = all_fillers[..lambda - 1].to_vec();
            return plan_from(Mode::Lifted, lambda, fillers, &s, &g, order);
        }
    }
    unreachable!("the full filler sequence covers every deficit")
}

/// Plan text: one `<sign> <diamond>` line per move, then `lambda=<λ>`
/// (`lambda=virtual` in virtual mode).
pub fn format_plan(plan: &DiamondPlan) -> String {
    let mut out = format_moves(&plan.plan.moves);
    match plan.mode {
        Mode::Virtual => out.push_str("lambda=virtual\n"),
        _ => writeln!(out, "lambda={}", plan.lambda).unwrap(),
    }
    out
}

/// Parses [`format_plan`] output into moves and `lambda` (`None` for
/// virtual plans).
pub fn parse_plan(text: &str) -> Result<(Vec<SignedMove<DoubleDiamond>>, Option<usize>), CycleError> {
    let mut moves = Vec::new();
    let mut lambda = None;
    let mut seen_lambda = false;
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |m: String| CycleError::Parse { line: idx + 1, message: m };
        if let Some(v) = line.strip_prefix("lambda=") {
            seen_lambda = true;
            lambda = match v {
                "virtual" => None,
                _ => Some(v.parse().map_err(|_| bad(format!("bad lambda `{v}`")))?),
            };
            continue;
        }
        let (sign, rest) = line.split_once(' ').ok_or_else(|| bad("expected `<sign> <diamond>`".into()))?;
        let sign: Sign = sign.parse().map_err(bad)?;
        let mv: DoubleDiamond = rest.parse().map_err(bad)?;
        moves.push(SignedMove { sign, mv });
    }
    if !seen_lambda {
        return Err(CycleError::Parse {
            line: text.lines().count(),
            message: "missing lambda line".into(),
        });
    }
    Ok((moves, lambda))
}

/// Sum of a system and filler systems, as the start or goal of a lifted
/// replay.
pub fn augmented(cs: &CycleSystem, fillers: &[CycleSystem]) -> CycleVector {
    let mut v = cs.to_vector();
    for f in fillers {
        v.add_vector(&f.to_vector(), 1);
    }
    debug_assert_eq!(v.entries().len(), cycle_count(cs.order()));
    v
}
