//! Acceptance checks, one PASS/FAIL line per criterion. Built without the
//! libtest harness so the lines appear in order on stdout.

mod common;

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trade_kernel::cycles::{
    self, build_inclusion_matrix, count_double_diamond_configs, diamond_basis, diamond_span_rank,
    enumerate_double_diamonds, find_cycle_system, find_cycle_system_shuffled, replay, search_diamond_free,
    CycleError, CycleSystem, Mode, RankMethod, SearchConfig, SearchOutcome, TransformOutcome, DEFAULT_NODE_BUDGET,
};
use trade_kernel::latin::{self, intercalate_basis, LatinInclusionMatrix, TripleVector};
use trade_kernel::linalg::{integer_kernel_basis, lattice_equal, rank_exact, ranks_mod_primes, SparseIntMatrix};

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn oracle_primes() -> Vec<u64> {
    let o: serde_json::Value = serde_json::from_str(include_str!("fixtures/oracle.json")).unwrap();
    o["primes"].as_array().unwrap().iter().map(|p| p.as_u64().unwrap()).collect()
}

fn latin_nullity() -> Outcome {
    let mut got = Vec::new();
    for n in 2..=5 {
        let m = LatinInclusionMatrix::build(n).map_err(|e| e.to_string())?;
        ensure!(m.matrix().n_rows() == 3 * n * n && m.matrix().n_cols() == n * n * n, "shape at n={n}");
        let nullity = n * n * n - rank_exact(m.matrix());
        ensure!(nullity == (n - 1).pow(3), "n={n}: nullity {nullity}");
        got.push(nullity);
    }
    Ok(format!("nullities {got:?}"))
}

fn intercalate_basis_check() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for n in 2..=5 {
        let basis = intercalate_basis(n).map_err(|e| e.to_string())?;
        let m = LatinInclusionMatrix::build(n).unwrap();
        ensure!(basis.len() == (n - 1).pow(3), "n={n}: {} vectors", basis.len());
        for v in &basis {
            m.check_kernel(v).map_err(|e| e.to_string())?;
        }
        let rows: Vec<_> = basis.iter().map(TripleVector::to_int_vector).collect();
        let stack = SparseIntMatrix::from_row_vectors(n * n * n, &rows).unwrap();
        ensure!(rank_exact(&stack) == basis.len(), "n={n}: intercalates dependent");
        for trial in 0..200 {
            let coeffs: Vec<i64> = (0..basis.len()).map(|_| rng.gen_range(-3..=3)).collect();
            let mut v = TripleVector::zeros(n);
            for (b, &c) in basis.iter().zip(&coeffs) {
                v = v.add_scaled(b, c);
            }
            let dec = latin::decompose(&v).map_err(|e| format!("n={n} trial {trial}: {e}"))?;
            ensure!(dec.reconstruct() == v, "n={n} trial {trial}: reconstruction differs");
            ensure!(dec.as_slice() == coeffs.as_slice(), "n={n} trial {trial}: coefficients differ");
        }
    }
    Ok("n=2..5 independent, 200 combinations per order reconstructed".into())
}

fn golden_example() -> Outcome {
    let t = latin::io::parse_trade(include_str!("fixtures/example4_trade.txt")).map_err(|e| e.to_string())?;
    let dec = latin::decompose(&latin::trade_vector(&t).unwrap()).map_err(|e| e.to_string())?;
    let got: Vec<_> = dec.nonzero().into_iter().map(|(b, c)| (b.i, b.j, b.k, c)).collect();
    let want = vec![(1, 1, 1, 1), (1, 1, 2, -1), (2, 2, 2, 1), (2, 2, 3, -1), (3, 3, 3, 1)];
    ensure!(got == want, "got {got:?}");
    Ok("+B111 -B112 +B222 -B223 +B333".into())
}

fn cycle_rank() -> Outcome {
    let m4 = build_inclusion_matrix(4).unwrap();
    ensure!(rank_exact(&m4) == 3, "n=4 rank {}", rank_exact(&m4));
    for n in 5..=7 {
        let m = build_inclusion_matrix(n).unwrap();
        let rank = rank_exact(&m);
        ensure!(rank == binom(n, 2), "n={n}: rank {rank}");
        ensure!(m.n_cols() - rank == 3 * binom(n, 4) - binom(n, 2), "n={n}: nullity");
    }
    let primes = oracle_primes();
    ensure!(primes.len() >= 3 && primes.iter().all(|&p| p > 1 << 30 && p < 1 << 31), "prime set");
    let m9 = build_inclusion_matrix(9).unwrap();
    let ranks = ranks_mod_primes(&m9, &primes).map_err(|e| e.to_string())?;
    ensure!(ranks.iter().all(|&r| r == 36 && m9.n_cols() - r == 342), "n=9 ranks {ranks:?}");
    Ok(format!("n=4 rank 3 of 6; n=5..7 exact; n=9 rank 36 mod {primes:?}"))
}

fn diamond_span() -> Outcome {
    for (n, want) in [(6, 30), (7, 84)] {
        let r = diamond_span_rank(n).map_err(|e| e.to_string())?;
        ensure!(r.method == RankMethod::Exact, "n={n} not exact");
        ensure!(r.rank == want && r.spans_kernel(), "n={n}: rank {} of {}", r.rank, r.kernel_dim);
    }
    let r = diamond_span_rank(9).map_err(|e| e.to_string())?;
    let RankMethod::Modular { primes, ranks, .. } = &r.method else {
        return Err("n=9 expected a modular rank".into());
    };
    ensure!(primes.len() >= 3 && ranks.iter().all(|&k| k == 342), "n=9 ranks {ranks:?}");
    ensure!(r.rank == 342 && r.spans_kernel(), "n=9 rank {}", r.rank);
    ensure!(
        matches!(diamond_basis(5), Err(CycleError::SpanDeficient { .. })),
        "n=5 did not report SpanDeficient"
    );
    Ok("30, 84 exact; 342 mod 3 primes; n=5 SpanDeficient".into())
}

fn verify_system(cs: &CycleSystem, n: usize) -> Result<(), String> {
    let m = build_inclusion_matrix(n).unwrap();
    let image = m.mul_vec(&cs.to_vector().to_int_vector()).unwrap();
    ensure!(image.iter().all(|x| *x == BigInt::one()), "n={n}: not an edge partition");
    ensure!(cs.len() == n * (n - 1) / 8, "n={n}: {} cycles", cs.len());
    Ok(())
}

fn existence() -> Outcome {
    let t = Instant::now();
    let cs9 = find_cycle_system(9, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?;
    verify_system(&cs9, 9)?;
    let t9 = t.elapsed();
    ensure!(t9 < Duration::from_secs(10), "n=9 took {t9:?}");
    let t = Instant::now();
    let cs17 = find_cycle_system(17, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?;
    verify_system(&cs17, 17)?;
    let t17 = t.elapsed();
    ensure!(t17 < Duration::from_secs(300), "n=17 took {t17:?}");
    for n in [8, 10, 12] {
        let t = Instant::now();
        ensure!(
            matches!(find_cycle_system(n, DEFAULT_NODE_BUDGET), Err(CycleError::NotAdmissible(k)) if k == n),
            "n={n} not rejected"
        );
        ensure!(t.elapsed() < Duration::from_millis(50), "n={n} rejection searched");
    }
    Ok(format!("4CS(9) in {t9:.1?}, 4CS(17) with {} cycles in {t17:.1?}; 8, 10, 12 rejected", cs17.len()))
}

/// Runs one pair through virtual mode, and through lifted mode when the
/// decomposition is integral. Returns whether it was integral and the
/// lifted lambda.
fn transform_pair(basis: &cycles::DiamondBasis, a: &CycleSystem, b: &CycleSystem) -> Result<Option<usize>, String> {
    let run = |mode| cycles::transform(basis, a, b, mode).map_err(|e| format!("{mode}: {e}"));
    match run(Mode::Virtual)? {
        TransformOutcome::Certificate(c) => {
            ensure!(
                c.coefficients.iter().any(|(_, x)| !x.is_integer()),
                "certificate with integral coefficients"
            );
            Ok(None)
        }
        TransformOutcome::Plan(p) => {
            let (end, _) = replay(&a.to_vector(), &p.plan.moves, false).map_err(|e| e.to_string())?;
            ensure!(end == b.to_vector(), "virtual replay missed the target");
            let TransformOutcome::Plan(l) = run(Mode::Lifted)? else {
                return Err("lifted mode disagreed on integrality".into());
            };
            let mut start = a.to_vector();
            let mut goal = b.to_vector();
            for f in &l.fillers {
                start.add_vector(&f.to_vector(), 1);
                goal.add_vector(&f.to_vector(), 1);
            }
            let (end, _) = replay(&start, &l.plan.moves, true).map_err(|e| e.to_string())?;
            ensure!(end == goal, "lifted replay missed the target");
            ensure!(l.lambda == l.fillers.len() + 1, "lambda not recorded");
            Ok(Some(l.lambda))
        }
    }
}

fn transform_check() -> Outcome {
    let basis = diamond_basis(9).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut certificates = 0;
    let mut lambdas = Vec::new();
    for i in 0..20 {
        let a = find_cycle_system_shuffled(9, DEFAULT_NODE_BUDGET, &mut rng).map_err(|e| e.to_string())?;
        let b = loop {
            let b = find_cycle_system_shuffled(9, DEFAULT_NODE_BUDGET, &mut rng).map_err(|e| e.to_string())?;
            if b != a {
                break b;
            }
        };
        match transform_pair(&basis, &a, &b).map_err(|e| format!("pair {i}: {e}"))? {
            None => certificates += 1,
            Some(l) => lambdas.push(l),
        }
    }
    // Random pairs are rarely integral, so more pairs are built by walking
    // double-diamond moves: basis moves from a relabeled system, which are
    // always integral, and arbitrary moves, which often are.
    let all = enumerate_double_diamonds(9).diamonds;
    let mut walked = Vec::new();
    let mut walk_certificates = 0;
    for i in 0..20 {
        let a = find_cycle_system_shuffled(9, DEFAULT_NODE_BUDGET, &mut rng).map_err(|e| e.to_string())?;
        let (a, pool) = if i % 4 == 0 {
            (common::anchored(&a).ok_or("no double-diamond to anchor")?, basis.diamonds())
        } else {
            (a, all.as_slice())
        };
        let (b, taken) = common::diamond_walk(pool, &a, 1 + i % 6, &mut rng);
        ensure!(!taken.is_empty(), "walk {i} took no moves");
        match transform_pair(&basis, &a, &b).map_err(|e| format!("walk {i}: {e}"))? {
            Some(l) => walked.push(l),
            None if i % 4 == 0 => return Err(format!("basis walk {i} produced a certificate")),
            None => walk_certificates += 1,
        }
    }
    Ok(format!(
        "random pairs: {certificates} certificates, {} plans {lambdas:?}; walked pairs: {walk_certificates} certificates, lambdas {walked:?}",
        lambdas.len()
    ))
}

fn diamond_free() -> Outcome {
    for (name, cycles, want) in common::hand_configs() {
        let got = common::pairs_count(&cycles);
        ensure!(got == want, "{name}: counted {got}, expected {want}");
    }
    ensure!(count_double_diamond_configs(&common::cyclic_system9()) == 0, "cyclic system");
    let cfg = SearchConfig::default();
    ensure!(cfg.restarts <= 500, "restart limit {}", cfg.restarts);
    match search_diamond_free(9, &cfg).map_err(|e| e.to_string())? {
        SearchOutcome::Found { system, restart, steps } => {
            verify_system(&system, 9)?;
            ensure!(count_double_diamond_configs(&system) == 0, "returned system has diamonds");
            ensure!(common::brute_count(system.cycles()) == 0, "edge check found diamonds");
            Ok(format!("10 hand configs; seed {} found count 0 at restart {restart}, step {steps}", cfg.seed))
        }
        SearchOutcome::NotFound(r) => Err(format!("best count {} after {} restarts", r.best_count, r.restarts)),
    }
}

fn integrality() -> Outcome {
    let fixture: serde_json::Value = serde_json::from_str(include_str!("fixtures/integrality_n6.json")).unwrap();
    let run = || -> Result<bool, String> {
        let kernel = integer_kernel_basis(&build_inclusion_matrix(6).unwrap()).map_err(|e| e.to_string())?;
        let diamonds: Vec<_> =
            enumerate_double_diamonds(6).diamonds.iter().map(|d| d.vector(6).to_int_vector()).collect();
        lattice_equal(&diamonds, &kernel).map_err(|e| e.to_string())
    };
    let first = run()?;
    ensure!(first == run()?, "outcome changed between runs");
    ensure!(fixture["lattice_equal"].as_bool() == Some(first), "fixture records a different outcome");
    Ok(format!("lattice_equal = {first}, matches fixture"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        (1, "latin nullity", Duration::from_secs(60), latin_nullity),
        (2, "intercalate basis", Duration::from_secs(120), intercalate_basis_check),
        (3, "example golden decomposition", Duration::from_secs(60), golden_example),
        (4, "cycle matrix rank", Duration::from_secs(300), cycle_rank),
        (5, "diamond spanning", Duration::from_secs(600), diamond_span),
        (6, "existence", Duration::from_secs(310), existence),
        (7, "transform", Duration::from_secs(600), transform_check),
        (8, "diamond-free search", Duration::from_secs(900), diamond_free),
        (9, "integrality experiment", Duration::from_secs(300), integrality),
    ];
    let mut failed = 0;
    for (id, name, limit, check) in criteria {
        let t = Instant::now();
        let outcome = check();
        let elapsed = t.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > limit => Err(format!("{msg}; took {elapsed:.1?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("PASS {id} {name} ({elapsed:.2?}): {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL {id} {name} ({elapsed:.2?}): {msg}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
