#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use trade_kernel::cycles::{
    apply_diamond_move, double_diamond_pairs, CycleSystem, CycleVector, DoubleDiamond, FourCycle,
};
use trade_kernel::plan::Sign;

pub fn c(a: usize, b: usize, cc: usize, d: usize) -> FourCycle {
    FourCycle::new(a, b, cc, d).unwrap()
}

fn edge_set(cycle: &FourCycle) -> BTreeSet<(usize, usize)> {
    cycle.edges().into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect()
}

/// Whether the edge union of two cycles is `K_{2,4}`, checked directly on
/// the eight edges.
pub fn union_is_k24(c1: &FourCycle, c2: &FourCycle) -> bool {
    let (e1, e2) = (edge_set(c1), edge_set(c2));
    if !e1.is_disjoint(&e2) {
        return false;
    }
    let union: BTreeSet<_> = e1.union(&e2).copied().collect();
    let verts: BTreeSet<usize> = union.iter().flat_map(|&(u, v)| [u, v]).collect();
    if verts.len() != 6 {
        return false;
    }
    let degree = |x: usize| union.iter().filter(|&&(u, v)| u == x || v == x).count();
    let poles: Vec<usize> = verts.iter().copied().filter(|&x| degree(x) == 4).collect();
    if poles.len() != 2 || union.contains(&(poles[0], poles[1])) {
        return false;
    }
    verts
        .iter()
        .filter(|x| !poles.contains(x))
        .all(|&m| degree(m) == 2 && poles.iter().all(|&p| union.contains(&(p.min(m), p.max(m)))))
}

pub fn brute_count(cycles: &[FourCycle]) -> usize {
    let mut k = 0;
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            k += usize::from(union_is_k24(&cycles[i], &cycles[j]));
        }
    }
    k
}

/// The cyclic 4CS(9) developed from the base cycle (0,1,5,3).
pub fn cyclic_system9() -> CycleSystem {
    let cycles = (0..9).map(|i| c(i, (i + 1) % 9, (i + 5) % 9, (i + 3) % 9)).collect();
    CycleSystem::new(9, cycles).unwrap()
}

/// Hand-built cycle families with their double-diamond pair counts.
pub fn hand_configs() -> Vec<(&'static str, Vec<FourCycle>, usize)> {
    let cyclic = cyclic_system9().cycles().to_vec();
    vec![
        ("double-diamond", vec![c(0, 2, 1, 3), c(0, 4, 1, 5)], 1),
        ("shared edge", vec![c(0, 1, 2, 3), c(0, 1, 4, 5)], 0),
        ("one shared vertex", vec![c(0, 1, 2, 3), c(0, 4, 5, 6)], 0),
        ("vertex disjoint", vec![c(0, 1, 2, 3), c(4, 5, 6, 7)], 0),
        ("opposite in one, adjacent in other", vec![c(0, 2, 1, 3), c(0, 1, 4, 5)], 0),
        ("three shared vertices", vec![c(0, 1, 2, 3), c(0, 4, 1, 2)], 0),
        ("three cycles on one pole pair", vec![c(0, 2, 1, 3), c(0, 4, 1, 5), c(0, 6, 1, 7)], 3),
        ("triangle of diamonds", vec![c(0, 2, 1, 3), c(0, 4, 1, 5), c(2, 4, 3, 5)], 3),
        ("two disjoint diamonds", vec![c(0, 2, 1, 3), c(0, 4, 1, 5), c(6, 8, 7, 9), c(6, 10, 7, 11)], 2),
        ("cyclic 4CS(9)", cyclic, 0),
    ]
}

/// Signed moves from `diamonds` applicable to `state`.
pub fn applicable_moves(diamonds: &[DoubleDiamond], state: &CycleVector) -> Vec<(DoubleDiamond, Sign)> {
    let mut out = Vec::new();
    for d in diamonds {
        for s in [Sign::Plus, Sign::Minus] {
            if apply_diamond_move(state, d, s).is_ok() {
                out.push((*d, s));
            }
        }
    }
    out
}

/// A system reached from `cs` by up to `steps` random moves drawn from
/// `diamonds`, with the moves taken. Each step lands on another valid
/// system.
pub fn diamond_walk<R: Rng>(
    diamonds: &[DoubleDiamond],
    cs: &CycleSystem,
    steps: usize,
    rng: &mut R,
) -> (CycleSystem, Vec<(DoubleDiamond, Sign)>) {
    let mut state = cs.to_vector();
    let mut taken = Vec::new();
    for _ in 0..steps {
        let options = applicable_moves(diamonds, &state);
        let Some(&(d, s)) = options.choose(rng) else { break };
        state = apply_diamond_move(&state, &d, s).unwrap();
        taken.push((d, s));
    }
    (CycleSystem::from_vector(&state).unwrap(), taken)
}

/// Relabels `cs` so that its first double-diamond pair becomes the cycles
/// (0,2,1,3) and (0,4,1,5), the source of the first enumerated diamond.
pub fn anchored(cs: &CycleSystem) -> Option<CycleSystem> {
    let &(i, j) = double_diamond_pairs(cs.cycles()).first()?;
    let (c1, c2) = (cs.cycles()[i], cs.cycles()[j]);
    let shared: Vec<usize> = c1.vertices().into_iter().filter(|v| c2.vertices().contains(v)).collect();
    let others = |cy: FourCycle| -> Vec<usize> { cy.vertices().into_iter().filter(|v| !shared.contains(v)).collect() };
    let mut order = vec![shared[0], shared[1]];
    order.extend(others(c1));
    order.extend(others(c2));
    let n = cs.order();
    let rest: Vec<usize> = (0..n).filter(|v| !order.contains(v)).collect();
    order.extend(rest);
    let mut perm = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    Some(cs.relabel(&perm))
}

pub fn pairs_count(cycles: &[FourCycle]) -> usize {
    double_diamond_pairs(cycles).len()
}
