//! Linear-time `γ_wR` for graphs of maximum degree two.
//!
//! Every component is a path or a cycle. Each is walked once and solved by a
//! three-state suffix DP over the interface to the previous vertex: `Free`
//! (previous vertex needs and provides nothing), `Two` (previous vertex is
//! labeled 2), `Pend` (previous vertex is a 0 that still needs this vertex
//! to be a 2). Cycles close the seam by trying the four boundary cases for
//! the first vertex: labeled 1, labeled 2, or labeled 0 covered by either
//! neighbor.

use num::bigint::BigInt;
use num::traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::roman::RomanLabeling;
use crate::solvers::{Method, SolveResult};
use crate::weight::ScaledWeights;

const FREE: usize = 0;
const TWO: usize = 1;
const PEND: usize = 2;

fn trans(state: usize, label: u8) -> Option<usize> {
    if state == PEND && label != 2 {
        return None;
    }
    Some(match label {
        1 => FREE,
        2 => TWO,
        _ => {
            if state == TWO {
                FREE
            } else {
                PEND
            }
        }
    })
}

/// Cost arithmetic for the DP: machine integers when the scaled weights fit,
/// big integers otherwise.
trait Cost: Clone + Ord {
    fn zero() -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn from_scaled(v: &BigInt) -> Self;
    fn into_bigint(self) -> BigInt;
}

impl Cost for i128 {
    fn zero() -> Self {
        0
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn from_scaled(v: &BigInt) -> Self {
        v.to_i128().expect("checked before dispatch")
    }
    fn into_bigint(self) -> BigInt {
        BigInt::from(self)
    }
}

impl Cost for BigInt {
    fn zero() -> Self {
        <BigInt as num::Zero>::zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn from_scaled(v: &BigInt) -> Self {
        v.clone()
    }
    fn into_bigint(self) -> BigInt {
        self
    }
}

type Table<T> = Vec<[Option<T>; 3]>;

/// `table[i][s]` = cheapest labeling of positions `i..` entered in interface
/// state `s`, ending in a state allowed by `allowed_end`.
fn suffix_table<T: Cost>(costs: &[[T; 3]], allowed_end: [bool; 3]) -> Table<T> {
    let len = costs.len();
    let mut table: Table<T> = vec![[None, None, None]; len + 1];
    for s in 0..3 {
        if allowed_end[s] {
            table[len][s] = Some(T::zero());
        }
    }
    for i in (0..len).rev() {
        for s in 0..3 {
            let mut best: Option<T> = None;
            for label in 0..3u8 {
                let Some(ns) = trans(s, label) else { continue };
                let Some(suffix) = &table[i + 1][ns] else { continue };
                let candidate = costs[i][label as usize].plus(suffix);
                if best.as_ref().is_none_or(|b| &candidate < b) {
                    best = Some(candidate);
                }
            }
            table[i][s] = best;
        }
    }
    table
}

/// Walk the table forward picking the smallest label that stays optimal:
/// the lexicographically least optimal labeling for this start state.
fn reconstruct<T: Cost>(costs: &[[T; 3]], table: &Table<T>, start: usize) -> Vec<u8> {
    let mut state = start;
    let mut out = Vec::with_capacity(costs.len());
    for i in 0..costs.len() {
        let target = table[i][state].as_ref().expect("reconstructing a feasible value");
        let label = (0..3u8)
            .find(|&l| {
                trans(state, l).is_some_and(|ns| {
                    table[i + 1][ns]
                        .as_ref()
                        .is_some_and(|suf| &costs[i][l as usize].plus(suf) == target)
                })
            })
            .expect("some label attains the table value");
        out.push(label);
        state = trans(state, label).unwrap();
    }
    out
}

fn solve_path<T: Cost>(costs: &[[T; 3]]) -> (T, Vec<u8>) {
    let table = suffix_table(costs, [true, true, false]);
    let value = table[0][FREE].clone().expect("paths always have labelings");
    let labels = reconstruct(costs, &table, FREE);
    (value, labels)
}

fn solve_cycle<T: Cost>(first: &[T; 3], rest: &[[T; 3]]) -> (T, Vec<u8>) {
    // Boundary cases for the first vertex; the DP runs over the rest of the
    // walk. End states are constrained relative to the first vertex: only a
    // first vertex labeled 2 resolves a trailing pending 0, and a first
    // vertex labeled 0 must be covered by one of its two walk neighbors.
    let not_pending = suffix_table(rest, [true, true, false]);
    let must_end_two = suffix_table(rest, [false, true, false]);
    let any_end = suffix_table(rest, [true, true, true]);
    let cases: [(u8, usize, &Table<T>); 4] = [
        (0, PEND, &not_pending),   // covered by the next vertex
        (0, FREE, &must_end_two),  // covered by the last vertex
        (1, FREE, &not_pending),
        (2, TWO, &any_end),
    ];
    let mut best: Option<(T, Vec<u8>)> = None;
    for (label0, start, table) in cases {
        let Some(rest_value) = table[0][start].as_ref() else { continue };
        let value = first[label0 as usize].plus(rest_value);
        let worth_reconstructing = match &best {
            None => true,
            Some((bv, _)) => &value <= bv,
        };
        if !worth_reconstructing {
            continue;
        }
        let mut labels = vec![label0];
        labels.extend(reconstruct(rest, table, start));
        match &mut best {
            Some((bv, bl)) => {
                if value < *bv || (value == *bv && labels < *bl) {
                    *bv = value;
                    *bl = labels;
                }
            }
            None => best = Some((value, labels)),
        }
    }
    best.expect("the all-ones labeling closes every cycle")
}

fn run<T: Cost>(g: &WeightedGraph, sw: &ScaledWeights) -> (BigInt, Vec<u8>) {
    let mut labels = vec![0u8; g.n()];
    let mut total = T::zero();
    let costs_for = |v: usize| -> [T; 3] {
        let w = T::from_scaled(&sw.scaled[v]);
        [T::zero(), w.clone(), w.plus(&w)]
    };
    for comp in g.components() {
        let walk = component_walk(g, &comp);
        let costs: Vec<[T; 3]> = walk.iter().map(|&v| costs_for(v)).collect();
        let is_cycle = comp.len() >= 3 && comp.iter().all(|&v| g.degree(v) == 2);
        let (value, walk_labels) = if is_cycle {
            solve_cycle(&costs[0], &costs[1..])
        } else {
            solve_path(&costs)
        };
        total = total.plus(&value);
        for (i, &v) in walk.iter().enumerate() {
            labels[v] = walk_labels[i];
        }
    }
    (total.into_bigint(), labels)
}

/// Visit a path from its smaller endpoint, or a cycle from its smallest
/// vertex toward that vertex's smaller neighbor.
fn component_walk(g: &WeightedGraph, comp: &[usize]) -> Vec<usize> {
    let start = if comp.iter().all(|&v| g.degree(v) == 2) {
        comp[0]
    } else {
        *comp
            .iter()
            .find(|&&v| g.degree(v) <= 1)
            .expect("a path component has an endpoint")
    };
    let mut walk = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while walk.len() < comp.len() {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&u| u != prev)
            .expect("walk continues through the component");
        walk.push(next);
        prev = cur;
        cur = next;
    }
    walk
}

/// Exact `γ_wR` for graphs with maximum degree two, in linear time.
///
/// The witness is deterministic: within each component's walk order it is
/// the lexicographically smallest optimum.
pub fn gamma_wr_dp(g: &WeightedGraph) -> Result<SolveResult> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) > 2) {
        return Err(Error::DegreeTooHigh {
            v,
            degree: g.degree(v),
        });
    }
    let sw = ScaledWeights::new(g.weights());
    let fits_i128 = (sw.total() * BigInt::from(2)).to_i128().is_some();
    let (total, labels) = if fits_i128 {
        run::<i128>(g, &sw)
    } else {
        run::<BigInt>(g, &sw)
    };
    Ok(SolveResult {
        value: sw.to_ratio(&total),
        witness: RomanLabeling::new(labels).unwrap(),
        method: Method::DegreeTwoDp,
        all_optima: None,
    })
}
