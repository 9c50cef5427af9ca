//! Exhaustive search over all `3^n` Roman labelings.

use num::bigint::BigInt;
use num::Zero;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::roman::RomanLabeling;
use crate::solvers::{degree_lower_bound_value, Method, SolveOptions, SolveResult};
use crate::weight::{Rational, ScaledWeights};

enum Mode {
    /// One witness: the lexicographically smallest optimal labeling.
    Single,
    /// Every optimal labeling, in lexicographic order.
    Collect,
    /// One witness minimizing the number of 1-labels, ties lexicographic.
    MinOnes,
}

struct Search<'a> {
    g: &'a WeightedGraph,
    masks: Vec<u64>,
    /// Vertices whose coverage is decided once position `i` is labeled:
    /// those `j` with `max(N(j) ∪ {j}) == i`.
    finalize_at: Vec<Vec<usize>>,
    sw: ScaledWeights,
    mode: Mode,
    /// Stop as soon as the incumbent reaches this proven lower bound.
    floor: Option<BigInt>,

    labels: Vec<u8>,
    twos: u64,
    committed: BigInt,
    ones: usize,

    best: Option<BigInt>,
    best_labels: Vec<u8>,
    best_ones: usize,
    optima: Vec<RomanLabeling>,
    done: bool,
}

impl Search<'_> {
    fn leaf(&mut self) {
        let improved = match &self.best {
            None => true,
            Some(b) => match self.committed.cmp(b) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Greater => return,
                std::cmp::Ordering::Equal => match self.mode {
                    // Pruning already cut ties in the other modes.
                    Mode::Collect => {
                        self.optima
                            .push(RomanLabeling::new(self.labels.clone()).unwrap());
                        return;
                    }
                    _ => self.ones < self.best_ones,
                },
            },
        };
        if improved {
            self.best = Some(self.committed.clone());
            self.best_labels = self.labels.clone();
            self.best_ones = self.ones;
            if matches!(self.mode, Mode::Collect) {
                self.optima.clear();
                self.optima
                    .push(RomanLabeling::new(self.labels.clone()).unwrap());
            }
            if let Some(floor) = &self.floor {
                if matches!(self.mode, Mode::Single) && self.best.as_ref() == Some(floor) {
                    self.done = true;
                }
            }
        }
    }

    fn dfs(&mut self, i: usize) {
        if self.done {
            return;
        }
        if i == self.g.n() {
            self.leaf();
            return;
        }
        for label in 0u8..=2 {
            let added = &self.sw.scaled[i] * BigInt::from(label);
            let weight = &self.committed + &added;
            if let Some(best) = &self.best {
                // Weight grows with the label, so once a label is too heavy
                // the rest are too.
                match self.mode {
                    Mode::Single => {
                        if &weight >= best {
                            break;
                        }
                    }
                    Mode::Collect => {
                        if &weight > best {
                            break;
                        }
                    }
                    Mode::MinOnes => {
                        if &weight > best {
                            break;
                        }
                        // A tie in weight forces an all-zero completion, so
                        // the 1-count is already final.
                        if &weight == best && self.ones + usize::from(label == 1) >= self.best_ones
                        {
                            continue;
                        }
                    }
                }
            }
            self.labels[i] = label;
            if label == 1 {
                self.ones += 1;
            }
            if label == 2 {
                self.twos |= 1 << i;
            }
            let feasible = self.finalize_at[i]
                .iter()
                .all(|&j| self.labels[j] != 0 || self.masks[j] & self.twos != 0);
            if feasible {
                self.committed = weight;
                self.dfs(i + 1);
                self.committed -= &added;
            }
            if label == 1 {
                self.ones -= 1;
            }
            if label == 2 {
                self.twos &= !(1u64 << i);
            }
            if self.done {
                return;
            }
        }
    }
}

/// Exhaustive `γ_wR` search. Within the `3^n` guard this is the reference
/// solver; every other route is checked against it.
///
/// Labelings are explored in lexicographic order with labels `0 < 1 < 2`, so
/// the default witness is the lexicographically smallest optimum.
pub fn gamma_wr_brute(g: &WeightedGraph, opts: &SolveOptions) -> Result<SolveResult> {
    let n = g.n();
    if n > opts.labeling_guard {
        return Err(Error::SizeGuardExceeded {
            n,
            guard: opts.labeling_guard,
            space: "3^n labeling",
        });
    }
    let masks = g.neighbor_masks()?;
    let sw = ScaledWeights::new(g.weights());
    let mut finalize_at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for j in 0..n {
        let last = g.neighbors(j).last().copied().unwrap_or(0).max(j);
        finalize_at[last].push(j);
    }
    let mode = if opts.enumerate_all_optima {
        Mode::Collect
    } else if opts.tie_break_min_v1 {
        Mode::MinOnes
    } else {
        Mode::Single
    };
    // The degree bound lets the search stop early once an incumbent attains
    // it; usable only when the bound lies on the scaled weight grid.
    let floor = degree_lower_bound_value(g).and_then(|b| {
        let scaled = b * Rational::from_integer(sw.denom.clone());
        scaled.is_integer().then(|| scaled.to_integer())
    });

    let mut search = Search {
        g,
        masks,
        finalize_at,
        sw,
        mode,
        floor,
        labels: vec![0; n],
        twos: 0,
        committed: BigInt::zero(),
        ones: 0,
        best: None,
        best_labels: vec![0; n],
        best_ones: usize::MAX,
        optima: Vec::new(),
        done: false,
    };
    search.dfs(0);

    let best = search.best.expect("the all-ones labeling is always valid");
    let value = search.sw.to_ratio(&best);
    let mut witness = RomanLabeling::new(search.best_labels.clone()).unwrap();
    let mut all_optima = None;
    if opts.enumerate_all_optima {
        let optima = std::mem::take(&mut search.optima);
        if opts.tie_break_min_v1 {
            let min_ones = optima.iter().map(|f| f.ones_count()).min().unwrap();
            witness = optima
                .iter()
                .find(|f| f.ones_count() == min_ones)
                .unwrap()
                .clone();
        } else {
            witness = optima[0].clone();
        }
        all_optima = Some(optima);
    }
    Ok(SolveResult {
        value,
        witness,
        method: Method::Brute,
        all_optima,
    })
}
