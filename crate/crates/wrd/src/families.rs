//! Closed forms for `γ_wR` on complete graphs, complete bipartite graphs,
//! and weighted cycles.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::roman::RomanLabeling;
use crate::weight::{ratio_int, Rational, Weight};

/// A closed-form value with a witnessing labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyResult {
    pub value: Rational,
    pub witness: RomanLabeling,
}

fn argmin(weights: &[Weight]) -> usize {
    let mut best = 0;
    for (i, w) in weights.iter().enumerate().skip(1) {
        if w < &weights[best] {
            best = i;
        }
    }
    best
}

/// Complete graph on the given weighted vertices: label a cheapest vertex 2
/// and everything else 0, so `γ_wR = 2·min w`. Needs `n >= 2`.
pub fn complete_value(weights: &[Weight]) -> Result<FamilyResult> {
    if weights.len() < 2 {
        return Err(Error::InvalidParams(
            "the complete-graph formula needs at least 2 vertices".into(),
        ));
    }
    let cheapest = argmin(weights);
    let mut labels = vec![0u8; weights.len()];
    labels[cheapest] = 2;
    Ok(FamilyResult {
        value: weights[cheapest].ratio() * ratio_int(2),
        witness: RomanLabeling::new(labels).unwrap(),
    })
}

/// Complete bipartite graph with sides `x` and `y` (vertices are ordered
/// side X then side Y):
///
/// `γ_wR = min{ w(x₁) + w(X), w(y₁) + w(Y), 2(w(x₁) + w(y₁)) }`
///
/// where `x₁`, `y₁` are cheapest vertices of their sides. The three terms
/// come from labeling `x₁ = 2` with the rest of X at 1 and Y at 0, the
/// mirror image, or both `x₁ = y₁ = 2` with everything else 0. For a star
/// (`|X| = 1`) the first term collapses to `2·w(x₁)`.
pub fn complete_bipartite_value(x: &[Weight], y: &[Weight]) -> Result<FamilyResult> {
    if x.is_empty() || y.is_empty() {
        return Err(Error::InvalidParams(
            "the complete-bipartite formula needs both sides nonempty".into(),
        ));
    }
    let side_total = |side: &[Weight]| -> Rational { side.iter().map(|w| w.ratio()).sum() };
    let (x1, y1) = (argmin(x), argmin(y));
    let t_x = x[x1].ratio() + side_total(x);
    let t_y = y[y1].ratio() + side_total(y);
    let t_both = (x[x1].ratio() + y[y1].ratio()) * ratio_int(2);

    let (s, t) = (x.len(), y.len());
    let mut labels = vec![0u8; s + t];
    let value = if t_x <= t_y && t_x <= t_both {
        for l in labels.iter_mut().take(s) {
            *l = 1;
        }
        labels[x1] = 2;
        t_x
    } else if t_y <= t_both {
        for l in labels.iter_mut().skip(s) {
            *l = 1;
        }
        labels[s + y1] = 2;
        t_y
    } else {
        labels[x1] = 2;
        labels[s + y1] = 2;
        t_both
    };
    Ok(FamilyResult {
        value,
        witness: RomanLabeling::new(labels).unwrap(),
    })
}

/// One periodic cycle labeling: 2-labels every third vertex starting near
/// `m`, adjusted for `n mod 3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleConstruction {
    /// Starting vertex (0-based) this construction is anchored at.
    pub start: usize,
    pub labeling: RomanLabeling,
    pub weight: Rational,
}

/// The `n` periodic constructions `f_0, ..., f_{n-1}` for a cycle with the
/// given weights (vertex `i` adjacent to `i±1 mod n`). Each is a valid
/// labeling; their total weight is exactly `(n − ⌊n/3⌋)·w(C_n)`, so the
/// cheapest is at most `(1 − ⌊n/3⌋/n)·w(C_n)`.
pub fn cycle_constructions(weights: &[Weight]) -> Result<Vec<CycleConstruction>> {
    let n = weights.len();
    if n < 3 {
        return Err(Error::InvalidParams("a cycle needs at least 3 vertices".into()));
    }
    let k = n / 3;
    let mut out = Vec::with_capacity(n);
    for m in 0..n {
        let mut labels = vec![0u8; n];
        match n % 3 {
            0 => {
                for i in 0..k {
                    labels[(m + 3 * i) % n] = 2;
                }
            }
            1 => {
                labels[m] = 1;
                for i in 0..k {
                    labels[(m + 2 + 3 * i) % n] = 2;
                }
            }
            _ => {
                for i in 0..=k {
                    labels[(m + 3 * i) % n] = 2;
                }
            }
        }
        let weight = labels
            .iter()
            .zip(weights)
            .map(|(&l, w)| w.ratio() * ratio_int(l as i64))
            .fold(Rational::zero(), |a, b| a + b);
        out.push(CycleConstruction {
            start: m,
            labeling: RomanLabeling::new(labels).unwrap(),
            weight,
        });
    }
    Ok(out)
}

/// The averaged cycle upper bound and the construction attaining the best
/// constructive value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleBound {
    /// `(1 − ⌊n/3⌋/n)·w(C_n)`.
    pub bound: Rational,
    /// Cheapest of the `n` periodic constructions (ties: smallest start).
    pub best: CycleConstruction,
}

pub fn cycle_upper_bound(weights: &[Weight]) -> Result<CycleBound> {
    let n = weights.len();
    let constructions = cycle_constructions(weights)?;
    let k = n / 3;
    let total: Rational = weights.iter().map(|w| w.ratio()).sum();
    let bound = (Rational::one() - ratio_int(k as i64) / ratio_int(n as i64)) * total;
    let best = constructions
        .into_iter()
        .min_by(|a, b| a.weight.cmp(&b.weight).then(a.start.cmp(&b.start)))
        .unwrap();
    Ok(CycleBound { bound, best })
}

/// `γ_wR` of a cycle with constant weight `w` per vertex: `⌈2n/3⌉·w`.
pub fn equal_cycle_value(n: usize, w: &Weight) -> Result<Rational> {
    if n < 3 {
        return Err(Error::InvalidParams("a cycle needs at least 3 vertices".into()));
    }
    let ceil_two_thirds = (2 * n).div_ceil(3);
    Ok(ratio_int(ceil_two_thirds as i64) * w.ratio())
}

/// Build the complete graph over explicit weights.
pub fn complete_graph(weights: Vec<Weight>) -> Result<WeightedGraph> {
    let n = weights.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    WeightedGraph::new(weights, &edges)
}

/// Build the complete bipartite graph over explicit side weights; vertices
/// are side X then side Y.
pub fn complete_bipartite_graph(x: Vec<Weight>, y: Vec<Weight>) -> Result<WeightedGraph> {
    let (s, t) = (x.len(), y.len());
    let mut weights = x;
    weights.extend(y);
    let mut edges = Vec::new();
    for u in 0..s {
        for v in s..s + t {
            edges.push((u, v));
        }
    }
    WeightedGraph::new(weights, &edges)
}

/// Build the cycle `v_1 v_2 ... v_n v_1` over explicit weights.
pub fn cycle_graph(weights: Vec<Weight>) -> Result<WeightedGraph> {
    let n = weights.len();
    if n < 3 {
        return Err(Error::InvalidParams("a cycle needs at least 3 vertices".into()));
    }
    let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((0, n - 1));
    WeightedGraph::new(weights, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roman::{is_wrdf, labeling_weight};
    use crate::weight::ratio;

    fn w(vals: &[u64]) -> Vec<Weight> {
        vals.iter().map(|&v| Weight::from_integer(v)).collect()
    }

    #[test]
    fn complete_graph_formula() {
        let r = complete_value(&w(&[3, 1, 2])).unwrap();
        assert_eq!(r.value, ratio_int(2));
        assert_eq!(r.witness.to_string(), "0,2,0");
        assert!(complete_value(&w(&[5])).is_err());
        // Witness checks out on the actual graph.
        let g = complete_graph(w(&[3, 1, 2])).unwrap();
        assert!(is_wrdf(&g, &r.witness).unwrap());
        assert_eq!(labeling_weight(&g, &r.witness).unwrap(), r.value);
    }

    #[test]
    fn bipartite_formula_picks_the_cheapest_shape() {
        // Heavy Y side: dominate from X. K_{2,3} with X = (1, 2), Y = (9, 9, 9).
        let r = complete_bipartite_value(&w(&[1, 2]), &w(&[9, 9, 9])).unwrap();
        assert_eq!(r.value, ratio_int(4)); // w(x1) + w(X) = 1 + 3
        assert_eq!(r.witness.to_string(), "2,1,0,0,0");
        // Two cheap hubs beat either side.
        let r = complete_bipartite_value(&w(&[1, 9, 9]), &w(&[1, 9, 9])).unwrap();
        assert_eq!(r.value, ratio_int(4)); // 2(w(x1) + w(y1))
        assert_eq!(r.witness.to_string(), "2,0,0,2,0,0");
        // Star K_{1,4}: first term is 2·w(center).
        let r = complete_bipartite_value(&w(&[1]), &w(&[2, 2, 2, 2])).unwrap();
        assert_eq!(r.value, ratio_int(2));
        assert_eq!(r.witness.to_string(), "2,0,0,0,0");
    }

    #[test]
    fn bipartite_witnesses_are_valid() {
        let xs = w(&[2, 7]);
        let ys = w(&[3, 1, 5]);
        let r = complete_bipartite_value(&xs, &ys).unwrap();
        let g = complete_bipartite_graph(xs, ys).unwrap();
        assert!(is_wrdf(&g, &r.witness).unwrap());
        assert_eq!(labeling_weight(&g, &r.witness).unwrap(), r.value);
    }

    #[test]
    fn cycle_constructions_by_residue() {
        // n = 4 (residue 1), unit weights: anchored at 0 this is 1,0,2,0.
        let cs = cycle_constructions(&w(&[1, 1, 1, 1])).unwrap();
        assert_eq!(cs[0].labeling.to_string(), "1,0,2,0");
        assert_eq!(cs[0].weight, ratio_int(3));
        // n = 5 (residue 2): two 2s.
        let cs = cycle_constructions(&w(&[1, 1, 1, 1, 1])).unwrap();
        assert_eq!(cs[0].labeling.to_string(), "2,0,0,2,0");
        assert_eq!(cs[0].weight, ratio_int(4));
        // n = 6 (residue 0): every third vertex.
        let cs = cycle_constructions(&w(&[1, 2, 3, 3, 2, 1])).unwrap();
        assert_eq!(cs[0].labeling.to_string(), "2,0,0,2,0,0");
        assert!(cs.iter().all(|c| c.weight == ratio_int(8)));
    }

    #[test]
    fn constructions_are_valid_and_sum_correctly() {
        for weights in [w(&[1, 2, 3]), w(&[4, 1, 1, 3]), w(&[2, 5, 1, 1, 2]), w(&[1, 2, 3, 3, 2, 1])] {
            let n = weights.len();
            let g = cycle_graph(weights.clone()).unwrap();
            let cs = cycle_constructions(&weights).unwrap();
            assert_eq!(cs.len(), n);
            let mut sum = Rational::zero();
            for c in &cs {
                assert!(is_wrdf(&g, &c.labeling).unwrap(), "f_{} on n={n}", c.start);
                assert_eq!(labeling_weight(&g, &c.labeling).unwrap(), c.weight);
                sum += &c.weight;
            }
            let k = n / 3;
            assert_eq!(sum, ratio_int((n - k) as i64) * g.total_weight());
        }
    }

    #[test]
    fn cycle_bound_value() {
        // C6 with weights 1,2,3,3,2,1: (1 − 2/6)·12 = 8.
        let b = cycle_upper_bound(&w(&[1, 2, 3, 3, 2, 1])).unwrap();
        assert_eq!(b.bound, ratio_int(8));
        assert_eq!(b.best.weight, ratio_int(8));
        assert_eq!(b.best.start, 0);
        // C5 unit: (1 − 1/5)·5 = 4.
        let b = cycle_upper_bound(&w(&[1, 1, 1, 1, 1])).unwrap();
        assert_eq!(b.bound, ratio_int(4));
    }

    #[test]
    fn equal_cycles() {
        let half = "1/2".parse::<Weight>().unwrap();
        assert_eq!(equal_cycle_value(3, &Weight::from_integer(1)).unwrap(), ratio_int(2));
        assert_eq!(equal_cycle_value(4, &Weight::from_integer(1)).unwrap(), ratio_int(3));
        assert_eq!(equal_cycle_value(7, &half).unwrap(), ratio(5, 2));
        assert!(equal_cycle_value(2, &half).is_err());
    }
}
