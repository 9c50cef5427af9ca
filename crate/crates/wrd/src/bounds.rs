//! General bounds on `γ_wR` and the structures attaining them.

use num::One;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::solvers::{gamma_w_brute, gamma_wr_auto, SolveOptions};
use crate::weight::{ratio_int, Rational};

/// The degree lower bound `γ_wR >= 2·w(G)/(Δ_w + 1)`, defined whenever the
/// graph has an edge (which forces `Δ_w >= 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeBound {
    /// The raw rational bound.
    pub raw: Rational,
    /// `⌈raw⌉`, valid as a bound because `γ_wR` is an integer whenever all
    /// weights are integers; `None` otherwise.
    pub ceiled: Option<Rational>,
}

pub fn degree_lower_bound(g: &WeightedGraph) -> Result<DegreeBound> {
    if !g.has_any_edge() {
        return Err(Error::InvalidParams(
            "the degree lower bound needs at least one edge".into(),
        ));
    }
    let raw = ratio_int(2) * g.total_weight() / (g.max_weighted_degree()? + Rational::one());
    let ceiled = g.all_weights_integral().then(|| raw.ceil());
    Ok(DegreeBound { raw, ceiled })
}

/// The universal upper bound value: `γ_wR <= w(G)` for every graph, realized
/// by the all-ones labeling.
pub fn weight_upper_bound(g: &WeightedGraph) -> Rational {
    g.total_weight()
}

/// True when every component is a single vertex or a single edge whose
/// endpoints have equal weight — exactly the graphs with `γ_wR = w(G)`.
pub fn is_weight_extremal(g: &WeightedGraph) -> bool {
    g.components().iter().all(|comp| match comp.as_slice() {
        [_] => true,
        [u, v] => g.has_edge(*u, *v) && g.weight(*u) == g.weight(*v),
        _ => false,
    })
}

/// The sandwich `γ_w <= γ_wR <= 2·γ_w` with the equality case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SandwichReport {
    pub gamma_w: Rational,
    pub gamma_wr: Rational,
    pub lower_ok: bool,
    pub upper_ok: bool,
    /// `γ_wR = γ_w` happens exactly on edgeless graphs.
    pub equality_iff_edgeless_ok: bool,
}

pub fn sandwich(g: &WeightedGraph, opts: &SolveOptions) -> Result<SandwichReport> {
    let gamma_w = gamma_w_brute(g, opts)?.value;
    let gamma_wr = gamma_wr_auto(g, opts)?.value;
    Ok(SandwichReport {
        lower_ok: gamma_w <= gamma_wr,
        upper_ok: gamma_wr <= ratio_int(2) * &gamma_w,
        equality_iff_edgeless_ok: (gamma_w == gamma_wr) == !g.has_any_edge(),
        gamma_w,
        gamma_wr,
    })
}

/// `4·min_v w(v) <= γ_wR(G) + γ_wR(Ḡ) < 2·w(G)`, for graphs where both `G`
/// and its complement have an edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NordhausGaddum {
    pub gamma_wr: Rational,
    pub gamma_wr_complement: Rational,
    pub lower: Rational,
    pub sum: Rational,
    pub upper: Rational,
    pub lower_ok: bool,
    /// The upper comparison is strict.
    pub upper_ok: bool,
}

/// Returns `None` when the pair of bounds does not apply (either the graph
/// or its complement is edgeless).
pub fn nordhaus_gaddum(g: &WeightedGraph, opts: &SolveOptions) -> Result<Option<NordhausGaddum>> {
    let co = g.complement();
    if !g.has_any_edge() || !co.has_any_edge() {
        return Ok(None);
    }
    let gamma_wr = gamma_wr_auto(g, opts)?.value;
    let gamma_wr_complement = gamma_wr_auto(&co, opts)?.value;
    let min_weight = g
        .weights()
        .iter()
        .map(|w| w.ratio().clone())
        .min()
        .expect("graph with an edge is nonempty");
    let lower = ratio_int(4) * min_weight;
    let sum = &gamma_wr + &gamma_wr_complement;
    let upper = ratio_int(2) * g.total_weight();
    Ok(Some(NordhausGaddum {
        lower_ok: lower <= sum,
        upper_ok: sum < upper,
        gamma_wr,
        gamma_wr_complement,
        lower,
        sum,
        upper,
    }))
}

/// Everything the `bounds` command reports for one graph.
///
/// Exact values that would blow a size guard are left `None` along with the
/// flags that need them; flags are `Some(true)` on every graph small enough
/// to check, or the corresponding theorem would be false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub n: usize,
    pub total_weight: Rational,
    pub gamma_w: Option<Rational>,
    pub gamma_wr: Option<Rational>,
    pub degree_bound: Option<DegreeBound>,
    pub weight_upper: Rational,
    pub weight_extremal: bool,
    pub sandwich_lower_ok: Option<bool>,
    pub sandwich_upper_ok: Option<bool>,
    pub equality_iff_edgeless_ok: Option<bool>,
    pub degree_ok: Option<bool>,
    pub weight_ok: Option<bool>,
    pub weight_tight_iff_extremal_ok: Option<bool>,
    pub nordhaus_gaddum: Option<NordhausGaddum>,
}

impl BoundsReport {
    /// False if any computed flag shows a violated bound.
    pub fn all_ok(&self) -> bool {
        let flags = [
            self.sandwich_lower_ok,
            self.sandwich_upper_ok,
            self.equality_iff_edgeless_ok,
            self.degree_ok,
            self.weight_ok,
            self.weight_tight_iff_extremal_ok,
            self.nordhaus_gaddum.as_ref().map(|ng| ng.lower_ok),
            self.nordhaus_gaddum.as_ref().map(|ng| ng.upper_ok),
        ];
        flags.into_iter().flatten().all(|ok| ok)
    }
}

pub fn bounds_report(g: &WeightedGraph, opts: &SolveOptions) -> Result<BoundsReport> {
    let gamma_wr = gamma_wr_auto(g, opts).ok().map(|r| r.value);
    let gamma_w = gamma_w_brute(g, opts).ok().map(|r| r.value);
    let degree_bound = g.has_any_edge().then(|| degree_lower_bound(g)).transpose()?;
    let weight_upper = weight_upper_bound(g);
    let weight_extremal = is_weight_extremal(g);

    let both = gamma_w.as_ref().zip(gamma_wr.as_ref());
    let sandwich_lower_ok = both.map(|(w, wr)| w <= wr);
    let sandwich_upper_ok = both.map(|(w, wr)| wr <= &(ratio_int(2) * w));
    let equality_iff_edgeless_ok = both.map(|(w, wr)| (w == wr) == !g.has_any_edge());
    let degree_ok = degree_bound.as_ref().zip(gamma_wr.as_ref()).map(|(b, wr)| {
        &b.raw <= wr && b.ceiled.as_ref().is_none_or(|c| c <= wr)
    });
    let weight_ok = gamma_wr.as_ref().map(|wr| wr <= &weight_upper);
    let weight_tight_iff_extremal_ok = gamma_wr
        .as_ref()
        .map(|wr| (wr == &weight_upper) == weight_extremal);
    let nordhaus_gaddum = if gamma_wr.is_some() {
        nordhaus_gaddum(g, opts)?
    } else {
        None
    };

    Ok(BoundsReport {
        n: g.n(),
        total_weight: g.total_weight(),
        gamma_w,
        gamma_wr,
        degree_bound,
        weight_upper,
        weight_extremal,
        sandwich_lower_ok,
        sandwich_upper_ok,
        equality_iff_edgeless_ok,
        degree_ok,
        weight_ok,
        weight_tight_iff_extremal_ok,
        nordhaus_gaddum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::{ratio, Weight};

    fn graph(weights: &[u64], edges: &[(usize, usize)]) -> WeightedGraph {
        let w = weights.iter().map(|&v| Weight::from_integer(v)).collect();
        WeightedGraph::new(w, edges).unwrap()
    }

    #[test]
    fn degree_bound_on_small_graphs() {
        // Unit triangle: Δ_w = 2, bound = 2·3/3 = 2, tight (γ_wR = 2).
        let k3 = graph(&[1, 1, 1], &[(0, 1), (0, 2), (1, 2)]);
        let b = degree_lower_bound(&k3).unwrap();
        assert_eq!(b.raw, ratio_int(2));
        assert_eq!(b.ceiled, Some(ratio_int(2)));
        // Path 1-5-1: Δ_w = w(N(v1))/w(v1) = 2/5... the max is at an endpoint:
        // d_w = 5. Bound = 2·7/6 = 7/3, ceiling 3 = γ_wR.
        let p3 = graph(&[1, 5, 1], &[(0, 1), (1, 2)]);
        let b = degree_lower_bound(&p3).unwrap();
        assert_eq!(b.raw, ratio(7, 3));
        assert_eq!(b.ceiled, Some(ratio_int(3)));
        // Rational weights: no ceiling.
        let w = vec!["1/2".parse().unwrap(), "1/2".parse::<Weight>().unwrap()];
        let e = WeightedGraph::new(w, &[(0, 1)]).unwrap();
        assert_eq!(degree_lower_bound(&e).unwrap().ceiled, None);
        // Edgeless: not defined.
        assert!(degree_lower_bound(&graph(&[1, 1], &[])).is_err());
    }

    #[test]
    fn extremal_structure_detection() {
        assert!(is_weight_extremal(&graph(&[7], &[])));
        assert!(is_weight_extremal(&graph(&[3, 3, 9, 2, 2], &[(0, 1), (3, 4)])));
        // Unequal edge weights break it.
        assert!(!is_weight_extremal(&graph(&[3, 4], &[(0, 1)])));
        // A path of three does too.
        assert!(!is_weight_extremal(&graph(&[1, 1, 1], &[(0, 1), (1, 2)])));
    }

    #[test]
    fn sandwich_on_paths_and_edgeless() {
        let opts = SolveOptions::default();
        let p3 = graph(&[1, 5, 1], &[(0, 1), (1, 2)]);
        let s = sandwich(&p3, &opts).unwrap();
        assert_eq!(s.gamma_w, ratio_int(2));
        assert_eq!(s.gamma_wr, ratio_int(3));
        assert!(s.lower_ok && s.upper_ok && s.equality_iff_edgeless_ok);
        let empty = graph(&[4, 2], &[]);
        let s = sandwich(&empty, &opts).unwrap();
        assert_eq!(s.gamma_w, s.gamma_wr);
        assert!(s.equality_iff_edgeless_ok);
    }

    #[test]
    fn nordhaus_gaddum_on_c4_and_inapplicable_cases() {
        let opts = SolveOptions::default();
        // Unit C4: γ_wR = 3, complement 2K2 has γ_wR = 4; bounds 4 <= 7 < 8.
        let c4 = graph(&[1, 1, 1, 1], &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let ng = nordhaus_gaddum(&c4, &opts).unwrap().unwrap();
        assert_eq!(ng.lower, ratio_int(4));
        assert_eq!(ng.sum, ratio_int(7));
        assert_eq!(ng.upper, ratio_int(8));
        assert!(ng.lower_ok && ng.upper_ok);
        // K3's complement is edgeless: the bound pair does not apply.
        let k3 = graph(&[1, 1, 1], &[(0, 1), (0, 2), (1, 2)]);
        assert!(nordhaus_gaddum(&k3, &opts).unwrap().is_none());
        assert!(nordhaus_gaddum(&graph(&[1, 1], &[]), &opts).unwrap().is_none());
    }

    #[test]
    fn report_flags_are_true_when_present() {
        let opts = SolveOptions::default();
        for g in [
            graph(&[1, 5, 1], &[(0, 1), (1, 2)]),
            graph(&[2, 2], &[(0, 1)]),
            graph(&[3, 1, 4, 1], &[(0, 1), (1, 2), (2, 3), (0, 3)]),
            graph(&[6], &[]),
        ] {
            let r = bounds_report(&g, &opts).unwrap();
            assert!(r.all_ok(), "flags failed on {g:?}");
            assert!(r.gamma_wr.is_some());
        }
    }

    #[test]
    fn report_degrades_past_the_guards() {
        // 25 vertices: too big for 2^n and 3^n guards, but branch and bound
        // still supplies γ_wR.
        let edges: Vec<_> = (0..24).map(|i| (i, i + 1)).collect();
        let g = graph(&[1; 25], &edges);
        let r = bounds_report(&g, &SolveOptions::default()).unwrap();
        assert!(r.gamma_w.is_none());
        assert!(r.gamma_wr.is_some());
        assert_eq!(r.sandwich_lower_ok, None);
        assert_eq!(r.degree_ok, Some(true));
        assert!(r.all_ok());
    }
}
