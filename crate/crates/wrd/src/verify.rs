//! Executable verification of the structural results on weighted Roman
//! domination.
//!
//! `gather_evidence` solves a graph every way the crate knows how;
//! `check_theorems` then tests each claim against that evidence. The split
//! matters: tests corrupt evidence on purpose to prove the checks can
//! actually fail, so a green run means the checks ran with teeth.

use std::fmt;
use std::str::FromStr;

use num::Zero;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::bounds::is_weight_extremal;
use crate::differential::{boundary, differential, differential_of_set, induced_labeling, DifferentialResult};
use crate::error::{Error, Result};
use crate::families::{cycle_constructions, cycle_upper_bound};
use crate::gen::{generate, uniform_below, GraphKind, WeightSampler};
use crate::graph::{VertexSet, WeightedGraph};
use crate::io::to_wrd_string;
use crate::roman::{is_dominating, is_wrdf, labeling_weight, RomanLabeling};
use crate::solvers::{
    gamma_w_brute, gamma_wr_auto, gamma_wr_brute, gamma_wr_dp, DominationResult, SolveOptions,
};
use crate::weight::{parse_rational, ratio_int, ratio_to_string, Rational};

/// Every claim the harness can test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// Solver outputs are internally consistent: witnesses are valid and
    /// match the reported values.
    WitnessConsistency,
    /// `γ_w <= γ_wR <= 2·γ_w`.
    SandwichBounds,
    /// `γ_wR = γ_w` exactly on edgeless graphs.
    EqualityIffEdgeless,
    /// `γ_wR >= 2·w(G)/(Δ_w + 1)`, rounded up for integer weights.
    DegreeLowerBound,
    /// The same bound specialized to normed graphs: `γ_wR >= 2n/(Δ_w + 1)`.
    NormedDegreeBound,
    /// In every optimum, adjacent 1-labeled vertices have equal weights.
    V1NeighborsEqualWeight,
    /// In every optimum, no edge joins a 1-label to a 2-label.
    NoV1V2Edges,
    /// In every optimum, V2 is a minimum-weight dominating set of the
    /// subgraph induced by V0 ∪ V2.
    V2DominatesMinimally,
    /// Some optimum minimizing |V1| has independent V1.
    MinV1Independent,
    /// `γ_wR <= w(G)`.
    WeightUpperBound,
    /// `γ_wR = w(G)` exactly when components are isolated vertices or
    /// equal-weight edges, with the forced local structure of optima.
    WeightEqualityStructure,
    /// `4·min w <= γ_wR(G) + γ_wR(Ḡ) < 2·w(G)` when both graphs have edges.
    NordhausGaddum,
    /// `γ_wR = w(G) − ∂(G)`, with the maximizer inducing an optimal labeling.
    DifferentialDuality,
    /// `γ_wR(C_n) <= (1 − ⌊n/3⌋/n)·w(C_n)`.
    CycleUpperBound,
    /// The n periodic cycle labelings are all valid with the stated weights.
    CycleConstructionsValid,
    /// The n construction weights sum to `(n − ⌊n/3⌋)·w(C_n)`.
    CycleConstructionSum,
    /// For `n` not divisible by 3, the cycle bound is attained exactly for
    /// constant weights.
    CycleEqualityIffConstant,
    /// The degree-2 DP agrees with exhaustive search on cycles.
    CycleDpMatchesBrute,
}

impl Theorem {
    /// Checks run against general graph evidence.
    pub const GRAPH_CHECKS: [Theorem; 13] = [
        Theorem::WitnessConsistency,
        Theorem::SandwichBounds,
        Theorem::EqualityIffEdgeless,
        Theorem::DegreeLowerBound,
        Theorem::NormedDegreeBound,
        Theorem::V1NeighborsEqualWeight,
        Theorem::NoV1V2Edges,
        Theorem::V2DominatesMinimally,
        Theorem::MinV1Independent,
        Theorem::WeightUpperBound,
        Theorem::WeightEqualityStructure,
        Theorem::NordhausGaddum,
        Theorem::DifferentialDuality,
    ];

    /// Checks run per weighted cycle.
    pub const CYCLE_CHECKS: [Theorem; 5] = [
        Theorem::CycleUpperBound,
        Theorem::CycleConstructionsValid,
        Theorem::CycleConstructionSum,
        Theorem::CycleEqualityIffConstant,
        Theorem::CycleDpMatchesBrute,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::WitnessConsistency => "witness-consistency",
            Theorem::SandwichBounds => "sandwich-bounds",
            Theorem::EqualityIffEdgeless => "equality-iff-edgeless",
            Theorem::DegreeLowerBound => "degree-lower-bound",
            Theorem::NormedDegreeBound => "normed-degree-bound",
            Theorem::V1NeighborsEqualWeight => "v1-neighbors-equal-weight",
            Theorem::NoV1V2Edges => "no-v1-v2-edges",
            Theorem::V2DominatesMinimally => "v2-dominates-minimally",
            Theorem::MinV1Independent => "min-v1-independent",
            Theorem::WeightUpperBound => "weight-upper-bound",
            Theorem::WeightEqualityStructure => "weight-equality-structure",
            Theorem::NordhausGaddum => "nordhaus-gaddum",
            Theorem::DifferentialDuality => "differential-duality",
            Theorem::CycleUpperBound => "cycle-upper-bound",
            Theorem::CycleConstructionsValid => "cycle-constructions-valid",
            Theorem::CycleConstructionSum => "cycle-construction-sum",
            Theorem::CycleEqualityIffConstant => "cycle-equality-iff-constant",
            Theorem::CycleDpMatchesBrute => "cycle-dp-matches-brute",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Everything the checks need about one graph, computed once.
#[derive(Debug, Clone)]
pub struct Evidence {
    pub graph: WeightedGraph,
    pub gamma_w: DominationResult,
    pub gamma_wr: Rational,
    /// Every optimal labeling, lexicographically ordered.
    pub optima: Vec<RomanLabeling>,
    /// An optimum minimizing the number of 1-labels.
    pub min_v1_witness: RomanLabeling,
    pub differential: DifferentialResult,
    /// `γ_wR` of the complement, when both graphs have an edge.
    pub complement_gamma_wr: Option<Rational>,
}

/// Solve `g` down every route the checks rely on.
pub fn gather_evidence(g: &WeightedGraph, opts: &SolveOptions) -> Result<Evidence> {
    let mut full = opts.clone();
    full.enumerate_all_optima = true;
    full.tie_break_min_v1 = true;
    let solved = gamma_wr_brute(g, &full)?;
    let gamma_w = gamma_w_brute(g, opts)?;
    let diff = differential(g, opts)?;
    let complement = g.complement();
    let complement_gamma_wr = if g.has_any_edge() && complement.has_any_edge() {
        Some(gamma_wr_auto(&complement, opts)?.value)
    } else {
        None
    };
    Ok(Evidence {
        graph: g.clone(),
        gamma_w,
        gamma_wr: solved.value,
        optima: solved.all_optima.expect("optima enumeration was requested"),
        min_v1_witness: solved.witness,
        differential: diff,
        complement_gamma_wr,
    })
}

/// Outcome of testing one theorem against one piece of evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremCheck {
    pub theorem: Theorem,
    /// False when the theorem's precondition excludes this graph; such a
    /// check passes vacuously.
    pub applicable: bool,
    pub passed: bool,
    /// What went wrong, for failures.
    pub detail: Option<String>,
}

impl TheoremCheck {
    fn pass(theorem: Theorem) -> Self {
        TheoremCheck { theorem, applicable: true, passed: true, detail: None }
    }

    fn vacuous(theorem: Theorem) -> Self {
        TheoremCheck { theorem, applicable: false, passed: true, detail: None }
    }

    fn fail(theorem: Theorem, detail: String) -> Self {
        TheoremCheck { theorem, applicable: true, passed: false, detail: Some(detail) }
    }
}

fn check_outcome(theorem: Theorem, failures: Vec<String>) -> TheoremCheck {
    if failures.is_empty() {
        TheoremCheck::pass(theorem)
    } else {
        TheoremCheck::fail(theorem, failures.join("; "))
    }
}

/// Run one theorem's check against the evidence.
pub fn check_theorem(theorem: Theorem, ev: &Evidence, opts: &SolveOptions) -> Result<TheoremCheck> {
    let g = &ev.graph;
    let total = g.total_weight();
    let mut bad: Vec<String> = Vec::new();
    match theorem {
        Theorem::WitnessConsistency => {
            if ev.optima.is_empty() {
                bad.push("no optima recorded".into());
            }
            if !ev.optima.windows(2).all(|w| w[0] < w[1]) {
                bad.push("optima are not strictly ordered".into());
            }
            for f in &ev.optima {
                if !is_wrdf(g, f)? {
                    bad.push(format!("optimum {f} is not a valid labeling"));
                } else if labeling_weight(g, f)? != ev.gamma_wr {
                    bad.push(format!("optimum {f} does not weigh the optimum value"));
                }
            }
            let min_ones = ev.optima.iter().map(|f| f.ones_count()).min();
            if !ev.optima.contains(&ev.min_v1_witness) {
                bad.push("tie-break witness is not among the optima".into());
            } else if Some(ev.min_v1_witness.ones_count()) != min_ones {
                bad.push("tie-break witness does not minimize |V1|".into());
            }
            if !is_dominating(g, &ev.gamma_w.witness)? {
                bad.push("domination witness does not dominate".into());
            } else if ev.gamma_w.witness.weight_in(g) != ev.gamma_w.value {
                bad.push("domination witness weight mismatch".into());
            }
            let d = &ev.differential;
            if boundary(g, &d.best_set)? != d.boundary {
                bad.push("recorded boundary is wrong".into());
            } else if differential_of_set(g, &d.best_set)? != d.value {
                bad.push("differential value does not match its set".into());
            }
        }
        Theorem::SandwichBounds => {
            if ev.gamma_w.value > ev.gamma_wr {
                bad.push(format!(
                    "γ_w = {} exceeds γ_wR = {}",
                    ratio_to_string(&ev.gamma_w.value),
                    ratio_to_string(&ev.gamma_wr)
                ));
            }
            if ev.gamma_wr > ratio_int(2) * &ev.gamma_w.value {
                bad.push(format!(
                    "γ_wR = {} exceeds 2·γ_w = {}",
                    ratio_to_string(&ev.gamma_wr),
                    ratio_to_string(&(ratio_int(2) * &ev.gamma_w.value))
                ));
            }
        }
        Theorem::EqualityIffEdgeless => {
            let equal = ev.gamma_wr == ev.gamma_w.value;
            if equal != !g.has_any_edge() {
                bad.push(format!(
                    "γ_wR == γ_w is {equal} but the graph {} edges",
                    if g.has_any_edge() { "has" } else { "lacks" }
                ));
            }
        }
        Theorem::DegreeLowerBound => {
            if !g.has_any_edge() {
                return Ok(TheoremCheck::vacuous(theorem));
            }
            let raw = ratio_int(2) * &total / (g.max_weighted_degree()? + ratio_int(1));
            if ev.gamma_wr < raw {
                bad.push(format!(
                    "γ_wR = {} is below 2w/(Δ_w+1) = {}",
                    ratio_to_string(&ev.gamma_wr),
                    ratio_to_string(&raw)
                ));
            }
            if g.all_weights_integral() {
                if !ev.gamma_wr.is_integer() {
                    bad.push("integer weights but fractional γ_wR".into());
                }
                if ev.gamma_wr < raw.ceil() {
                    bad.push(format!(
                        "γ_wR = {} is below the rounded bound {}",
                        ratio_to_string(&ev.gamma_wr),
                        ratio_to_string(&raw.ceil())
                    ));
                }
            }
        }
        Theorem::NormedDegreeBound => {
            if !g.is_normed() || !g.has_any_edge() {
                return Ok(TheoremCheck::vacuous(theorem));
            }
            let bound = ratio_int(2 * g.n() as i64) / (g.max_weighted_degree()? + ratio_int(1));
            if ev.gamma_wr < bound {
                bad.push(format!(
                    "normed graph has γ_wR = {} below 2n/(Δ_w+1) = {}",
                    ratio_to_string(&ev.gamma_wr),
                    ratio_to_string(&bound)
                ));
            }
        }
        Theorem::V1NeighborsEqualWeight => {
            for f in &ev.optima {
                for (u, v) in g.edges() {
                    if f.label(u) == 1 && f.label(v) == 1 && g.weight(u) != g.weight(v) {
                        bad.push(format!(
                            "optimum {f} labels adjacent vertices {} and {} with 1 despite weights {} and {}",
                            u + 1,
                            v + 1,
                            g.weight(u),
                            g.weight(v)
                        ));
                    }
                }
            }
        }
        Theorem::NoV1V2Edges => {
            for f in &ev.optima {
                for (u, v) in g.edges() {
                    let pair = (f.label(u).min(f.label(v)), f.label(u).max(f.label(v)));
                    if pair == (1, 2) {
                        bad.push(format!("optimum {f} joins a 1 at {} to a 2 at {}", u + 1, v + 1));
                    }
                }
            }
        }
        Theorem::V2DominatesMinimally => {
            for f in &ev.optima {
                let [v0, _, v2] = f.partition();
                let support = v0.union(&v2);
                let sub = g.induced_subgraph(&support)?;
                // Positions of V2 inside the induced vertex order.
                let v2_positions: Vec<usize> = support
                    .iter()
                    .enumerate()
                    .filter(|&(_, v)| v2.contains(v))
                    .map(|(i, _)| i)
                    .collect();
                let v2_in_sub = VertexSet::new(sub.n(), v2_positions)?;
                if !is_dominating(&sub, &v2_in_sub)? {
                    bad.push(format!("optimum {f}: V2 does not dominate G[V0 ∪ V2]"));
                    continue;
                }
                let best = gamma_w_brute(&sub, opts)?.value;
                let v2_weight = v2.weight_in(g);
                if v2_weight != best {
                    bad.push(format!(
                        "optimum {f}: w(V2) = {} but γ_w(G[V0 ∪ V2]) = {}",
                        ratio_to_string(&v2_weight),
                        ratio_to_string(&best)
                    ));
                }
            }
        }
        Theorem::MinV1Independent => {
            let ones = ev.min_v1_witness.level_set(1);
            for (u, v) in g.edges() {
                if ones.contains(u) && ones.contains(v) {
                    bad.push(format!(
                        "min-|V1| witness {} has adjacent 1-labels at {} and {}",
                        ev.min_v1_witness,
                        u + 1,
                        v + 1
                    ));
                }
            }
        }
        Theorem::WeightUpperBound => {
            if ev.gamma_wr > total {
                bad.push(format!(
                    "γ_wR = {} exceeds w(G) = {}",
                    ratio_to_string(&ev.gamma_wr),
                    ratio_to_string(&total)
                ));
            }
        }
        Theorem::WeightEqualityStructure => {
            let tight = ev.gamma_wr == total;
            let extremal = is_weight_extremal(g);
            if tight != extremal {
                bad.push(format!(
                    "γ_wR {} w(G) but the component structure says {}",
                    if tight { "equals" } else { "is below" },
                    if extremal { "equality" } else { "strict" }
                ));
            }
            if tight {
                for f in &ev.optima {
                    let [v0, _, v2] = f.partition();
                    for u in v2.iter() {
                        for &v in g.neighbors(u) {
                            if v2.contains(v) {
                                bad.push(format!("optimum {f}: V2 is not independent"));
                            }
                            if v0.contains(v) && (g.degree(u) != 1 || g.degree(v) != 1) {
                                bad.push(format!(
                                    "optimum {f}: the V2–V0 edge {}–{} is not its own component",
                                    u + 1,
                                    v + 1
                                ));
                            }
                        }
                        let covered: Rational = g
                            .neighbors(u)
                            .iter()
                            .filter(|&&v| v0.contains(v))
                            .map(|&v| g.weight(v).ratio())
                            .fold(Rational::zero(), |a, b| a + b);
                        if &covered != g.weight(u).ratio() {
                            bad.push(format!(
                                "optimum {f}: vertex {} carries weight {} but covers weight {}",
                                u + 1,
                                g.weight(u),
                                ratio_to_string(&covered)
                            ));
                        }
                    }
                }
            }
        }
        Theorem::NordhausGaddum => {
            let Some(co) = &ev.complement_gamma_wr else {
                return Ok(TheoremCheck::vacuous(theorem));
            };
            let min_weight = g
                .weights()
                .iter()
                .map(|w| w.ratio().clone())
                .min()
                .expect("nonempty");
            let sum = &ev.gamma_wr + co;
            if ratio_int(4) * &min_weight > sum {
                bad.push(format!(
                    "sum {} is below 4·min w = {}",
                    ratio_to_string(&sum),
                    ratio_to_string(&(ratio_int(4) * &min_weight))
                ));
            }
            if sum >= ratio_int(2) * &total {
                bad.push(format!(
                    "sum {} is not strictly below 2·w(G) = {}",
                    ratio_to_string(&sum),
                    ratio_to_string(&(ratio_int(2) * &total))
                ));
            }
        }
        Theorem::DifferentialDuality => {
            let via = &total - &ev.differential.value;
            if via != ev.gamma_wr {
                bad.push(format!(
                    "w(G) − ∂(G) = {} but γ_wR = {}",
                    ratio_to_string(&via),
                    ratio_to_string(&ev.gamma_wr)
                ));
            }
            let f = induced_labeling(g, &ev.differential.best_set, &ev.differential.boundary);
            if !is_wrdf(g, &f)? {
                bad.push(format!("maximizer-induced labeling {f} is invalid"));
            } else if labeling_weight(g, &f)? != ev.gamma_wr {
                bad.push(format!("maximizer-induced labeling {f} is not optimal"));
            }
        }
        other => {
            return Err(Error::InvalidParams(format!(
                "{other} is a cycle-family check; run it through the cycle harness"
            )));
        }
    }
    Ok(check_outcome(theorem, bad))
}

/// Run every general-graph check against one graph.
pub fn verify_graph(g: &WeightedGraph, opts: &SolveOptions) -> Result<Vec<TheoremCheck>> {
    let ev = gather_evidence(g, opts)?;
    Theorem::GRAPH_CHECKS
        .iter()
        .map(|&t| check_theorem(t, &ev, opts))
        .collect()
}

/// Run the cycle-family checks against one weighted cycle (vertex `i`
/// adjacent to `i ± 1 mod n`).
pub fn check_cycle(g: &WeightedGraph, opts: &SolveOptions) -> Result<Vec<TheoremCheck>> {
    let n = g.n();
    let weights = g.weights().to_vec();
    let solved = gamma_wr_dp(g)?;
    let constructions = cycle_constructions(&weights)?;
    let bound = cycle_upper_bound(&weights)?;
    let total = g.total_weight();
    let k = n / 3;
    let mut out = Vec::new();

    let mut bad = Vec::new();
    if !is_wrdf(g, &solved.witness)? {
        bad.push("DP witness is invalid".to_string());
    } else if labeling_weight(g, &solved.witness)? != solved.value {
        bad.push("DP witness weight mismatch".to_string());
    }
    if solved.value > bound.bound {
        bad.push(format!(
            "γ_wR = {} exceeds the bound {}",
            ratio_to_string(&solved.value),
            ratio_to_string(&bound.bound)
        ));
    }
    if solved.value > bound.best.weight {
        bad.push("a construction is cheaper than the optimum".to_string());
    }
    out.push(check_outcome(Theorem::CycleUpperBound, bad));

    let mut bad = Vec::new();
    for c in &constructions {
        if !is_wrdf(g, &c.labeling)? {
            bad.push(format!("construction at {} is invalid", c.start + 1));
        } else if labeling_weight(g, &c.labeling)? != c.weight {
            bad.push(format!("construction at {} misreports its weight", c.start + 1));
        }
    }
    out.push(check_outcome(Theorem::CycleConstructionsValid, bad));

    let mut bad = Vec::new();
    let sum: Rational = constructions.iter().map(|c| &c.weight).fold(Rational::zero(), |a, b| a + b);
    let expected = ratio_int((n - k) as i64) * &total;
    if sum != expected {
        bad.push(format!(
            "construction weights sum to {} instead of {}",
            ratio_to_string(&sum),
            ratio_to_string(&expected)
        ));
    }
    out.push(check_outcome(Theorem::CycleConstructionSum, bad));

    if n.is_multiple_of(3) {
        out.push(TheoremCheck::vacuous(Theorem::CycleEqualityIffConstant));
    } else {
        let constant = g.weights().windows(2).all(|w| w[0] == w[1]);
        let attained = solved.value == bound.bound;
        if attained == constant {
            out.push(TheoremCheck::pass(Theorem::CycleEqualityIffConstant));
        } else {
            out.push(TheoremCheck::fail(
                Theorem::CycleEqualityIffConstant,
                format!(
                    "bound {} with γ_wR = {}: attained={attained} constant={constant}",
                    ratio_to_string(&bound.bound),
                    ratio_to_string(&solved.value)
                ),
            ));
        }
    }

    if n > opts.labeling_guard {
        out.push(TheoremCheck::vacuous(Theorem::CycleDpMatchesBrute));
    } else {
        let brute = gamma_wr_brute(g, opts)?;
        if brute.value == solved.value {
            out.push(TheoremCheck::pass(Theorem::CycleDpMatchesBrute));
        } else {
            out.push(TheoremCheck::fail(
                Theorem::CycleDpMatchesBrute,
                format!(
                    "DP found {} but exhaustive search found {}",
                    ratio_to_string(&solved.value),
                    ratio_to_string(&brute.value)
                ),
            ));
        }
    }
    Ok(out)
}

/// Parameters for randomized corpus verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusParams {
    pub n_lo: usize,
    pub n_hi: usize,
    /// Edge probability for random graphs (ignored by the cycle harness).
    pub p: Rational,
    pub sampler: WeightSampler,
    /// For random corpora: total trials. For cycles: weightings per length.
    pub trials: usize,
    pub seed: u64,
}

impl Default for CorpusParams {
    fn default() -> Self {
        CorpusParams {
            n_lo: 1,
            n_hi: 8,
            p: Rational::new(1.into(), 2.into()),
            sampler: WeightSampler::IntUniform { lo: 1, hi: 9 },
            trials: 100,
            seed: 0,
        }
    }
}

impl fmt::Display for CorpusParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={}..{},p={},trials={},seed={},w={}",
            self.n_lo,
            self.n_hi,
            ratio_to_string(&self.p),
            self.trials,
            self.seed,
            self.sampler
        )
    }
}

impl FromStr for CorpusParams {
    type Err = Error;

    /// Parse `n=1..8,p=1/2,trials=100,seed=0,w=int:1:9`; every key is
    /// optional and defaults as shown.
    fn from_str(s: &str) -> Result<Self> {
        let mut params = CorpusParams::default();
        if s.is_empty() {
            return Ok(params);
        }
        for item in s.split(',') {
            let (key, value) = item.split_once('=').ok_or_else(|| {
                Error::InvalidParams(format!("expected key=value in corpus spec, got {item:?}"))
            })?;
            let int = |v: &str| -> Result<usize> {
                v.parse::<usize>()
                    .map_err(|e| Error::InvalidParams(format!("bad {key} value {v:?}: {e}")))
            };
            match key {
                "n" => {
                    if let Some((lo, hi)) = value.split_once("..") {
                        params.n_lo = int(lo)?;
                        params.n_hi = int(hi)?;
                    } else {
                        params.n_lo = int(value)?;
                        params.n_hi = params.n_lo;
                    }
                }
                "p" => {
                    params.p = parse_rational(value)?;
                }
                "trials" => params.trials = int(value)?,
                "seed" => {
                    params.seed = value.parse::<u64>().map_err(|e| {
                        Error::InvalidParams(format!("bad seed {value:?}: {e}"))
                    })?;
                }
                "w" => params.sampler = value.parse()?,
                other => {
                    return Err(Error::InvalidParams(format!(
                        "unknown corpus key {other:?} (expected n, p, trials, seed, or w)"
                    )))
                }
            }
        }
        if params.n_lo < 1 || params.n_lo > params.n_hi {
            return Err(Error::InvalidParams(format!(
                "bad vertex range {}..{}",
                params.n_lo, params.n_hi
            )));
        }
        if params.trials == 0 {
            return Err(Error::InvalidParams("trials must be positive".into()));
        }
        Ok(params)
    }
}

/// One failing trial, with enough to reproduce and study it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialFailure {
    pub trial: usize,
    pub graph_seed: u64,
    pub detail: String,
    /// The failing graph, serialized.
    pub graph: String,
    /// A smaller failing graph found by greedy deletion, if any.
    pub shrunk: Option<String>,
}

/// Aggregated outcomes of one theorem across a corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremRecord {
    pub theorem: Theorem,
    pub applicable: usize,
    pub passed: usize,
    pub failures: Vec<TrialFailure>,
}

/// Results of a randomized verification run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusReport {
    pub params: CorpusParams,
    pub trials: usize,
    pub records: Vec<TheoremRecord>,
}

impl CorpusReport {
    pub fn all_passed(&self) -> bool {
        self.records.iter().all(|r| r.failures.is_empty())
    }

    pub fn total_failures(&self) -> usize {
        self.records.iter().map(|r| r.failures.len()).sum()
    }
}

const MAX_RECORDED_FAILURES: usize = 5;

fn fold_checks(
    records: &mut [TheoremRecord],
    checks: &[TheoremCheck],
    trial: usize,
    graph_seed: u64,
    g: &WeightedGraph,
    shrinker: Option<&dyn Fn(Theorem) -> Option<WeightedGraph>>,
) {
    for (record, check) in records.iter_mut().zip(checks) {
        debug_assert_eq!(record.theorem, check.theorem);
        if check.applicable {
            record.applicable += 1;
        }
        if check.passed {
            record.passed += 1;
        } else if record.failures.len() < MAX_RECORDED_FAILURES {
            let shrunk = shrinker
                .and_then(|s| s(check.theorem))
                .map(|h| to_wrd_string(&h));
            record.failures.push(TrialFailure {
                trial,
                graph_seed,
                detail: check.detail.clone().unwrap_or_default(),
                graph: to_wrd_string(g),
                shrunk,
            });
        }
    }
}

/// Verify every general-graph theorem on a corpus of seeded random graphs.
///
/// Per trial, the vertex count is drawn from `n_lo..=n_hi` and a fresh
/// sub-seed from the master stream, so any single trial can be replayed
/// from its recorded `graph_seed`.
pub fn verify_corpus(params: &CorpusParams, opts: &SolveOptions) -> Result<CorpusReport> {
    if params.n_lo < 1 || params.n_lo > params.n_hi {
        return Err(Error::InvalidParams(format!(
            "bad vertex range {}..{}",
            params.n_lo, params.n_hi
        )));
    }
    if params.n_hi > opts.labeling_guard {
        return Err(Error::SizeGuardExceeded {
            n: params.n_hi,
            guard: opts.labeling_guard,
            space: "3^n labeling",
        });
    }
    let mut records: Vec<TheoremRecord> = Theorem::GRAPH_CHECKS
        .iter()
        .map(|&theorem| TheoremRecord { theorem, applicable: 0, passed: 0, failures: Vec::new() })
        .collect();
    let mut master = ChaCha8Rng::seed_from_u64(params.seed);
    for trial in 0..params.trials {
        let n = params.n_lo + uniform_below(&mut master, (params.n_hi - params.n_lo + 1) as u64) as usize;
        let graph_seed = master.next_u64();
        let g = generate(&GraphKind::Random { n, p: params.p.clone() }, &params.sampler, graph_seed)?;
        let ev = gather_evidence(&g, opts)?;
        let checks: Vec<TheoremCheck> = Theorem::GRAPH_CHECKS
            .iter()
            .map(|&t| check_theorem(t, &ev, opts))
            .collect::<Result<_>>()?;
        let shrinker = |theorem: Theorem| -> Option<WeightedGraph> {
            let still_fails = |h: &WeightedGraph| {
                gather_evidence(h, opts)
                    .and_then(|ev| check_theorem(theorem, &ev, opts))
                    .map(|c| c.applicable && !c.passed)
                    .unwrap_or(false)
            };
            let shrunk = shrink_counterexample(&g, &still_fails);
            (shrunk != g).then_some(shrunk)
        };
        fold_checks(&mut records, &checks, trial, graph_seed, &g, Some(&shrinker));
    }
    Ok(CorpusReport { params: params.clone(), trials: params.trials, records })
}

/// Verify the cycle-family theorems across lengths `n_lo..=n_hi` with
/// `trials` random weightings per length.
pub fn verify_cycles(params: &CorpusParams, opts: &SolveOptions) -> Result<CorpusReport> {
    if params.n_lo < 3 {
        return Err(Error::InvalidParams("cycle verification needs n >= 3".into()));
    }
    let mut records: Vec<TheoremRecord> = Theorem::CYCLE_CHECKS
        .iter()
        .map(|&theorem| TheoremRecord { theorem, applicable: 0, passed: 0, failures: Vec::new() })
        .collect();
    let mut master = ChaCha8Rng::seed_from_u64(params.seed);
    let mut trial = 0;
    for n in params.n_lo..=params.n_hi {
        for _ in 0..params.trials {
            let graph_seed = master.next_u64();
            let g = generate(&GraphKind::Cycle { n }, &params.sampler, graph_seed)?;
            let checks = check_cycle(&g, opts)?;
            fold_checks(&mut records, &checks, trial, graph_seed, &g, None);
            trial += 1;
        }
    }
    Ok(CorpusReport { params: params.clone(), trials: trial, records })
}

/// Greedily shrink a graph while `still_fails` keeps returning true: first
/// by deleting vertices, then edges, restarting after every success.
pub fn shrink_counterexample(
    g: &WeightedGraph,
    still_fails: &dyn Fn(&WeightedGraph) -> bool,
) -> WeightedGraph {
    let mut current = g.clone();
    'outer: loop {
        for v in 0..current.n() {
            let keep: Vec<usize> = (0..current.n()).filter(|&u| u != v).collect();
            let set = VertexSet::from_sorted(keep);
            let candidate = current
                .induced_subgraph(&set)
                .expect("vertex subsets of a valid graph are valid");
            if still_fails(&candidate) {
                current = candidate;
                continue 'outer;
            }
        }
        let edges = current.edges();
        for skip in 0..edges.len() {
            let kept: Vec<(usize, usize)> = edges
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != skip)
                .map(|(_, &e)| e)
                .collect();
            let candidate = WeightedGraph::new(current.weights().to_vec(), &kept)
                .expect("edge subsets of a valid graph are valid");
            if still_fails(&candidate) {
                current = candidate;
                continue 'outer;
            }
        }
        return current;
    }
}
