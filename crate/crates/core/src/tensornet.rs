//! Tensor-network backend for `<psi| U^dag Z_j Z_k U |psi>` on a lightcone.
//!
//! Every index is binary. Diagonal gates (the per-edge cost phases and the
//! final `Z` observables) are tensors over the wire indices already present,
//! so only the initial state and each mixer layer introduce indices. The bra
//! half is the complex conjugate of the ket half and shares the final indices
//! with it.
//!
//! Contraction is bucket elimination: each index is summed out in plan order
//! after merging every tensor that carries it, and the result goes to the
//! bucket of its earliest remaining index.

use num_complex::Complex64;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::{Graph, Seed};
use crate::lightcone::{self, Lightcone, LightconeClass};
use crate::qaoa::{EdgeExpectation, ParamPoint};

/// Widest intermediate tensor `contract` will allocate (log2 of its size).
pub const MAX_WIDTH: usize = 30;
pub const RGREEDY_TEMPERATURE: f64 = 0.01;
pub const RGREEDY_REPEATS: usize = 10;

#[derive(Debug, Clone, PartialEq)]
pub struct Tensor {
    pub indices: Vec<usize>,
    /// Row-major over `indices`, first index most significant.
    pub data: Vec<Complex64>,
}

impl Tensor {
    pub fn new(indices: Vec<usize>, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != 1usize << indices.len() {
            return Err(Error::param(format!(
                "tensor over {} indices needs {} values, got {}",
                indices.len(),
                1usize << indices.len(),
                data.len()
            )));
        }
        Ok(Tensor { indices, data })
    }

    pub fn scalar(v: Complex64) -> Self {
        Tensor { indices: Vec::new(), data: vec![v] }
    }

    fn real(indices: Vec<usize>, data: &[f64]) -> Self {
        Tensor { indices, data: data.iter().map(|&x| Complex64::new(x, 0.0)).collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct TensorNetwork {
    pub tensors: Vec<Tensor>,
    /// Always empty for expectation values.
    pub open_indices: Vec<usize>,
    pub index_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionPlan {
    pub order: Vec<usize>,
    /// Largest intermediate tensor arity; the contraction allocates `2^width` values at most.
    pub width: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContractionStats {
    pub value: Complex64,
    /// Element count of the largest intermediate tensor.
    pub peak_elements: usize,
}

/// Network whose full contraction is `<Z_j Z_k>` at the lightcone's central edge.
pub fn build(lc: &Lightcone, theta: &ParamPoint) -> Result<TensorNetwork> {
    theta.validate()?;
    let n = lc.qubits();
    let p = theta.depth();
    let mut next = 0usize;
    let mut fresh = |count: usize| -> Vec<usize> {
        let ids = (next..next + count).collect();
        next += count;
        ids
    };
    // ket[q][l], bra[q][l]: wire of qubit q entering layer l; shared final wires.
    let ket: Vec<Vec<usize>> = (0..n).map(|_| fresh(p)).collect();
    let bra: Vec<Vec<usize>> = (0..n).map(|_| fresh(p)).collect();
    let fin: Vec<usize> = fresh(n);

    let plus = std::f64::consts::FRAC_1_SQRT_2;
    let mut tensors = Vec::new();
    for q in 0..n {
        tensors.push(Tensor::real(vec![ket[q][0]], &[plus, plus]));
        tensors.push(Tensor::real(vec![bra[q][0]], &[plus, plus]));
    }

    for layer in 0..p {
        let (gamma, beta) = (theta.gamma[layer], theta.beta[layer]);
        let cut = Complex64::from_polar(1.0, -gamma);
        let one = Complex64::new(1.0, 0.0);
        for &(u, v) in lc.subgraph.edges() {
            let phase = vec![one, cut, cut, one];
            let conj = phase.iter().map(|z| z.conj()).collect();
            tensors.push(Tensor { indices: vec![ket[u][layer], ket[v][layer]], data: phase });
            tensors.push(Tensor { indices: vec![bra[u][layer], bra[v][layer]], data: conj });
        }
        let (s, c) = beta.sin_cos();
        let diag = Complex64::new(c, 0.0);
        let off = Complex64::new(0.0, -s);
        let mixer = vec![diag, off, off, diag];
        let mixer_conj: Vec<Complex64> = mixer.iter().map(|z| z.conj()).collect();
        for q in 0..n {
            let (ko, bo) = if layer + 1 == p { (fin[q], fin[q]) } else { (ket[q][layer + 1], bra[q][layer + 1]) };
            tensors.push(Tensor { indices: vec![ket[q][layer], ko], data: mixer.clone() });
            tensors.push(Tensor { indices: vec![bra[q][layer], bo], data: mixer_conj.clone() });
        }
    }

    let (j, k) = lc.central_edge;
    tensors.push(Tensor::real(vec![fin[j]], &[1.0, -1.0]));
    tensors.push(Tensor::real(vec![fin[k]], &[1.0, -1.0]));

    Ok(TensorNetwork { tensors, open_indices: Vec::new(), index_count: next })
}

/// Index count of the p=1 network for a realized class: three wires per qubit.
pub fn p1_index_count(c: LightconeClass) -> usize {
    3 * c.node_count()
}

#[derive(Clone)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn new(n: usize) -> Self {
        BitSet(vec![0; n.div_ceil(64)])
    }
    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }
    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }
    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(wi, &w)| (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| wi * 64 + b))
    }
}

/// Index adjacency: two indices are adjacent when some tensor carries both.
fn interaction_graph(tn: &TensorNetwork) -> Vec<BitSet> {
    let mut adj = vec![BitSet::new(tn.index_count); tn.index_count];
    for t in &tn.tensors {
        for &a in &t.indices {
            for &b in &t.indices {
                if a != b {
                    adj[a].insert(b);
                }
            }
        }
    }
    adj
}

fn eliminate(adj: &mut [BitSet], v: usize) {
    let nbrs = adj[v].clone();
    for u in nbrs.iter() {
        adj[u].union_with(&nbrs);
        adj[u].remove(u);
        adj[u].remove(v);
    }
    adj[v] = BitSet::new(adj.len());
}

fn check_order(tn: &TensorNetwork, order: &[usize]) -> Result<()> {
    let mut seen = vec![false; tn.index_count];
    if order.len() != tn.index_count {
        return Err(Error::param(format!("plan covers {} of {} indices", order.len(), tn.index_count)));
    }
    for &i in order {
        if i >= tn.index_count || std::mem::replace(&mut seen[i], true) {
            return Err(Error::param("plan order is not a permutation of the network indices"));
        }
    }
    Ok(())
}

/// Width of eliminating indices in `order`.
pub fn plan_width(tn: &TensorNetwork, order: &[usize]) -> Result<usize> {
    check_order(tn, order)?;
    let mut adj = interaction_graph(tn);
    let mut width = 0;
    for &v in order {
        width = width.max(adj[v].len());
        eliminate(&mut adj, v);
    }
    Ok(width)
}

fn gumbel(rng: &mut impl Rng) -> f64 {
    let u: f64 = rng.gen::<f64>().max(f64::MIN_POSITIVE);
    -(-u.ln()).ln()
}

/// Randomized greedy ordering: each step eliminates the index minimising
/// `degree - temperature * Gumbel noise`; the narrowest of `repeats` passes wins.
pub fn order_rgreedy(tn: &TensorNetwork, temperature: f64, repeats: usize, seed: Seed) -> Result<ContractionPlan> {
    if !(temperature >= 0.0) || !temperature.is_finite() {
        return Err(Error::param("temperature must be finite and non-negative"));
    }
    if repeats == 0 {
        return Err(Error::param("repeats must be at least 1"));
    }
    let base = interaction_graph(tn);
    let n = tn.index_count;
    let mut best: Option<ContractionPlan> = None;

    for r in 0..repeats {
        let mut rng = seed.stream(r as u64);
        let mut adj = base.clone();
        let mut alive = vec![true; n];
        let mut order = Vec::with_capacity(n);
        let mut width = 0;
        for _ in 0..n {
            let mut pick = (usize::MAX, f64::INFINITY);
            for v in (0..n).filter(|&v| alive[v]) {
                let deg = adj[v].len() as f64;
                let cost = if temperature > 0.0 { deg - temperature * gumbel(&mut rng) } else { deg };
                if cost < pick.1 {
                    pick = (v, cost);
                }
            }
            let v = pick.0;
            width = width.max(adj[v].len());
            eliminate(&mut adj, v);
            alive[v] = false;
            order.push(v);
        }
        if best.as_ref().is_none_or(|b| width < b.width) {
            best = Some(ContractionPlan { order, width });
        }
    }
    Ok(best.unwrap_or(ContractionPlan { order: Vec::new(), width: 0 }))
}

pub fn contract(tn: &TensorNetwork, plan: &ContractionPlan) -> Result<Complex64> {
    contract_with_stats(tn, plan).map(|s| s.value)
}

pub fn contract_with_stats(tn: &TensorNetwork, plan: &ContractionPlan) -> Result<ContractionStats> {
    let width = plan_width(tn, &plan.order)?;
    if width > MAX_WIDTH {
        return Err(Error::Capacity(format!("contraction width {width} exceeds {MAX_WIDTH}")));
    }
    let mut rank = vec![0usize; tn.index_count];
    for (r, &i) in plan.order.iter().enumerate() {
        rank[i] = r;
    }

    let mut scalar = Complex64::new(1.0, 0.0);
    let mut buckets: Vec<Vec<Tensor>> = vec![Vec::new(); tn.index_count];
    let place = |t: Tensor, buckets: &mut Vec<Vec<Tensor>>, scalar: &mut Complex64| match t
        .indices
        .iter()
        .map(|&i| rank[i])
        .min()
    {
        Some(r) => buckets[r].push(t),
        None => *scalar *= t.data[0],
    };
    for t in &tn.tensors {
        place(t.clone(), &mut buckets, &mut scalar);
    }

    let mut peak = 1usize;
    for r in 0..tn.index_count {
        let bucket = std::mem::take(&mut buckets[r]);
        if bucket.is_empty() {
            // An index no tensor carries sums to a factor of 2.
            scalar *= 2.0;
            continue;
        }
        let merged = sum_out(&bucket, plan.order[r], &rank);
        peak = peak.max(merged.data.len());
        place(merged, &mut buckets, &mut scalar);
    }
    Ok(ContractionStats { value: scalar, peak_elements: peak })
}

/// Product of `bucket` summed over index `x`.
fn sum_out(bucket: &[Tensor], x: usize, rank: &[usize]) -> Tensor {
    let mut rest: Vec<usize> = bucket.iter().flat_map(|t| t.indices.iter().copied()).filter(|&i| i != x).collect();
    rest.sort_unstable_by_key(|&i| rank[i]);
    rest.dedup();
    let k = rest.len();

    // Per tensor: flat-index weight of x and of each result position.
    let weights: Vec<(usize, Vec<usize>)> = bucket
        .iter()
        .map(|t| {
            let a = t.indices.len();
            let w = |idx: usize| t.indices.iter().position(|&i| i == idx).map_or(0, |p| 1usize << (a - 1 - p));
            (w(x), rest.iter().map(|&i| w(i)).collect())
        })
        .collect();

    let mut data = vec![Complex64::new(0.0, 0.0); 1usize << k];
    for (flat, out) in data.iter_mut().enumerate() {
        let offsets: Vec<usize> = weights
            .iter()
            .map(|(_, ws)| ws.iter().enumerate().map(|(pos, &w)| ((flat >> (k - 1 - pos)) & 1) * w).sum())
            .collect();
        for xb in 0..2 {
            let mut prod = Complex64::new(1.0, 0.0);
            for ((t, (wx, _)), off) in bucket.iter().zip(&weights).zip(&offsets) {
                prod *= t.data[off + xb * wx];
            }
            *out += prod;
        }
    }
    Tensor { indices: rest, data }
}

/// `<Z_j Z_k>` through build, rgreedy ordering and bucket elimination.
pub fn edge_expectation_tn(lc: &Lightcone, theta: &ParamPoint, seed: Seed) -> Result<EdgeExpectation> {
    let tn = build(lc, theta)?;
    let plan = order_rgreedy(&tn, RGREEDY_TEMPERATURE, RGREEDY_REPEATS, seed)?;
    Ok(EdgeExpectation::from_zz(contract(&tn, &plan)?.re))
}

/// rgreedy contraction width of every edge's depth-`p` lightcone network, in edge order.
pub fn width_profile(g: &Graph, p: usize, seed: Seed) -> Result<Vec<usize>> {
    if p == 0 {
        return Err(Error::param("depth must be at least 1"));
    }
    // Network structure does not depend on the angles.
    let theta = ParamPoint::new(vec![0.5; p], vec![0.25; p])?;
    g.edges()
        .par_iter()
        .enumerate()
        .map(|(i, &e)| {
            let tn = build(&lightcone::extract(g, e, p)?, &theta)?;
            Ok(order_rgreedy(&tn, RGREEDY_TEMPERATURE, RGREEDY_REPEATS, seed.child(i as u64))?.width)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WidthSummary {
    pub max: usize,
    pub mean: f64,
    pub stddev: f64,
}

pub fn summarize_widths(widths: &[usize]) -> WidthSummary {
    if widths.is_empty() {
        return WidthSummary { max: 0, mean: 0.0, stddev: 0.0 };
    }
    let n = widths.len() as f64;
    let mean = widths.iter().sum::<usize>() as f64 / n;
    let var = widths.iter().map(|&w| (w as f64 - mean).powi(2)).sum::<f64>() / n;
    WidthSummary { max: *widths.iter().max().unwrap(), mean, stddev: var.sqrt() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::random_regular;
    use crate::lightcone::{enumerate_general, realize};
    use crate::qaoa::edge_expectation_sv;
    use rand::seq::SliceRandom;
    use std::f64::consts::PI;

    fn class(d1: usize, d2: usize, t: usize) -> LightconeClass {
        LightconeClass::new(d1, d2, t).unwrap()
    }

    fn tn_value(lc: &Lightcone, th: &ParamPoint) -> Complex64 {
        let tn = build(lc, th).unwrap();
        contract(&tn, &order_rgreedy(&tn, 0.01, 10, Seed(3)).unwrap()).unwrap()
    }

    #[test]
    fn single_edge_matches_statevector() {
        let lc = realize(class(1, 1, 0)).unwrap();
        for th in [ParamPoint::single(PI / 2.0, PI / 8.0), ParamPoint::single(0.3, 1.2)] {
            let v = tn_value(&lc, &th);
            let sv = edge_expectation_sv(&lc, &th).unwrap().e;
            assert!((v.re - sv).abs() < 1e-12 && v.im.abs() < 1e-12);
        }
        assert!(tn_value(&lc, &ParamPoint::single(0.0, 0.8)).norm() < 1e-14);
    }

    #[test]
    fn classes_match_statevector() {
        use rand::Rng;
        let mut rng = Seed(11).rng();
        for c in enumerate_general(6) {
            let lc = realize(c).unwrap();
            for _ in 0..3 {
                let th = ParamPoint::single(rng.gen_range(0.0..2.0 * PI), rng.gen_range(0.0..PI));
                let d = (tn_value(&lc, &th).re - edge_expectation_sv(&lc, &th).unwrap().e).abs();
                assert!(d < 1e-8, "{c}: {d}");
            }
        }
    }

    #[test]
    fn depth_two_matches_statevector() {
        let g = random_regular(10, 3, Seed(1)).unwrap();
        let th = ParamPoint::new(vec![0.4, 0.8], vec![0.7, 0.3]).unwrap();
        for &e in &g.edges()[..4] {
            let lc = lightcone::extract(&g, e, 2).unwrap();
            let d = (tn_value(&lc, &th).re - edge_expectation_sv(&lc, &th).unwrap().e).abs();
            assert!(d < 1e-10);
        }
    }

    #[test]
    fn index_count_is_three_per_qubit() {
        for c in enumerate_general(6) {
            let tn = build(&realize(c).unwrap(), &ParamPoint::single(0.2, 0.3)).unwrap();
            assert_eq!(tn.index_count, p1_index_count(c));
            assert!(tn.open_indices.is_empty());
            let mut used = vec![false; tn.index_count];
            for t in &tn.tensors {
                assert_eq!(t.data.len(), 1 << t.indices.len());
                for &i in &t.indices {
                    used[i] = true;
                }
            }
            assert!(used.iter().all(|&u| u));
        }
    }

    #[test]
    fn order_invariance_and_peak_memory() {
        let lc = realize(class(3, 4, 1)).unwrap();
        let tn = build(&lc, &ParamPoint::single(1.1, 0.4)).unwrap();
        let reference = contract(&tn, &order_rgreedy(&tn, 0.0, 1, Seed(0)).unwrap()).unwrap();
        let mut rng = Seed(21).rng();
        for _ in 0..5 {
            let mut order: Vec<usize> = (0..tn.index_count).collect();
            order.shuffle(&mut rng);
            let width = plan_width(&tn, &order).unwrap();
            let stats = contract_with_stats(&tn, &ContractionPlan { order, width }).unwrap();
            assert!((stats.value - reference).norm() < 1e-10);
            assert_eq!(stats.peak_elements, 1 << width);
        }
        for seed in 0..5 {
            let plan = order_rgreedy(&tn, 0.01, 10, Seed(seed)).unwrap();
            assert_eq!(contract_with_stats(&tn, &plan).unwrap().peak_elements, 1 << plan.width);
        }
    }

    #[test]
    fn zero_temperature_is_min_degree_greedy() {
        let tn = build(&realize(class(3, 3, 1)).unwrap(), &ParamPoint::single(0.2, 0.3)).unwrap();
        let a = order_rgreedy(&tn, 0.0, 1, Seed(1)).unwrap();
        let b = order_rgreedy(&tn, 0.0, 1, Seed(99)).unwrap();
        assert_eq!(a, b);
        // Replay: each choice is a minimum-degree index, lowest id on ties.
        let mut adj = interaction_graph(&tn);
        let mut alive = vec![true; tn.index_count];
        for &v in &a.order {
            let min = (0..tn.index_count).filter(|&u| alive[u]).map(|u| adj[u].len()).min().unwrap();
            let first = (0..tn.index_count).find(|&u| alive[u] && adj[u].len() == min).unwrap();
            assert_eq!(v, first);
            eliminate(&mut adj, v);
            alive[v] = false;
        }
    }

    #[test]
    fn rgreedy_is_deterministic() {
        let g = random_regular(16, 3, Seed(5)).unwrap();
        let tn = build(
            &lightcone::extract(&g, g.edges()[0], 2).unwrap(),
            &ParamPoint::new(vec![0.1; 2], vec![0.2; 2]).unwrap(),
        )
        .unwrap();
        assert_eq!(order_rgreedy(&tn, 0.01, 10, Seed(4)).unwrap(), order_rgreedy(&tn, 0.01, 10, Seed(4)).unwrap());
        assert!(order_rgreedy(&tn, -1.0, 10, Seed(4)).is_err());
        assert!(order_rgreedy(&tn, 0.01, 0, Seed(4)).is_err());
    }

    #[test]
    fn empty_network_is_product_of_scalars() {
        let tn = TensorNetwork {
            tensors: vec![Tensor::scalar(Complex64::new(2.0, 0.0)), Tensor::scalar(Complex64::new(0.0, 3.0))],
            open_indices: Vec::new(),
            index_count: 0,
        };
        let plan = order_rgreedy(&tn, 0.01, 10, Seed(0)).unwrap();
        assert_eq!(plan.width, 0);
        assert_eq!(contract(&tn, &plan).unwrap(), Complex64::new(0.0, 6.0));
    }

    #[test]
    fn bad_plans_rejected() {
        let tn = build(&realize(class(1, 1, 0)).unwrap(), &ParamPoint::single(0.2, 0.3)).unwrap();
        let short = ContractionPlan { order: vec![0, 1], width: 0 };
        assert!(matches!(contract(&tn, &short), Err(Error::Parameter(_))));
        let dup = ContractionPlan { order: vec![0; tn.index_count], width: 0 };
        assert!(matches!(contract(&tn, &dup), Err(Error::Parameter(_))));
    }

    #[test]
    fn width_capacity_checked_before_allocation() {
        // One tensor over 32 indices would need a 2^31 intermediate.
        let k = 32;
        let tn = TensorNetwork {
            tensors: (0..k).flat_map(|a| (a + 1..k).map(move |b| Tensor::real(vec![a, b], &[1.0; 4]))).collect(),
            open_indices: Vec::new(),
            index_count: k,
        };
        let plan = ContractionPlan { order: (0..k).collect(), width: k - 1 };
        assert!(matches!(contract(&tn, &plan), Err(Error::Capacity(_))));
    }

    /// Minimum width over all elimination orders, subset DP.
    fn exhaustive_width(adj0: &[BitSet]) -> usize {
        let n = adj0.len();
        let full = 1usize << n;
        let mut best = vec![usize::MAX; full];
        best[0] = 0;
        for set in 1..full {
            for v in (0..n).filter(|v| set >> v & 1 == 1) {
                let prev = set & !(1 << v);
                if best[prev] == usize::MAX {
                    continue;
                }
                // Neighbours of v after eliminating `prev`: reachable through `prev`.
                let mut seen = 1usize << v;
                let mut stack = vec![v];
                let mut q = 0;
                while let Some(u) = stack.pop() {
                    for w in adj0[u].iter() {
                        if seen >> w & 1 == 0 {
                            seen |= 1 << w;
                            if prev >> w & 1 == 1 {
                                stack.push(w);
                            } else {
                                q += 1;
                            }
                        }
                    }
                }
                best[set] = best[set].min(best[prev].max(q));
            }
        }
        best[full - 1]
    }

    #[test]
    fn tree_networks_have_small_width() {
        use rand::Rng;
        let mut rng = Seed(8).rng();
        for _ in 0..40 {
            let k = rng.gen_range(2..=8);
            let mut tensors = Vec::new();
            for v in 1..k {
                let parent = rng.gen_range(0..v);
                tensors.push(Tensor::real(vec![parent, v], &[0.3, 1.0, -0.5, 0.7]));
            }
            tensors.push(Tensor::real(vec![rng.gen_range(0..k)], &[1.0, 2.0]));
            let tn = TensorNetwork { tensors, open_indices: Vec::new(), index_count: k };
            let plan = order_rgreedy(&tn, 0.01, 10, Seed(1)).unwrap();
            let opt = exhaustive_width(&interaction_graph(&tn));
            assert!(plan.width <= 2);
            assert!(plan.width >= opt);
        }
    }

    #[test]
    fn tree_graph_lightcones() {
        let trees = [
            Graph::path(2),
            Graph::path(3),
            Graph::path(4),
            Graph::path(5),
            Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap(),
            Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap(),
            Graph::new(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap(),
        ];
        for g in &trees {
            let widths = width_profile(g, 1, Seed(2)).unwrap();
            for (i, &e) in g.edges().iter().enumerate() {
                let tn = build(&lightcone::extract(g, e, 1).unwrap(), &ParamPoint::single(0.5, 0.25)).unwrap();
                let opt = exhaustive_width(&interaction_graph(&tn));
                assert!(widths[i] <= 3 && widths[i] >= opt, "{widths:?} opt {opt}");
            }
        }
    }

    #[test]
    fn regular_p1_widths() {
        for n in [8, 16, 32] {
            let g = random_regular(n, 3, Seed(n as u64)).unwrap();
            let w = width_profile(&g, 1, Seed(0)).unwrap();
            assert_eq!(w.len(), g.edge_count());
            assert!(summarize_widths(&w).max <= 5);
        }
    }

    #[test]
    fn width_summary() {
        let s = summarize_widths(&[2, 4, 4, 4, 5, 5, 7, 9]);
        assert_eq!(s.max, 9);
        assert!((s.mean - 5.0).abs() < 1e-12 && (s.stddev - 2.0).abs() < 1e-12);
    }
}
