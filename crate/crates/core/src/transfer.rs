//! Directional transferability of optimized p=1 parameters between lightcone
//! classes, the maps built from it, and whole-graph donor/acceptor experiments.
//!
//! The coefficient from donor `a` to acceptor `b` is the mean central-edge
//! contribution of `b` over the multistart optima of `a`, divided by the best
//! contribution the same multistart procedure finds for `b` itself.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::lightcone::{self, LightconeClass};
use crate::maxcut;
use crate::numfmt::sig;
use crate::optimize::{optimize_class, optimize_graph, OptimResult, OptimizerConfig};
use crate::qaoa::{self, zz_closed_form, Backend, ParamPoint};

pub const DEFAULT_THRESHOLD: f64 = 0.9;

/// Central-edge contribution `(1 - <ZZ>) / 2` of class `c` at a p=1 point.
pub fn class_contribution(c: LightconeClass, theta: &ParamPoint) -> f64 {
    0.5 * (1.0 - zz_closed_form(c, theta.gamma[0], theta.beta[0]))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransferCoefficient {
    pub donor: LightconeClass,
    pub acceptor: LightconeClass,
    pub value: f64,
    pub donor_optima: Vec<ParamPoint>,
    pub acceptor_max: f64,
}

fn ratio(acceptor: LightconeClass, donor_optima: &[ParamPoint], acceptor_max: f64) -> Result<f64> {
    if !(acceptor_max > 0.0) {
        return Err(Error::DegenerateAcceptor(acceptor.to_string()));
    }
    if donor_optima.is_empty() {
        return Err(Error::Numerical("donor has no successful restarts".into()));
    }
    let mean = donor_optima.iter().map(|t| class_contribution(acceptor, t)).sum::<f64>() / donor_optima.len() as f64;
    Ok(mean / acceptor_max)
}

pub fn coefficient(
    donor: LightconeClass,
    acceptor: LightconeClass,
    cfg: &OptimizerConfig,
) -> Result<TransferCoefficient> {
    cfg.validate()?;
    let d = optimize_class(donor, cfg)?;
    let acceptor_max = if acceptor == donor { d.best_value } else { optimize_class(acceptor, cfg)?.best_value };
    let donor_optima = d.optima();
    let value = ratio(acceptor, &donor_optima, acceptor_max)?;
    Ok(TransferCoefficient { donor, acceptor, value, donor_optima, acceptor_max })
}

/// Square matrix of coefficients, `matrix[donor][acceptor]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransferMap {
    pub classes: Vec<LightconeClass>,
    pub matrix: Vec<Vec<f64>>,
    /// Best multistart contribution per class, aligned with `classes`.
    pub class_max: Vec<f64>,
    pub config: OptimizerConfig,
}

impl TransferMap {
    pub fn index_of(&self, c: LightconeClass) -> Option<usize> {
        self.classes.iter().position(|&x| x == c)
    }

    pub fn get(&self, donor: LightconeClass, acceptor: LightconeClass) -> Option<f64> {
        Some(self.matrix[self.index_of(donor)?][self.index_of(acceptor)?])
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Numerical(e.to_string()))
    }

    /// Rows are donors, columns acceptors, headed by class tokens.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("donor\\acceptor");
        for c in &self.classes {
            write!(out, ",{c}").unwrap();
        }
        out.push('\n');
        for (c, row) in self.classes.iter().zip(&self.matrix) {
            out.push_str(&c.to_string());
            for v in row {
                write!(out, ",{}", sig(*v)).unwrap();
            }
            out.push('\n');
        }
        out
    }
}

/// Every ordered pair of `classes`. Each class is optimized once; its optima
/// serve its whole row and its best value serves its whole column.
pub fn build_map(classes: &[LightconeClass], cfg: &OptimizerConfig) -> Result<TransferMap> {
    if classes.is_empty() {
        return Err(Error::param("transfer map needs at least one class"));
    }
    cfg.validate()?;
    let runs: Vec<OptimResult> = classes.par_iter().map(|&c| optimize_class(c, cfg)).collect::<Result<_>>()?;
    let optima: Vec<Vec<ParamPoint>> = runs.iter().map(OptimResult::optima).collect();
    let class_max: Vec<f64> = runs.iter().map(|r| r.best_value).collect();
    let matrix = optima
        .par_iter()
        .map(|donor_optima| {
            classes.iter().zip(&class_max).map(|(&a, &max)| ratio(a, donor_optima, max)).collect::<Result<Vec<f64>>>()
        })
        .collect::<Result<_>>()?;
    Ok(TransferMap { classes: classes.to_vec(), matrix, class_max, config: cfg.clone() })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParitySummary {
    pub odd_odd: Option<f64>,
    pub even_even: Option<f64>,
    pub odd_even: Option<f64>,
    pub even_odd: Option<f64>,
    /// Mean over the `d -> d` block for every regular degree `d` present.
    pub same_degree: BTreeMap<usize, f64>,
}

/// Block means over the regular classes of `map`, keyed by donor then
/// acceptor degree parity. Non-regular classes are ignored; empty blocks are
/// `None`.
pub fn parity_summary(map: &TransferMap) -> ParitySummary {
    let mut blocks = [[(0.0, 0usize); 2]; 2];
    let mut same: BTreeMap<usize, (f64, usize)> = BTreeMap::new();
    for (i, a) in map.classes.iter().enumerate() {
        let Some(pa) = a.parity() else { continue };
        for (j, b) in map.classes.iter().enumerate() {
            let Some(pb) = b.parity() else { continue };
            let v = map.matrix[i][j];
            let cell = &mut blocks[pa][pb];
            cell.0 += v;
            cell.1 += 1;
            if a.d1 == b.d1 {
                let e = same.entry(a.d1).or_default();
                e.0 += v;
                e.1 += 1;
            }
        }
    }
    let mean = |(s, k): (f64, usize)| (k > 0).then(|| s / k as f64);
    ParitySummary {
        odd_odd: mean(blocks[1][1]),
        even_even: mean(blocks[0][0]),
        odd_even: mean(blocks[1][0]),
        even_odd: mean(blocks[0][1]),
        same_degree: same.into_iter().map(|(d, (s, k))| (d, s / k as f64)).collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairKind {
    DonorInternal,
    AcceptorInternal,
    DonorToAcceptor,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairWitness {
    pub kind: PairKind,
    pub donor: LightconeClass,
    pub acceptor: LightconeClass,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sufficiency {
    pub passed: bool,
    pub threshold: f64,
    /// Lowest coefficient among the failing pairs, if any fail.
    pub witness: Option<PairWitness>,
    /// Lowest coefficient over every checked pair; `None` when nothing was checked.
    pub margin: Option<f64>,
}

fn class_set(g: &Graph, map: &TransferMap) -> Result<Vec<usize>> {
    lightcone::histogram(g, 1)?
        .classes()
        .map(|c| map.index_of(c).ok_or_else(|| Error::Coverage(c.to_string())))
        .collect()
}

/// Whether parameters are expected to transfer from `donor` to `acceptor`:
/// every ordered pair within the donor's classes, within the acceptor's
/// classes, and from donor classes to acceptor classes reaches `threshold`.
pub fn check_sufficient(donor: &Graph, acceptor: &Graph, map: &TransferMap, threshold: f64) -> Result<Sufficiency> {
    let dc = class_set(donor, map)?;
    let ac = class_set(acceptor, map)?;
    Ok(sufficiency(&dc, &ac, map, threshold))
}

fn sufficiency(dc: &[usize], ac: &[usize], map: &TransferMap, threshold: f64) -> Sufficiency {
    let groups =
        [(PairKind::DonorInternal, dc, dc), (PairKind::AcceptorInternal, ac, ac), (PairKind::DonorToAcceptor, dc, ac)];
    let mut margin: Option<f64> = None;
    let mut witness: Option<PairWitness> = None;
    for (kind, from, to) in groups {
        for &i in from {
            for &j in to {
                let value = map.matrix[i][j];
                margin = Some(margin.map_or(value, |m| m.min(value)));
                if value < threshold && witness.as_ref().is_none_or(|w| value < w.value) {
                    witness = Some(PairWitness { kind, donor: map.classes[i], acceptor: map.classes[j], value });
                }
            }
        }
    }
    Sufficiency { passed: witness.is_none(), threshold, witness, margin }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum DonorSearch {
    Found {
        index: usize,
        sufficiency: Sufficiency,
    },
    /// No candidate passed. `best` is the covered candidate with the highest
    /// margin, if any candidate was covered by the map.
    NotFound {
        best: Option<usize>,
        sufficiency: Option<Sufficiency>,
        uncovered: Vec<usize>,
    },
}

/// Smallest pool graph that passes [`check_sufficient`] against `acceptor`,
/// ordered by node count, then edge count, then pool index. Candidates with
/// classes outside the map are skipped and listed in the not-found result.
pub fn find_donor(acceptor: &Graph, pool: &[Graph], map: &TransferMap, threshold: f64) -> Result<DonorSearch> {
    if pool.is_empty() {
        return Err(Error::param("donor candidate pool is empty"));
    }
    let ac = class_set(acceptor, map)?;
    let mut order: Vec<usize> = (0..pool.len()).collect();
    order.sort_by_key(|&i| (pool[i].node_count(), pool[i].edge_count(), i));

    let mut best: Option<(usize, Sufficiency)> = None;
    let mut uncovered = Vec::new();
    for i in order {
        let dc = match class_set(&pool[i], map) {
            Ok(dc) => dc,
            Err(Error::Coverage(_)) => {
                uncovered.push(i);
                continue;
            }
            Err(e) => return Err(e),
        };
        let s = sufficiency(&dc, &ac, map, threshold);
        if s.passed {
            return Ok(DonorSearch::Found { index: i, sufficiency: s });
        }
        let m = s.margin.unwrap_or(f64::INFINITY);
        if best.as_ref().is_none_or(|(_, b)| m > b.margin.unwrap_or(f64::INFINITY)) {
            best = Some((i, s));
        }
    }
    uncovered.sort_unstable();
    let (best, sufficiency) = best.map_or((None, None), |(i, s)| (Some(i), Some(s)));
    Ok(DonorSearch::NotFound { best, sufficiency, uncovered })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MaxcutSummary {
    /// Best cut found.
    pub value: usize,
    pub optimal: bool,
    pub upper_bound: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub id: String,
    pub nodes: usize,
    pub edges: usize,
    /// Lightcone class token to edge count.
    pub subgraphs: BTreeMap<String, usize>,
    pub gamma: f64,
    pub beta: f64,
    /// Optimized energy at `(gamma, beta)`.
    pub energy: f64,
    pub maxcut: MaxcutSummary,
    /// `energy / maxcut`; a lower bound when the cut is not certified optimal.
    pub ratio: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentOptions {
    pub optimizer: OptimizerConfig,
    /// Branch-and-bound time limit per graph in seconds; `None` runs to completion.
    pub maxcut_budget_secs: Option<f64>,
    pub donor_id: String,
    pub acceptor_id: String,
}

impl Default for ExperimentOptions {
    fn default() -> Self {
        ExperimentOptions {
            optimizer: OptimizerConfig::default(),
            maxcut_budget_secs: None,
            donor_id: "donor".into(),
            acceptor_id: "acceptor".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub donor: GraphSummary,
    pub acceptor: GraphSummary,
    pub donor_theta: ParamPoint,
    pub transferred_energy: f64,
    pub acceptor_optimized_energy: f64,
    pub acceptor_maxcut: MaxcutSummary,
    pub transferred_ratio: Option<f64>,
    pub optimized_ratio: Option<f64>,
    /// `100 (transferred_ratio - optimized_ratio) / optimized_ratio`, equal to
    /// the relative energy change since both ratios share a denominator.
    pub ratio_delta_percent: f64,
    /// Set when the acceptor cut was not certified, so ratios use its upper bound.
    pub ratios_are_lower_bounds: bool,
}

fn summarize(id: &str, g: &Graph, opt: &OptimResult, budget: Option<Duration>) -> Result<GraphSummary> {
    let hist = lightcone::histogram(g, 1)?;
    let cut = maxcut::branch_and_bound(g, budget);
    let maxcut = MaxcutSummary { value: cut.solution.value, optimal: cut.optimal, upper_bound: cut.upper_bound };
    Ok(GraphSummary {
        id: id.to_string(),
        nodes: g.node_count(),
        edges: g.edge_count(),
        subgraphs: hist.counts.iter().map(|(c, &k)| (c.to_string(), k)).collect(),
        gamma: opt.best.gamma[0],
        beta: opt.best.beta[0],
        energy: opt.best_value,
        ratio: cut_ratio(opt.best_value, &maxcut),
        maxcut,
    })
}

fn cut_ratio(energy: f64, cut: &MaxcutSummary) -> Option<f64> {
    (cut.upper_bound > 0).then(|| energy / cut.upper_bound as f64)
}

/// Optimize `donor`, evaluate its parameters on `acceptor`, and compare with
/// optimizing `acceptor` directly, both as energies and approximation ratios.
pub fn run_experiment(donor: &Graph, acceptor: &Graph, opts: &ExperimentOptions) -> Result<ExperimentReport> {
    opts.optimizer.validate()?;
    if acceptor.edge_count() == 0 {
        return Err(Error::DegenerateAcceptor(format!("{} has no edges", opts.acceptor_id)));
    }
    let budget = match opts.maxcut_budget_secs {
        Some(s) if !(s >= 0.0) || !s.is_finite() => {
            return Err(Error::param("maxcut budget must be a non-negative number of seconds"))
        }
        Some(s) => Some(Duration::from_secs_f64(s)),
        None => None,
    };
    let d_opt = optimize_graph(donor, &opts.optimizer)?;
    let a_opt = optimize_graph(acceptor, &opts.optimizer)?;
    let transferred_energy = qaoa::energy(acceptor, &d_opt.best, Backend::Fast)?.energy;
    let acceptor_optimized_energy = a_opt.best_value;

    let donor_summary = summarize(&opts.donor_id, donor, &d_opt, budget)?;
    let acceptor_summary = summarize(&opts.acceptor_id, acceptor, &a_opt, budget)?;
    let cut = acceptor_summary.maxcut.clone();
    Ok(ExperimentReport {
        donor_theta: d_opt.best.clone(),
        transferred_energy,
        acceptor_optimized_energy,
        transferred_ratio: cut_ratio(transferred_energy, &cut),
        optimized_ratio: cut_ratio(acceptor_optimized_energy, &cut),
        ratio_delta_percent: 100.0 * (transferred_energy - acceptor_optimized_energy) / acceptor_optimized_energy,
        ratios_are_lower_bounds: !cut.optimal,
        acceptor_maxcut: cut,
        donor: donor_summary,
        acceptor: acceptor_summary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{random_regular, Seed};
    use crate::lightcone::{enumerate_general, enumerate_regular, realize};
    use crate::qaoa::edge_expectation_sv;

    fn class(d1: usize, d2: usize, t: usize) -> LightconeClass {
        LightconeClass::new(d1, d2, t).unwrap()
    }

    fn regular_map() -> TransferMap {
        build_map(&enumerate_regular(8), &OptimizerConfig::default()).unwrap()
    }

    #[test]
    fn contribution_matches_statevector() {
        let th = ParamPoint::single(0.7, 0.2);
        for c in enumerate_general(4) {
            let sv = edge_expectation_sv(&realize(c).unwrap(), &th).unwrap().contribution;
            assert!((class_contribution(c, &th) - sv).abs() < 1e-12, "{c}");
        }
    }

    #[test]
    fn coefficient_is_mean_over_donor_optima() {
        let cfg = OptimizerConfig::with_seed(Seed(5));
        let (a, b) = (class(3, 3, 0), class(4, 4, 1));
        let tc = coefficient(a, b, &cfg).unwrap();
        assert_eq!(tc.donor_optima, optimize_class(a, &cfg).unwrap().optima());
        assert_eq!(tc.acceptor_max, optimize_class(b, &cfg).unwrap().best_value);
        let mean = tc.donor_optima.iter().map(|t| class_contribution(b, t)).sum::<f64>() / 20.0;
        assert!((tc.value - mean / tc.acceptor_max).abs() < 1e-15);
        assert_eq!(tc, coefficient(a, b, &cfg).unwrap());
    }

    #[test]
    fn map_cells_equal_coefficients() {
        let cfg = OptimizerConfig::with_seed(Seed(2));
        let classes = [class(2, 2, 0), class(3, 3, 1), class(1, 4, 0)];
        let map = build_map(&classes, &cfg).unwrap();
        for &a in &classes {
            for &b in &classes {
                assert_eq!(map.get(a, b).unwrap(), coefficient(a, b, &cfg).unwrap().value);
            }
        }
    }

    #[test]
    fn regular_map_properties() {
        let map = regular_map();
        assert_eq!(map.classes.len(), 35);
        let n = map.classes.len();
        let mut asymmetric = false;
        for i in 0..n {
            let c = map.classes[i];
            assert!(map.matrix[i][i] <= 1.0 + 1e-12, "{c}");
            if c.d1 <= 4 {
                assert!(map.matrix[i][i] >= 0.999, "{c} self-transfer {}", map.matrix[i][i]);
            }
            for j in 0..n {
                assert!(map.matrix[i][j] <= 1.0 + 1e-9);
                asymmetric |= (map.matrix[i][j] - map.matrix[j][i]).abs() > 0.05;
            }
        }
        assert!(asymmetric);
        let s = parity_summary(&map);
        assert!(s.odd_odd.unwrap() > s.odd_even.unwrap());
        assert!(s.even_even.unwrap() > s.even_odd.unwrap());
        let hi = map.get(class(3, 3, 0), class(5, 5, 0)).unwrap();
        let lo = map.get(class(3, 3, 0), class(4, 4, 0)).unwrap();
        assert!(hi > 0.9 && lo < hi, "{hi} {lo}");
    }

    #[test]
    fn half_value_ridge_is_a_local_maximum() {
        // On gamma = pi/2 every cos power vanishes, leaving exactly 1/2. For
        // odd degree the ridge is a local maximum in gamma where sin(4 beta) < 0.
        for c in [class(5, 5, 0), class(5, 5, 3), class(7, 7, 2)] {
            for k in 0..16 {
                let beta = k as f64 * 0.2;
                let v = class_contribution(c, &ParamPoint::single(std::f64::consts::FRAC_PI_2, beta));
                assert!((v - 0.5).abs() < 1e-15, "{c} {beta}");
            }
            let beta: f64 = 1.0;
            assert!((4.0 * beta).sin() < 0.0);
            for d in [-0.05, -0.01, 0.01, 0.05] {
                let v = class_contribution(c, &ParamPoint::single(std::f64::consts::FRAC_PI_2 + d, beta));
                assert!(v <= 0.5 + 1e-12, "{c} {d} {v}");
            }
        }
    }

    #[test]
    fn parity_blocks_by_hand() {
        let classes = vec![class(1, 1, 0), class(2, 2, 0), class(1, 2, 0)];
        let matrix = vec![vec![1.0, 0.2, 9.0], vec![0.4, 0.8, 9.0], vec![9.0, 9.0, 9.0]];
        let map = TransferMap { classes, matrix, class_max: vec![1.0; 3], config: OptimizerConfig::default() };
        let s = parity_summary(&map);
        assert_eq!(s.odd_odd, Some(1.0));
        assert_eq!(s.odd_even, Some(0.2));
        assert_eq!(s.even_odd, Some(0.4));
        assert_eq!(s.even_even, Some(0.8));
        assert_eq!(s.same_degree, BTreeMap::from([(1, 1.0), (2, 0.8)]));
    }

    #[test]
    fn sufficiency_examples() {
        let map = regular_map();
        let g3 = random_regular(12, 3, Seed(1)).unwrap();
        let g4 = random_regular(16, 4, Seed(1)).unwrap();
        assert!(check_sufficient(&g3, &g3, &map, 0.9).unwrap().passed);
        let s = check_sufficient(&random_regular(6, 3, Seed(2)).unwrap(), &g4, &map, 0.9).unwrap();
        assert!(!s.passed);
        let w = s.witness.unwrap();
        assert_eq!((w.donor.d1 % 2, w.acceptor.d1 % 2), (1, 0));
        assert_eq!(w.kind, PairKind::DonorToAcceptor);
        let c = Graph::cycle(7).unwrap();
        assert!(check_sufficient(&c, &Graph::cycle(9).unwrap(), &map, 0.99).unwrap().passed);
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(matches!(check_sufficient(&star, &c, &map, 0.9), Err(Error::Coverage(_))));
    }

    #[test]
    fn donor_search() {
        let map = regular_map();
        let acceptor = random_regular(20, 3, Seed(4)).unwrap();
        let pool =
            vec![random_regular(10, 3, Seed(9)).unwrap(), acceptor.clone(), random_regular(8, 4, Seed(1)).unwrap()];
        match find_donor(&acceptor, &pool, &map, 0.9).unwrap() {
            DonorSearch::Found { index, .. } => assert_eq!(index, 0),
            other => panic!("{other:?}"),
        }
        let even = vec![random_regular(8, 4, Seed(1)).unwrap(), Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap()];
        match find_donor(&acceptor, &even, &map, 0.9).unwrap() {
            DonorSearch::NotFound { best, uncovered, .. } => {
                assert_eq!(best, Some(0));
                assert_eq!(uncovered, vec![1]);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            find_donor(&Graph::empty(5), &even[..1], &map, 0.9).unwrap(),
            DonorSearch::Found { index: 0, .. }
        ));
        assert!(find_donor(&acceptor, &[], &map, 0.9).is_err());
    }

    #[test]
    fn self_experiment_has_zero_delta() {
        let g = random_regular(10, 3, Seed(3)).unwrap();
        let r = run_experiment(&g, &g, &ExperimentOptions::default()).unwrap();
        assert!(r.ratio_delta_percent.abs() < 0.1);
        assert_eq!(r.transferred_energy, r.acceptor_optimized_energy);
        assert!(r.acceptor_maxcut.optimal && !r.ratios_are_lower_bounds);
        assert_eq!(r.acceptor_maxcut.value, maxcut::brute_force(&g).unwrap().value);
        assert_eq!(r.acceptor.subgraphs.values().sum::<usize>(), 15);
    }

    #[test]
    fn unfinished_maxcut_flags_lower_bounds() {
        let g = random_regular(24, 3, Seed(8)).unwrap();
        let opts = ExperimentOptions { maxcut_budget_secs: Some(0.0), ..Default::default() };
        let r = run_experiment(&random_regular(6, 3, Seed(1)).unwrap(), &g, &opts).unwrap();
        if !r.acceptor_maxcut.optimal {
            assert!(r.ratios_are_lower_bounds);
            let ub = r.acceptor_maxcut.upper_bound as f64;
            assert_eq!(r.optimized_ratio, Some(r.acceptor_optimized_energy / ub));
        }
        assert!(r.transferred_ratio.unwrap() <= r.optimized_ratio.unwrap() + 0.005);
    }

    #[test]
    fn csv_layout() {
        let map = build_map(&[class(1, 1, 0), class(2, 2, 0)], &OptimizerConfig::default()).unwrap();
        let csv = map.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "donor\\acceptor,1-1-0,2-2-0");
        assert!(lines[1].starts_with("1-1-0,"));
        assert_eq!(lines.len(), 3);
    }
}
