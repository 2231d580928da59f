//! QAOA MaxCut objective: edge expectations, whole-graph energies and landscapes.
//!
//! Gate convention: `U_C(gamma) = exp(-i gamma C)` with `C = sum_jk (1 - Z_j Z_k) / 2`
//! and `U_B(beta) = exp(-i beta sum_j X_j)`, starting from `|+>^n`. Under this
//! convention the energy has period `2 pi` in gamma and `pi` in beta.

pub mod analytic;
pub mod statevector;

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::{Graph, Seed};
use crate::lightcone::{self, Lightcone, LightconeClass};
use crate::numfmt::sig;

pub use analytic::{contribution_gradient, edge_expectation_fast, zz_closed_form};
pub use statevector::{edge_expectation_sv, full_graph_energy};

/// One `(gamma, beta)` pair per QAOA layer, radians.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParamPoint {
    pub gamma: Vec<f64>,
    pub beta: Vec<f64>,
}

impl ParamPoint {
    pub fn new(gamma: Vec<f64>, beta: Vec<f64>) -> Result<Self> {
        let p = ParamPoint { gamma, beta };
        p.validate()?;
        Ok(p)
    }

    /// Depth-1 point.
    pub fn single(gamma: f64, beta: f64) -> Self {
        ParamPoint { gamma: vec![gamma], beta: vec![beta] }
    }

    pub fn depth(&self) -> usize {
        self.gamma.len()
    }

    pub fn validate(&self) -> Result<()> {
        if self.gamma.len() != self.beta.len() {
            return Err(Error::param(format!(
                "gamma has {} angles but beta has {}",
                self.gamma.len(),
                self.beta.len()
            )));
        }
        if self.gamma.is_empty() {
            return Err(Error::param("parameter point needs at least one layer"));
        }
        if !self.gamma.iter().chain(&self.beta).all(|x| x.is_finite()) {
            return Err(Error::param("parameter angles must be finite"));
        }
        Ok(())
    }

    /// Flattened `[gamma_1..gamma_p, beta_1..beta_p]`.
    pub fn to_vec(&self) -> Vec<f64> {
        self.gamma.iter().chain(&self.beta).copied().collect()
    }

    pub fn from_slice(x: &[f64]) -> Self {
        let p = x.len() / 2;
        ParamPoint { gamma: x[..p].to_vec(), beta: x[p..].to_vec() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EdgeExpectation {
    /// `<Z_j Z_k>`.
    pub e: f64,
    /// `(1 - e) / 2`, the edge's share of `<C>`.
    pub contribution: f64,
}

impl EdgeExpectation {
    pub fn from_zz(e: f64) -> Self {
        EdgeExpectation { e, contribution: (1.0 - e) / 2.0 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnergyReport {
    pub energy: f64,
    /// Aligned with [`Graph::edges`].
    pub edge_terms: Vec<EdgeExpectation>,
    pub m: usize,
}

/// How each edge expectation is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    /// Closed form per lightcone class (p = 1 only).
    #[default]
    Fast,
    /// Dense statevector on each lightcone.
    Statevector,
    /// Bucket-eliminated tensor network on each lightcone.
    #[value(name = "tensornet")]
    #[serde(rename = "tensornet")]
    TensorNetwork,
}

fn edge_on_lightcone(lc: &Lightcone, theta: &ParamPoint, backend: Backend, seed: Seed) -> Result<EdgeExpectation> {
    match backend {
        Backend::Fast => edge_expectation_fast(lightcone::classify(lc)?, theta),
        Backend::Statevector => edge_expectation_sv(lc, theta),
        Backend::TensorNetwork => crate::tensornet::edge_expectation_tn(lc, theta, seed),
    }
}

/// `<C>_p = |E|/2 - 1/2 sum_jk e_jk`, each `e_jk` evaluated on its own lightcone.
pub fn energy(g: &Graph, theta: &ParamPoint, backend: Backend) -> Result<EnergyReport> {
    theta.validate()?;
    let p = theta.depth();
    if backend == Backend::Fast && p != 1 {
        return Err(Error::UnsupportedDepth(p));
    }

    let edge_terms: Vec<EdgeExpectation> = if backend == Backend::Fast {
        let mut cache: BTreeMap<LightconeClass, EdgeExpectation> = BTreeMap::new();
        let mut terms = Vec::with_capacity(g.edge_count());
        for &e in g.edges() {
            let c = lightcone::classify(&lightcone::extract(g, e, 1)?)?;
            if let std::collections::btree_map::Entry::Vacant(slot) = cache.entry(c) {
                slot.insert(edge_expectation_fast(c, theta)?);
            }
            terms.push(cache[&c]);
        }
        terms
    } else {
        g.edges()
            .par_iter()
            .enumerate()
            .map(|(i, &(u, v))| {
                let lc = lightcone::extract(g, (u, v), p)?;
                edge_on_lightcone(&lc, theta, backend, Seed(i as u64)).map_err(|err| match err {
                    Error::Capacity(msg) => Error::Capacity(format!("edge ({u}, {v}): {msg}")),
                    other => other,
                })
            })
            .collect::<Result<_>>()?
    };

    let m = g.edge_count();
    let sum_e: f64 = edge_terms.iter().map(|t| t.e).sum();
    Ok(EnergyReport { energy: m as f64 / 2.0 - 0.5 * sum_e, edge_terms, m })
}

/// `steps` evenly spaced points over `[0, period)`.
pub fn periodic_grid(steps: usize, period: f64) -> Vec<f64> {
    (0..steps).map(|i| period * i as f64 / steps as f64).collect()
}

pub const DEFAULT_GRID_STEPS: usize = 101;

pub fn default_gamma_grid() -> Vec<f64> {
    periodic_grid(DEFAULT_GRID_STEPS, 2.0 * PI)
}

pub fn default_beta_grid() -> Vec<f64> {
    periodic_grid(DEFAULT_GRID_STEPS, PI)
}

/// Edge-contribution landscape of one class. `values[i][j]` is taken at
/// `(gamma[i], beta[j])`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Landscape {
    pub class: LightconeClass,
    pub gamma: Vec<f64>,
    pub beta: Vec<f64>,
    pub values: Vec<Vec<f64>>,
}

fn check_grid(name: &str, grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::param(format!("{name} grid is empty")));
    }
    if !grid.iter().all(|x| x.is_finite()) || grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::param(format!("{name} grid must be finite and strictly ascending")));
    }
    Ok(())
}

pub fn landscape(c: LightconeClass, gamma_grid: &[f64], beta_grid: &[f64]) -> Result<Landscape> {
    check_grid("gamma", gamma_grid)?;
    check_grid("beta", beta_grid)?;
    let values = gamma_grid
        .par_iter()
        .map(|&g| beta_grid.iter().map(|&b| 0.5 * (1.0 - zz_closed_form(c, g, b))).collect())
        .collect();
    Ok(Landscape { class: c, gamma: gamma_grid.to_vec(), beta: beta_grid.to_vec(), values })
}

impl Landscape {
    /// Grid argmax as `(i, j, value)`; first occurrence wins.
    pub fn argmax(&self) -> (usize, usize, f64) {
        let mut best = (0, 0, f64::NEG_INFINITY);
        for (i, row) in self.values.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v > best.2 {
                    best = (i, j, v);
                }
            }
        }
        best
    }

    /// First row holds the gamma grid, first column the beta grid.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("beta\\gamma");
        for g in &self.gamma {
            let _ = write!(out, ",{}", sig(*g));
        }
        out.push('\n');
        for (j, b) in self.beta.iter().enumerate() {
            out.push_str(&sig(*b));
            for row in &self.values {
                let _ = write!(out, ",{}", sig(row[j]));
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{random_bounded, random_regular};
    use crate::lightcone::enumerate_regular;

    #[test]
    fn gamma_zero_energy_is_half_edges() {
        for g in [Graph::petersen(), Graph::complete(5), random_regular(12, 3, Seed(2)).unwrap()] {
            for backend in [Backend::Fast, Backend::Statevector, Backend::TensorNetwork] {
                let r = energy(&g, &ParamPoint::single(0.0, 0.4), backend).unwrap();
                assert!((r.energy - g.edge_count() as f64 / 2.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn single_edge_optimum() {
        let r = energy(&Graph::path(2), &ParamPoint::single(PI / 2.0, PI / 8.0), Backend::Fast).unwrap();
        assert!((r.energy - 1.0).abs() < 1e-12);
    }

    #[test]
    fn report_invariants() {
        let g = random_bounded(10, 20, 5, Seed(4)).unwrap();
        let r = energy(&g, &ParamPoint::single(2.2, 0.3), Backend::Fast).unwrap();
        assert_eq!(r.m, 20);
        assert_eq!(r.edge_terms.len(), 20);
        let sum: f64 = r.edge_terms.iter().map(|t| t.e).sum();
        assert!((r.energy - (10.0 - 0.5 * sum)).abs() < 1e-12);
        assert!(r.energy >= 0.0 && r.energy <= 20.0);
        for t in &r.edge_terms {
            assert_eq!(t.contribution, (1.0 - t.e) / 2.0);
        }
    }

    #[test]
    fn fast_backend_rejects_depth_two() {
        let th = ParamPoint::new(vec![0.1, 0.2], vec![0.1, 0.2]).unwrap();
        assert_eq!(energy(&Graph::path(3), &th, Backend::Fast), Err(Error::UnsupportedDepth(2)));
        assert!(energy(&Graph::path(3), &th, Backend::Statevector).is_ok());
    }

    #[test]
    fn capacity_error_names_edge() {
        // Star with 25 leaves: the lightcone of any edge has 26 qubits.
        let g = Graph::new(26, (1..26).map(|v| (0, v))).unwrap();
        match energy(&g, &ParamPoint::single(0.1, 0.1), Backend::Statevector) {
            Err(Error::Capacity(msg)) => assert!(msg.starts_with("edge (0, 1)"), "{msg}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn periodicity() {
        let g = random_regular(14, 3, Seed(8)).unwrap();
        let base = energy(&g, &ParamPoint::single(0.9, 0.35), Backend::Fast).unwrap().energy;
        let g2 = energy(&g, &ParamPoint::single(0.9 + 2.0 * PI, 0.35), Backend::Fast).unwrap().energy;
        let b2 = energy(&g, &ParamPoint::single(0.9, 0.35 + PI), Backend::Fast).unwrap().energy;
        assert!((base - g2).abs() < 1e-12 && (base - b2).abs() < 1e-12);
    }

    #[test]
    fn lightcone_decomposition_matches_full_statevector() {
        for (n, seed) in [(6, 1), (8, 2), (10, 3)] {
            let g = random_regular(n, 3, Seed(seed)).unwrap();
            for th in [ParamPoint::single(0.7, 0.3), ParamPoint::new(vec![0.4, 0.9], vec![0.6, 0.2]).unwrap()] {
                let full = full_graph_energy(&g, &th).unwrap();
                let lc = energy(&g, &th, Backend::Statevector).unwrap().energy;
                assert!((full - lc).abs() < 1e-10, "n={n} p={} {full} {lc}", th.depth());
            }
        }
    }

    #[test]
    fn landscape_examples() {
        let c = LightconeClass::new(3, 3, 1).unwrap();
        let gammas = vec![0.0, 0.5, 1.0];
        let betas = vec![0.1, 0.2, 0.1 + PI];
        let l = landscape(c, &gammas, &betas).unwrap();
        assert!(l.values[0].iter().all(|&v| v == 0.5));
        for row in &l.values {
            assert!((row[0] - row[2]).abs() < 1e-12);
            assert!(row.iter().all(|&v| (0.0..=1.0).contains(&v)));
        }
        assert!(landscape(c, &[], &betas).is_err());
        assert!(landscape(c, &gammas, &[0.2, 0.1]).is_err());
    }

    #[test]
    fn landscape_csv_layout() {
        let c = LightconeClass::new(1, 1, 0).unwrap();
        let l = landscape(c, &[0.0, PI / 2.0], &[0.0, PI / 8.0]).unwrap();
        let csv = l.to_csv();
        let rows: Vec<&str> = csv.lines().collect();
        assert_eq!(rows[0], "beta\\gamma,0,1.57079632679");
        assert_eq!(rows[1], "0,0.5,0.5");
        assert_eq!(rows[2], "0.392699081699,0.5,1");
    }

    #[test]
    fn all_regular_landscapes_bounded() {
        for c in enumerate_regular(8) {
            let l = landscape(c, &periodic_grid(24, 2.0 * PI), &periodic_grid(12, PI)).unwrap();
            assert!(l.values.iter().flatten().all(|&v| (-1e-12..=1.0 + 1e-12).contains(&v)));
        }
    }
}
