//! RMSProp gradient ascent over `(gamma, beta)` with seeded multistart.

use std::f64::consts::PI;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::{Graph, Seed};
use crate::lightcone::{self, ClassHistogram, LightconeClass};
use crate::qaoa::{self, contribution_gradient, zz_closed_form, Backend, ParamPoint};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct OptimizerConfig {
    pub steps: usize,
    pub restarts: usize,
    pub learning_rate: f64,
    pub rms_decay: f64,
    pub rms_epsilon: f64,
    /// Half-width of central finite differences.
    pub grad_step: f64,
    pub seed: Seed,
    /// Initial gamma drawn uniformly from `[lo, hi)`.
    pub gamma_range: (f64, f64),
    pub beta_range: (f64, f64),
    pub schedule: LrSchedule,
}

/// Step-size multiplier over the `steps` updates of one ascent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum LrSchedule {
    /// `learning_rate` at every step.
    Constant,
    /// `learning_rate * (1 + cos(pi t / steps)) / 2`, annealed to zero at the last step.
    #[default]
    Cosine,
}

impl LrSchedule {
    pub fn factor(self, step: usize, steps: usize) -> f64 {
        match self {
            LrSchedule::Constant => 1.0,
            LrSchedule::Cosine => 0.5 * (1.0 + (PI * step as f64 / steps as f64).cos()),
        }
    }
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        OptimizerConfig {
            steps: 200,
            restarts: 20,
            learning_rate: 0.05,
            rms_decay: 0.9,
            rms_epsilon: 1e-8,
            grad_step: 1e-6,
            seed: Seed(0),
            gamma_range: (0.0, 2.0 * PI),
            beta_range: (0.0, PI),
            schedule: LrSchedule::Cosine,
        }
    }
}

impl OptimizerConfig {
    pub fn with_seed(seed: Seed) -> Self {
        OptimizerConfig { seed, ..Default::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.restarts == 0 {
            return Err(Error::param("restarts must be at least 1"));
        }
        if !(self.learning_rate > 0.0) || !(self.grad_step > 0.0) {
            return Err(Error::param("learning_rate and grad_step must be positive"));
        }
        if !(0.0..1.0).contains(&self.rms_decay) || !(self.rms_epsilon >= 0.0) {
            return Err(Error::param("rms_decay must lie in [0, 1) and rms_epsilon be non-negative"));
        }
        for (name, (lo, hi)) in [("gamma_range", self.gamma_range), ("beta_range", self.beta_range)] {
            if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
                return Err(Error::param(format!("{name} must be a finite interval lo < hi")));
            }
        }
        Ok(())
    }
}

/// Scalar function of a parameter point to be maximised.
pub trait Objective: Sync {
    fn depth(&self) -> usize {
        1
    }

    fn value(&self, theta: &ParamPoint) -> Result<f64>;

    /// Gradient in `[gamma.., beta..]` order. Defaults to central differences.
    fn gradient(&self, theta: &ParamPoint, h: f64) -> Result<Vec<f64>> {
        central_difference(self, theta, h)
    }
}

impl<F> Objective for F
where
    F: Fn(&ParamPoint) -> f64 + Sync,
{
    fn value(&self, theta: &ParamPoint) -> Result<f64> {
        Ok(self(theta))
    }
}

pub fn central_difference<O: Objective + ?Sized>(obj: &O, theta: &ParamPoint, h: f64) -> Result<Vec<f64>> {
    let x = theta.to_vec();
    let mut grad = Vec::with_capacity(x.len());
    for i in 0..x.len() {
        let mut up = x.clone();
        let mut down = x.clone();
        up[i] += h;
        down[i] -= h;
        let f_up = obj.value(&ParamPoint::from_slice(&up))?;
        let f_down = obj.value(&ParamPoint::from_slice(&down))?;
        grad.push((f_up - f_down) / (2.0 * h));
    }
    Ok(grad)
}

/// Objective gradient, rejecting non-finite results.
pub fn gradient<O: Objective + ?Sized>(obj: &O, theta: &ParamPoint, h: f64) -> Result<Vec<f64>> {
    let g = obj.gradient(theta, h)?;
    if g.iter().all(|v| v.is_finite()) {
        Ok(g)
    } else {
        Err(Error::Numerical(format!("non-finite gradient {g:?}")))
    }
}

fn finite_value<O: Objective + ?Sized>(obj: &O, theta: &ParamPoint) -> Result<f64> {
    let v = obj.value(theta)?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Numerical(format!("objective is {v} at {theta:?}")))
    }
}

/// Central-edge contribution of a class's realized lightcone (closed form).
#[derive(Debug, Clone, Copy)]
pub struct ClassObjective(pub LightconeClass);

impl Objective for ClassObjective {
    fn value(&self, theta: &ParamPoint) -> Result<f64> {
        Ok(0.5 * (1.0 - zz_closed_form(self.0, theta.gamma[0], theta.beta[0])))
    }

    fn gradient(&self, theta: &ParamPoint, _h: f64) -> Result<Vec<f64>> {
        let (dg, db) = contribution_gradient(self.0, theta.gamma[0], theta.beta[0]);
        Ok(vec![dg, db])
    }
}

/// Whole-graph energy `<C>`.
#[derive(Debug, Clone)]
pub struct GraphObjective {
    graph: Graph,
    backend: Backend,
    depth: usize,
    histogram: Option<ClassHistogram>,
}

impl GraphObjective {
    pub fn new(graph: &Graph, backend: Backend, depth: usize) -> Result<Self> {
        if depth == 0 {
            return Err(Error::param("depth must be at least 1"));
        }
        if backend == Backend::Fast && depth != 1 {
            return Err(Error::UnsupportedDepth(depth));
        }
        let histogram = match backend {
            Backend::Fast => Some(lightcone::histogram(graph, 1)?),
            _ => None,
        };
        Ok(GraphObjective { graph: graph.clone(), backend, depth, histogram })
    }
}

impl Objective for GraphObjective {
    fn depth(&self) -> usize {
        self.depth
    }

    fn value(&self, theta: &ParamPoint) -> Result<f64> {
        match &self.histogram {
            // Energy is a count-weighted sum of class contributions.
            Some(h) => Ok(h
                .counts
                .iter()
                .map(|(&c, &k)| k as f64 * 0.5 * (1.0 - zz_closed_form(c, theta.gamma[0], theta.beta[0])))
                .sum()),
            None => Ok(qaoa::energy(&self.graph, theta, self.backend)?.energy),
        }
    }

    fn gradient(&self, theta: &ParamPoint, h: f64) -> Result<Vec<f64>> {
        match &self.histogram {
            Some(hist) => {
                let mut g = vec![0.0, 0.0];
                for (&c, &k) in &hist.counts {
                    let (dg, db) = contribution_gradient(c, theta.gamma[0], theta.beta[0]);
                    g[0] += k as f64 * dg;
                    g[1] += k as f64 * db;
                }
                Ok(g)
            }
            None => central_difference(self, theta, h),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RestartOutcome {
    pub start: ParamPoint,
    pub initial_value: f64,
    pub theta: ParamPoint,
    pub value: f64,
    /// Reason the restart was dropped, if it was.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failed: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OptimResult {
    pub best: ParamPoint,
    pub best_value: f64,
    #[serde(rename = "restarts")]
    pub all_restarts: Vec<RestartOutcome>,
    /// Objective value after each step of the best restart, starting point first.
    pub trace: Vec<f64>,
}

impl OptimResult {
    pub fn best_restart(&self) -> Option<&RestartOutcome> {
        self.all_restarts.iter().filter(|r| r.failed.is_none()).find(|r| r.value == self.best_value)
    }

    /// Final points of the restarts that did not fail.
    pub fn optima(&self) -> Vec<ParamPoint> {
        self.all_restarts.iter().filter(|r| r.failed.is_none()).map(|r| r.theta.clone()).collect()
    }
}

/// Uniform draw from the configured box for restart `index`.
pub fn initial_point(cfg: &OptimizerConfig, depth: usize, index: usize) -> ParamPoint {
    let mut rng = cfg.seed.stream(index as u64);
    let gamma = (0..depth).map(|_| rng.gen_range(cfg.gamma_range.0..cfg.gamma_range.1)).collect();
    let beta = (0..depth).map(|_| rng.gen_range(cfg.beta_range.0..cfg.beta_range.1)).collect();
    ParamPoint { gamma, beta }
}

/// One RMSProp ascent of `cfg.steps` updates from `start`. Returns the outcome
/// and the per-step value trace. A non-finite value or gradient marks the
/// restart failed; any other error is returned.
pub fn ascend<O: Objective + ?Sized>(
    obj: &O,
    start: &ParamPoint,
    cfg: &OptimizerConfig,
) -> Result<(RestartOutcome, Vec<f64>)> {
    let run = || -> Result<(ParamPoint, f64, f64, Vec<f64>)> {
        let initial = finite_value(obj, start)?;
        let mut x = start.to_vec();
        let mut v = vec![0.0; x.len()];
        let mut trace = Vec::with_capacity(cfg.steps + 1);
        trace.push(initial);
        for step in 0..cfg.steps {
            let lr = cfg.learning_rate * cfg.schedule.factor(step, cfg.steps);
            let g = gradient(obj, &ParamPoint::from_slice(&x), cfg.grad_step)?;
            for ((xi, vi), gi) in x.iter_mut().zip(&mut v).zip(&g) {
                *vi = cfg.rms_decay * *vi + (1.0 - cfg.rms_decay) * gi * gi;
                *xi += lr * gi / (*vi + cfg.rms_epsilon).sqrt();
            }
            trace.push(finite_value(obj, &ParamPoint::from_slice(&x))?);
        }
        let last = *trace.last().expect("trace holds the initial value");
        Ok((ParamPoint::from_slice(&x), initial, last, trace))
    };
    match run() {
        Ok((theta, initial_value, value, trace)) => {
            Ok((RestartOutcome { start: start.clone(), initial_value, theta, value, failed: None }, trace))
        }
        Err(Error::Numerical(reason)) => Ok((
            RestartOutcome {
                start: start.clone(),
                initial_value: f64::NAN,
                theta: start.clone(),
                value: f64::NAN,
                failed: Some(reason),
            },
            Vec::new(),
        )),
        Err(e) => Err(e),
    }
}

/// Multistart RMSProp. Restart `r` starts from [`initial_point`]`(cfg, depth, r)`,
/// so results do not depend on scheduling.
pub fn rmsprop_maximize<O: Objective + ?Sized>(obj: &O, cfg: &OptimizerConfig) -> Result<OptimResult> {
    cfg.validate()?;
    let depth = obj.depth();
    let runs: Vec<(RestartOutcome, Vec<f64>)> = (0..cfg.restarts)
        .into_par_iter()
        .map(|r| ascend(obj, &initial_point(cfg, depth, r), cfg))
        .collect::<Result<_>>()?;

    let mut best: Option<usize> = None;
    for (i, (r, _)) in runs.iter().enumerate() {
        if r.failed.is_none() && best.is_none_or(|b| r.value > runs[b].0.value) {
            best = Some(i);
        }
    }
    let Some(b) = best else {
        let reason = runs.first().and_then(|r| r.0.failed.clone()).unwrap_or_default();
        return Err(Error::Numerical(format!("every restart failed: {reason}")));
    };
    let best_theta = runs[b].0.theta.clone();
    let best_value = runs[b].0.value;
    let trace = runs[b].1.clone();
    Ok(OptimResult { best: best_theta, best_value, all_restarts: runs.into_iter().map(|(r, _)| r).collect(), trace })
}

pub fn optimize_class(c: LightconeClass, cfg: &OptimizerConfig) -> Result<OptimResult> {
    rmsprop_maximize(&ClassObjective(c), cfg)
}

/// Maximise the p=1 energy of `g` with the closed-form backend.
pub fn optimize_graph(g: &Graph, cfg: &OptimizerConfig) -> Result<OptimResult> {
    optimize_graph_with(g, cfg, Backend::Fast, 1)
}

pub fn optimize_graph_with(g: &Graph, cfg: &OptimizerConfig, backend: Backend, depth: usize) -> Result<OptimResult> {
    rmsprop_maximize(&GraphObjective::new(g, backend, depth)?, cfg)
}
