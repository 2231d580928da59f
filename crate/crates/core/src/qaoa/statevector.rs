//! Dense statevector simulation of the QAOA circuit on a (small) graph.
//!
//! Qubit `q` is bit `q` of the basis index. The cost layer applies
//! `exp(-i gamma C)` with `C(z)` the number of cut edges, the mixer applies
//! `exp(-i beta X)` to every qubit.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::lightcone::Lightcone;
use crate::qaoa::{EdgeExpectation, ParamPoint};

/// Largest qubit count the dense backend will allocate for.
pub const MAX_QUBITS: usize = 24;

/// `C(z)` for every basis state.
fn cut_table(g: &Graph) -> Vec<u32> {
    let n = g.node_count();
    let mut cut = vec![0u32; 1 << n];
    for &(u, v) in g.edges() {
        for (z, c) in cut.iter_mut().enumerate() {
            *c += (((z >> u) ^ (z >> v)) & 1) as u32;
        }
    }
    cut
}

fn apply_mixer(state: &mut [Complex64], n: usize, beta: f64) {
    let (s, c) = beta.sin_cos();
    let mix = Complex64::new(0.0, -s);
    for q in 0..n {
        let bit = 1usize << q;
        for i in 0..state.len() {
            if i & bit == 0 {
                let (a0, a1) = (state[i], state[i | bit]);
                state[i] = a0 * c + a1 * mix;
                state[i | bit] = a0 * mix + a1 * c;
            }
        }
    }
}

/// Final QAOA state on all nodes of `g`.
pub fn qaoa_state(g: &Graph, theta: &ParamPoint) -> Result<Vec<Complex64>> {
    theta.validate()?;
    let n = g.node_count();
    if n > MAX_QUBITS {
        return Err(Error::Capacity(format!("{n} qubits exceeds the statevector limit of {MAX_QUBITS}")));
    }
    let dim = 1usize << n;
    let amp = Complex64::new((dim as f64).sqrt().recip(), 0.0);
    let mut state = vec![amp; dim];
    let cut = cut_table(g);
    let m = g.edge_count();

    for (&gamma, &beta) in theta.gamma.iter().zip(&theta.beta) {
        let phases: Vec<Complex64> = (0..=m).map(|k| Complex64::from_polar(1.0, -gamma * k as f64)).collect();
        for (a, &k) in state.iter_mut().zip(&cut) {
            *a *= phases[k as usize];
        }
        apply_mixer(&mut state, n, beta);
    }
    Ok(state)
}

pub fn zz_expectation(state: &[Complex64], j: usize, k: usize) -> f64 {
    state
        .iter()
        .enumerate()
        .map(|(z, a)| {
            let sign = if ((z >> j) ^ (z >> k)) & 1 == 0 { 1.0 } else { -1.0 };
            sign * a.norm_sqr()
        })
        .sum()
}

/// `<Z_j Z_k>` at the central edge of a lightcone.
pub fn edge_expectation_sv(lc: &Lightcone, theta: &ParamPoint) -> Result<EdgeExpectation> {
    let state = qaoa_state(&lc.subgraph, theta)?;
    let (j, k) = lc.central_edge;
    Ok(EdgeExpectation::from_zz(zz_expectation(&state, j, k)))
}

/// `<C>` from one statevector over the whole graph, no lightcone decomposition.
pub fn full_graph_energy(g: &Graph, theta: &ParamPoint) -> Result<f64> {
    let state = qaoa_state(g, theta)?;
    let cut = cut_table(g);
    Ok(state.iter().zip(&cut).map(|(a, &c)| a.norm_sqr() * c as f64).sum())
}
