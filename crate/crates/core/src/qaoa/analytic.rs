//! Closed-form p=1 edge expectation of a lightcone class.
//!
//! With `a = d1 - 1`, `b = d2 - 1` private-plus-shared neighbour counts and `t`
//! shared neighbours:
//!
//! ```text
//! <Z_j Z_k> = -1/2 sin(4b) sin(g) (cos^a g + cos^b g)
//!             + 1/2 sin^2(2b) cos^(a+b-2t) g (1 - cos^t (2g))
//! ```
//!
//! (`g` = gamma, `b` = beta). The statevector simulation is the reference; this
//! form and its derivative are what the optimizer runs on.

use crate::error::{Error, Result};
use crate::lightcone::LightconeClass;
use crate::qaoa::{EdgeExpectation, ParamPoint};

/// `x^k` plus `d/dx x^k` with `0 * x^-1` taken as zero.
fn pow_and_deriv(x: f64, k: usize) -> (f64, f64) {
    match k {
        0 => (1.0, 0.0),
        _ => (x.powi(k as i32), k as f64 * x.powi(k as i32 - 1)),
    }
}

struct Terms {
    /// `sin g (cos^a g + cos^b g)` and its gamma derivative.
    f: (f64, f64),
    /// `cos^(a+b-2t) g (1 - cos^t 2g)` and its gamma derivative.
    h: (f64, f64),
}

fn terms(c: LightconeClass, gamma: f64) -> Terms {
    let (a, b, t) = (c.d1 - 1, c.d2 - 1, c.t);
    let (s, co) = gamma.sin_cos();
    let (pa, dpa) = pow_and_deriv(co, a);
    let (pb, dpb) = pow_and_deriv(co, b);
    let f = s * (pa + pb);
    let df = co * (pa + pb) - s * s * (dpa + dpb);

    let (pk, dpk) = pow_and_deriv(co, a + b - 2 * t);
    let (q, dq) = ((2.0 * gamma).cos(), -2.0 * (2.0 * gamma).sin());
    let (pt, dpt) = pow_and_deriv(q, t);
    let h = pk * (1.0 - pt);
    let dh = -s * dpk * (1.0 - pt) - pk * dpt * dq;
    Terms { f: (f, df), h: (h, dh) }
}

pub fn zz_closed_form(c: LightconeClass, gamma: f64, beta: f64) -> f64 {
    let tm = terms(c, gamma);
    let s2 = (2.0 * beta).sin();
    -0.5 * (4.0 * beta).sin() * tm.f.0 + 0.5 * s2 * s2 * tm.h.0
}

/// Gradient of the edge contribution `(1 - e) / 2` with respect to `(gamma, beta)`.
pub fn contribution_gradient(c: LightconeClass, gamma: f64, beta: f64) -> (f64, f64) {
    let tm = terms(c, gamma);
    let (s4, c4) = (4.0 * beta).sin_cos();
    let s2 = (2.0 * beta).sin();
    let de_dgamma = -0.5 * s4 * tm.f.1 + 0.5 * s2 * s2 * tm.h.1;
    let de_dbeta = -2.0 * c4 * tm.f.0 + s4 * tm.h.0;
    (-0.5 * de_dgamma, -0.5 * de_dbeta)
}

pub fn edge_expectation_fast(c: LightconeClass, theta: &ParamPoint) -> Result<EdgeExpectation> {
    theta.validate()?;
    if theta.depth() != 1 {
        return Err(Error::UnsupportedDepth(theta.depth()));
    }
    Ok(EdgeExpectation::from_zz(zz_closed_form(c, theta.gamma[0], theta.beta[0])))
}
