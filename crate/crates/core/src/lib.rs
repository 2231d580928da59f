//! QAOA MaxCut energy evaluation at depth p through lightcone decomposition,
//! multistart RMSProp parameter optimization, exact MaxCut, and the
//! donor/acceptor parameter transferability analysis built on top of them.
//!
//! The crate is organised bottom-up:
//!
//! - [`graphs`]: simple undirected graphs, seeded random generators, edge-list I/O.
//! - [`lightcone`]: per-edge lightcone subgraphs and the `(d1, d2, t)` classes of p=1 lightcones.
//! - [`qaoa`]: statevector and closed-form edge expectations, whole-graph energies, landscapes.
//! - [`tensornet`]: tensor-network backend with bucket elimination and randomized greedy ordering.
//! - [`optimize`]: RMSProp ascent with seeded multistart.
//! - [`maxcut`]: exhaustive and branch-and-bound exact MaxCut.
//! - [`transfer`]: transferability coefficients, maps, sufficiency checks and transfer experiments.
//! - [`cli`]: the `qaoa-transfer` command-line front end.

pub mod cli;
pub mod error;
pub mod graphs;
pub mod lightcone;
pub mod maxcut;
pub mod numfmt;
pub mod optimize;
pub mod qaoa;
pub mod tensornet;
pub mod transfer;

pub use error::{Error, Result};
pub use graphs::{Graph, Seed};
pub use lightcone::{Lightcone, LightconeClass};
pub use qaoa::{Backend, EdgeExpectation, EnergyReport, ParamPoint};
