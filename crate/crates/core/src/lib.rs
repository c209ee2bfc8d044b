//! Rigorous effective-stability bounds for Hamiltonian systems near elliptic
//! equilibria.
//!
//! The crate builds truncated Birkhoff normal forms with interval-arithmetic
//! coefficients, iterates norm majorants past the explicitly computed orders,
//! and turns the resulting remainder bounds into certified lower bounds on the
//! time orbits need to escape a ball around the equilibrium.
//!
//! Layout:
//!
//! - [`rigor`] — directed-rounded binary64 kernel, intervals, log-domain bounds;
//! - [`polyring`] — sparse homogeneous polynomials, Poisson brackets, Lie series;
//! - [`normalform`] — the normalization engine over a [`normalform::HamiltonianState`];
//! - [`majorant`] — iterated norm estimates, remainder/action-rate/escape-time bounds;
//! - [`models`] — Hénon–Heiles and circular planar RTBP model ingestion;
//! - [`checkpoint`] — bit-exact state serialization.

pub mod checkpoint;
pub mod majorant;
pub mod models;
pub mod normalform;
pub mod polyring;
pub mod rigor;
