//! Numerical laboratory for the quadratic nonlinear heat equation
//!
//! ```text
//! u_t = u_xx + u^2,   x in (-1, 1),   u(+-1) = 0,
//! ```
//!
//! evolved along piecewise-linear paths in *complex* time. The crate computes
//! the positive equilibrium and its leading eigenpair, expands the
//! one-dimensional fast unstable manifold as a Taylor graph, seeds initial
//! data on it, detects finite-time blow-up on the real axis, continues the
//! solution through spall strips past the singularity and back to the real
//! axis, and measures the monodromy (non-closure) of continuations that
//! enclose the blow-up segment.
//!
//! Modules, roughly bottom-up:
//!
//! - [`quadode`] — closed-form flow of `u' = u^2` in complex time and the
//!   invariant disk/half-line geometry used as a trapping and decay oracle.
//! - [`spatial`] — interior grid on (-1,1), sine-basis transforms, spectral
//!   Laplacian, dealiased quadratic nonlinearity, norms.
//! - [`equilibrium`] — shooting + Newton for the positive equilibrium and
//!   eigenpairs of the linearization, Rayleigh-quotient diagnostics.
//! - [`manifold`] — Taylor expansion of the unstable-manifold graph, seeding,
//!   the reduced scalar flow and residue winding times.
//! - [`continuation`] — exponential-integrator evolution along complex time
//!   paths with adaptive stepping and blow-up detection.
//! - [`experiments`] — end-to-end scenarios with pass/fail verdicts.
//! - [`cli`] — pipeline orchestration and artifact persistence behind the
//!   `spallstrip` binary.
//!
//! Every runnable capability also ships as an example under `examples/`;
//! start with `cargo run --release --example equilibrium_and_spectrum`.

pub mod cli;
pub mod continuation;
pub mod equilibrium;
pub mod experiments;
pub mod manifold;
pub mod output;
pub mod quadode;
pub mod spatial;

pub use num_complex::Complex64;
