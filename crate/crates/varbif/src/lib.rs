//! Numerical detection, verification and tracing of bifurcation points of
//! potential operators arising from parametrized variational problems
//! `F - lambda*G` on discretized elliptic domains.
//!
//! The toolkit assembles energy value/gradient/Hessian data for integrand
//! functionals on uniform Dirichlet grids, solves the linearized eigenvalue
//! pencil at a base state, evaluates Morse-index and 0-group criteria for
//! bifurcation, performs a finite-dimensional Lyapunov-Schmidt reduction at
//! candidate parameter values, searches and classifies nontrivial solution
//! branches, and runs the same machinery along domain-scaling deformations
//! (conjugate points, index-count conservation).

pub mod assembly;
pub mod bifurcation;
pub mod config;
pub mod deformation;
pub mod error;
pub mod family;
pub mod grid;
pub mod integrand;
pub mod linalg;
pub mod output;
pub mod problem;
pub mod problems;
pub mod reduction;
pub mod selftest;
pub mod shooting;
pub mod spectrum;
pub mod tol;

pub use error::{Error, Result};
pub use grid::{Domain, Grid};
pub use problem::{DiscreteProblem, FieldVector, ProblemSpec, Symmetry, Term};
