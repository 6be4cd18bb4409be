//! Independent numerical checks: a finite-difference Sturm–Liouville
//! eigensolver for the radial problem and adaptive Gauss–Legendre quadrature.
//! Neither uses the closed-form spectrum or normalization.

pub mod quadrature;
pub mod sturm_liouville;

pub use quadrature::{gauss_legendre, quadrature, Domain, QuadratureResult};
pub use sturm_liouville::{
    build_sl_problem, solve_eigenvalues, EigenSolution, SLDiscretization, SLProblem, Truncation,
};
