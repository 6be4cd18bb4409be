//! Isotropic harmonic oscillator on the three-dimensional spaces of constant
//! curvature (sphere, Euclidean space, hyperbolic space), treated with the
//! curvature as a continuous parameter.
//!
//! The crate provides the exact bound-state spectrum and wavefunctions, and a
//! set of independent numerical checks for them:
//!
//! - [`kappa`]: curvature-dependent trigonometry, the oscillator potential,
//!   the invariant radial measure and the unit conversions.
//! - [`special`]: Gamma, Pochhammer, terminating hypergeometric series and
//!   spherical harmonics.
//! - [`spectrum`]: quantized energies, gaps, degeneracies and the hyperbolic
//!   bound-state census.
//! - [`wavefunctions`]: hypergeometric radial polynomials, envelopes,
//!   closed-form normalization and full wavefunctions.
//! - [`oracle`]: a finite-difference Sturm–Liouville eigensolver and an
//!   adaptive Gauss–Legendre quadrature engine. Nothing in it depends on the
//!   closed forms it is used to check.
//! - [`classical`]: Hamilton's equations for the classical system and the
//!   drift of its constants of motion.
//!
//! All quantities are dimensionless: radii in units of `sqrt(hbar / (m alpha))`,
//! curvature in units of `m alpha / hbar` and energies in units of
//! `hbar alpha`. See [`kappa::PhysicalScales`] for the conversion.

pub mod classical;
pub mod error;
pub mod kappa;
pub mod oracle;
pub mod special;
pub mod spectrum;
pub mod wavefunctions;

pub use error::{Error, Result};
pub use kappa::{Curvature, SignClass};
pub use spectrum::{EnergyLevel, QuantumNumbers};
pub use wavefunctions::RadialEigenstate;
