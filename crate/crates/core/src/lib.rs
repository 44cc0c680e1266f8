//! Half-integral-spin eigenfunctions of a planar oscillator-like spin
//! operator pair, their spectrum, and two independent numerical oracles.
//!
//! The library covers:
//!
//! - exact validation of the quantum numbers (lambda, l, m, N) and
//!   enumeration of the admissible spectrum with multiplicities
//!   ([`qn`], [`spectrum`]);
//! - the terminating power-series radial solutions, built in exact rational
//!   arithmetic, and the assembled normalized eigenfunctions ([`series`]);
//! - structural observables: normalization integrals, mean radii, density
//!   profiles and ring counts ([`quadrature`], [`density`]);
//! - a finite-difference eigensolver for the radial equation ([`fd`]) and a
//!   truncated-basis dense-matrix oracle for the operator algebra
//!   ([`operators`]), each verifying the analytic results independently.
//!
//! All numerics run in dimensionless units (hbar = gamma = 1 by default);
//! physical units enter only through the length scale sqrt(hbar/gamma).
//! Every type is immutable after construction and every operation is a pure
//! function, so values can be shared across threads freely.

pub mod constants;
pub mod density;
pub mod error;
pub mod fd;
pub mod grid;
pub mod halfint;
pub mod operators;
pub mod qn;
pub mod quadrature;
pub mod series;
pub mod spectrum;

pub use constants::Constants;
pub use density::{density_profile, expected_ring_count, radial_nodes, DensityProfile};
pub use error::{Error, Result};
pub use fd::{aligned_deviation, analytic_lambda, compare_series_vs_fd, fd_eigensolve};
pub use grid::RadialGrid;
pub use halfint::HalfInteger;
pub use operators::{basis_dim, build, joint_spectrum, JointMode, OperatorSet};
pub use qn::{validate, QuantumNumbers};
pub use quadrature::{
    adaptive_integral, mean_radius, mean_radius_closed_form_half_spin, norm_closed_form,
    quadrature_norm, radial_moment,
};
pub use series::{
    coefficient_after_cutoff, eval_radial, laguerre, laguerre_agreement, laguerre_oracle,
    nonterminating_prefix, recursion_coefficients, recursion_coefficients_exact,
    recursion_sequence_exact, Eigenfunction, RadialSeries,
};
pub use spectrum::{
    e_min, enumerate_table, golden_table, golden_table_json, lambda_min, min_terminating_lambda,
    multiplicity, AdmissibilityRule, Multiplicity, SpectrumRow,
};

pub use num_complex::Complex64;
pub use num_rational::BigRational;
