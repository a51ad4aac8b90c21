//! Reconstruction of bandlimited signals from finitely many integer samples
//! with the Gaussian-regularized Shannon series
//!
//! ```text
//! (S_{n,r} f)(t) = Σ_{j=−n+1}^{n} f(j) · sinc(t − j) · e^{−(t−j)²/(2r²)},
//! ```
//!
//! together with certified lower and upper bounds on its worst-case error
//! over the unit ball of the Paley–Wiener space `B_δ` (`0 < δ < π`), and an
//! experiment harness that measures the actual error on the extremal signal
//! `f0` and checks the exponential decay rate `(π−δ)/2`.
//!
//! Module map:
//!
//! - [`special`]: double-double [`ExtendedReal`], the Gaussian tail
//!   integral and Mills-ratio bounds, compensated summation.
//! - [`signals`]: [`Bandwidth`], the [`PwSignal`] trait, [`F0`], the sinc
//!   kernel and [`SampleSet`] with its text file format.
//! - [`reconstruct`]: the regularized and plain truncated series, and the
//!   optimal width `r = √((n−1)/(π−δ))`.
//! - [`bounds`]: the constant `C_{r,δ,ε}`, admissible `n`, lower and upper
//!   bounds, numeric lemma checks.
//! - [`harness`]: grid error measurement, table reproduction, rate fits, CSV.
//! - [`cli`]: the `gauss-shannon` command-line tool.
//! - [`quadrature`]: adaptive Gauss–Kronrod integration.

// Negated comparisons below are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod cli;
pub mod error;
pub mod format;
pub mod harness;
pub mod quadrature;
pub mod reconstruct;
pub mod signals;
pub mod special;

pub use bounds::{
    bound_pair, c_const, e2_tail_bound, lemma_checks, lower_bound_general, lower_bound_opt,
    lower_bound_opt_with_c, n_min, upper_bound_general, upper_bound_opt, BoundPair, BoundParams,
    LemmaCheck, MillsEpsilon,
};
pub use error::{Error, Result};
pub use harness::{
    emit_csv, measure_error, rate_fit, repro_table, Column, ErrorRow, ExperimentConfig,
};
pub use reconstruct::{
    gauss_kernel, optimal_width, reconstruct_gauss, reconstruct_shannon, GaussWidth,
};
pub use signals::{
    f0_eval, f0_hat_abs, f0_samples, pw_norm_estimate, sinc, Bandwidth, FnSignal, PwSignal,
    SampleSet, F0,
};
pub use special::{comp_sum, eps_lower, gauss_tail, mills_bounds, ExtendedReal, MillsTriple};
