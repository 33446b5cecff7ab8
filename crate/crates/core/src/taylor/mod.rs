//! Truncated bivariate Taylor arithmetic and exact KdV solutions.
//!
//! A [`TruncatedSeries`] of order `M` stores the coefficients `c_ij` of
//! `Σ c_ij δt^i δx^j` for `i + j <= M`. Evaluating a [`Solution`] on the
//! series `t0 + δt`, `x0 + δx` yields its Taylor expansion at `(t0, x0)`,
//! from which jets are read off exactly up to round-off.

mod series;
mod solution;

pub use series::{Analytic, TruncatedSeries, Var};
pub use solution::{jet_of_solution, kdv_residual, SeriesMap, Solution};
