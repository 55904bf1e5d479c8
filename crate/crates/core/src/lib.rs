//! Variance-based global sensitivity analysis toolkit.
//!
//! The crate provides the moving parts needed to run and benchmark
//! variance-based total-order sensitivity estimators:
//!
//! * [`sampling`]: seeded pseudo-random and Owen-scrambled Sobol' point
//!   generation, run-budget allocation, column-swap block designs, and star
//!   designs.
//! * [`distributions`]: marginal input distributions on the unit interval
//!   and quantile transforms of sample matrices.
//! * [`metafunction`]: a seeded family of random test functions of
//!   configurable dimension with pairwise and three-way interactions.
//! * [`estimators`]: eight total-order estimators, a first-order estimator,
//!   and the variogram-based star-design estimator.
//! * [`metrics`]: ranking and agreement measures used to score estimates
//!   against references.
//! * [`harness`]: the benchmark driver that crosses estimators with sample
//!   sizes, dimensions, input distributions, and test functions, plus a
//!   sensitivity analysis of the benchmark results themselves.

pub mod distributions;
mod error;
pub mod estimators;
pub mod harness;
pub mod metafunction;
pub mod metrics;
pub mod sampling;

pub use error::{Error, Result};
