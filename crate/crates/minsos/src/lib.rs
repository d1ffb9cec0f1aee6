//! Minimal sum of squares over integer partitions with nonnegative rank.
//!
//! For each `n` the crate computes `m_n`, the smallest possible sum of
//! squared parts over partitions of `n` whose largest part is at least the
//! number of parts (OEIS A353044), together with every optimal partition.
//! Around that sit:
//!
//! - [`partitions`]: the base type, rank, enumeration, exchange steps;
//! - [`solver`]: the linear-scan reduction, its brute-force oracle, and
//!   sequence-level checks (strict growth, parity);
//! - [`analysis`]: continuous envelopes of the objective, closed-form
//!   stationary points, and the cubic bracket that pins the optimal largest
//!   part to a few candidates;
//! - [`endofunctions`]: the degree-of-noninvertibility correspondence that
//!   motivates the minimization.
//!
//! The `parallel` feature (on by default) runs the scans on rayon; without
//! it everything falls back to the identical sequential code paths.

pub mod analysis;
pub mod endofunctions;
mod error;
pub mod partitions;
pub mod solver;

pub use error::{Error, Result};
