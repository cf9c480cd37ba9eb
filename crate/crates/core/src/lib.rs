//! Exact verification engine for divisibility properties of binomial and
//! q-binomial coefficients.
//!
//! The integer side ([`divisibility`]) never materializes a large binomial:
//! every "D divides binom(m, k)" question is reduced to prime-power
//! valuations. The polynomial side ([`qpoly`], [`qdivisibility`]) works with
//! cyclotomic exponent vectors and only expands to coefficients when a
//! coefficient-level predicate is asked for.

pub mod arith;
pub mod divisibility;
mod error;
pub mod parallel;
pub mod qdivisibility;
pub mod qpoly;
pub mod serde_big;

pub use error::{Error, Result};

/// Version stamped into reports, caches and checkpoints.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
