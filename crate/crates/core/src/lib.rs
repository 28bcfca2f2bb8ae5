//! Exact combinatorics of factorizations of the long cycle `γ_N = (1 2 … N)`
//! into three permutations `α₁α₂α₃ = γ_N`.
//!
//! The crate is organized bottom-up:
//!
//! - [`algebra`]: permutations, set partitions, Stirling/multinomial numbers and
//!   truncated multivariate power series over exact rationals.
//! - [`cactus`]: factor triples, partitioned 3-cacti, last-passage markers,
//!   exhaustive enumeration, genus and DOT export.
//! - [`tree`]: 3-colored cactus trees with triangle flags, their enumeration,
//!   closed-form count and generating-function fixed point.
//! - [`bijection`]: the map from partitioned cacti to 7-tuples
//!   `(τ, S₀, S₁, S₂, χ, σ₁, σ₂)` and its inverse.
//! - [`counting`]: brute-force cycle-type tables and every closed-form count,
//!   including the polynomial identity for `M(n₁, n₂, n₃, N)`.
//!
//! All ground sets are 1-based. The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod algebra;
pub mod bijection;
pub mod cactus;
pub mod counting;
mod error;
pub mod tree;

pub use error::Error;

/// Largest `N` accepted by the `S_N × S_N` enumerations unless the caller raises it.
pub const DEFAULT_MAX_N: usize = 7;

/// Largest total vertex count accepted by cactus-tree enumeration by default.
pub const DEFAULT_MAX_TREE_VERTICES: usize = 10;

pub type Result<T, E = Error> = core::result::Result<T, E>;
