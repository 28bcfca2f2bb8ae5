//! Exact combinatorial arithmetic shared by every other module.

pub mod numbers;
mod partition;
mod permutation;
pub mod series;

pub use numbers::{binomial, factorial, multinomial, stirling2};
pub use partition::{restricted_growth_strings, SetPartition};
pub use permutation::Permutation;
pub use series::{SeriesShape, TruncatedSeries};

pub(crate) use permutation::{factorial_u64, next_permutation};
