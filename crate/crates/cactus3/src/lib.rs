//! File formats, verification suites and the command-line front end for
//! [`cactus3_core`].
//!
//! - [`json`]: partitioned cacti, cactus trees and image tuples as JSON.
//! - [`table`]: cycle-type tables as CSV or JSON.
//! - [`verify`]: exhaustive checks that emit [`report::Report`]s.
//! - [`parallel`]: deterministic fan-out of brute-force ranges over threads.
//! - [`cli`]: the `cactus3` binary.

pub mod cli;
mod error;
pub mod json;
pub mod parallel;
pub mod report;
pub mod table;
pub mod verify;

pub use error::{Error, Result};
