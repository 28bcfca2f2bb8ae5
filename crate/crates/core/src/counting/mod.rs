//! Cycle-type tables `M(n₁, n₂, n₃, N)` by brute force, and the closed forms
//! that count partitioned cacti and their images.

mod formulas;
mod mtable;
mod theorem;

pub use formulas::{cc_count_from_table, cc_count_stirling, i_count_formula, jackson_symmetric, theorem1_factor};
pub use mtable::{m_bruteforce, m_bruteforce_range, m_bruteforce_ranges, MTable};
pub use theorem::{theorem1_check, theorem1_check_table, PolynomialCheck, Theorem1Report};
