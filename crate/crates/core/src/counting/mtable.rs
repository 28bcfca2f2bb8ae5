use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::algebra::{factorial_u64, next_permutation, Permutation};
use crate::{Error, Result};

/// Factorization counts `M(n₁, n₂, n₃, n)` keyed by the cycle counts of `(α₁, α₂, α₃)`.
/// Only nonzero entries are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MTable {
    n: usize,
    counts: BTreeMap<(u32, u32, u32), BigUint>,
}

impl MTable {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            counts: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add(&mut self, key: (u32, u32, u32), count: BigUint) {
        if !count.is_zero() {
            *self.counts.entry(key).or_default() += count;
        }
    }

    /// Adds every entry of `other` (tables over the same `n`).
    pub fn merge(&mut self, other: &MTable) -> Result<()> {
        if self.n != other.n {
            return Err(Error::IncompatibleDegrees {
                left: self.n,
                right: other.n,
            });
        }
        for (&k, v) in &other.counts {
            self.add(k, v.clone());
        }
        Ok(())
    }

    pub fn get(&self, n1: u32, n2: u32, n3: u32) -> BigUint {
        self.counts.get(&(n1, n2, n3)).cloned().unwrap_or_default()
    }

    /// `(n₁, n₂, n₃, count)` in lexicographic key order.
    pub fn rows(&self) -> impl Iterator<Item = (u32, u32, u32, &BigUint)> {
        self.counts.iter().map(|(&(a, b, c), v)| (a, b, c, v))
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    /// Whether every entry equals the entries at all permutations of its key.
    pub fn is_symmetric(&self) -> bool {
        self.counts.iter().all(|(&(a, b, c), v)| {
            [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)]
                .iter()
                .all(|&(x, y, z)| &self.get(x, y, z) == v)
        })
    }
}

/// `M(·, ·, ·, n)` by running over all `n!²` pairs `(α₁, α₂)`.
pub fn m_bruteforce(n: usize, max_n: usize) -> Result<MTable> {
    m_bruteforce_range(n, max_n, 0..factorial_u64(n))
}

/// Contribution of the pairs whose `α₁` has lexicographic rank in `ranks`.
/// Tables from disjoint ranges merge into the full table.
pub fn m_bruteforce_range(n: usize, max_n: usize, ranks: Range<u64>) -> Result<MTable> {
    if n > max_n {
        return Err(Error::LimitExceeded {
            requested: n,
            limit: max_n,
        });
    }
    let mut table = MTable::new(n);
    let end = ranks.end.min(factorial_u64(n));
    if n == 0 || ranks.start >= end {
        return Ok(table);
    }
    // counts indexed by (n₁ − 1, n₂ − 1, n₃ − 1)
    let mut grid = vec![0u64; n * n * n];
    let mut a1 = Permutation::unrank_lex(n, ranks.start).into_images();
    let mut a1_inv = vec![0u32; n];
    let mut beta = vec![0u32; n];
    let mut a2 = vec![0u32; n];
    let mut a2_inv = vec![0u32; n];
    let mut rank = ranks.start;
    loop {
        for (i, &v) in a1.iter().enumerate() {
            a1_inv[v as usize - 1] = i as u32 + 1;
        }
        // β = α₁⁻¹γ, so α₃ = α₂⁻¹β
        for i in 0..n {
            beta[i] = a1_inv[(i + 1) % n];
        }
        let c1 = cycle_count(&a1);
        for (i, x) in a2.iter_mut().enumerate() {
            *x = i as u32 + 1;
        }
        loop {
            for (i, &v) in a2.iter().enumerate() {
                a2_inv[v as usize - 1] = i as u32 + 1;
            }
            // cycles of α₃ = α₂⁻¹β, walked without materializing it
            let c3 = {
                let mut seen = 0u64;
                let mut count = 0;
                for start in 0..n {
                    if seen & (1 << start) != 0 {
                        continue;
                    }
                    count += 1;
                    let mut x = start;
                    while seen & (1 << x) == 0 {
                        seen |= 1 << x;
                        x = a2_inv[beta[x] as usize - 1] as usize - 1;
                    }
                }
                count
            };
            let c2 = cycle_count(&a2);
            grid[((c1 - 1) * n + (c2 - 1)) * n + (c3 - 1)] += 1;
            if !next_permutation(&mut a2) {
                break;
            }
        }
        rank += 1;
        if rank >= end || !next_permutation(&mut a1) {
            break;
        }
    }
    for (idx, &count) in grid.iter().enumerate() {
        if count > 0 {
            let key = (
                (idx / (n * n)) as u32 + 1,
                ((idx / n) % n) as u32 + 1,
                (idx % n) as u32 + 1,
            );
            table.add(key, BigUint::from(count));
        }
    }
    Ok(table)
}

fn cycle_count(images: &[u32]) -> usize {
    let mut seen = 0u64;
    let mut count = 0;
    for start in 0..images.len() {
        if seen & (1 << start) != 0 {
            continue;
        }
        count += 1;
        let mut x = start;
        while seen & (1 << x) == 0 {
            seen |= 1 << x;
            x = images[x] as usize - 1;
        }
    }
    count
}

/// Splits the brute force into `parts` contiguous `α₁` ranges.
pub fn m_bruteforce_ranges(n: usize, parts: usize) -> Vec<Range<u64>> {
    crate::cactus::alpha1_ranges(n, parts)
}
