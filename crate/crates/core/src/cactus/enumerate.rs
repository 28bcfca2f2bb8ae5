use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use super::{FactorTriple, PartitionedCactus};
use crate::algebra::{factorial_u64, next_permutation, restricted_growth_strings, Permutation, SetPartition};
use crate::{Error, Result};

/// Every factorization `α₁α₂α₃ = γ_n`, in lexicographic order of the one-line
/// forms of `(α₁, α₂)`. A stream may be restricted to a contiguous range of
/// lexicographic ranks of `α₁` so disjoint ranges can be consumed in parallel.
#[derive(Clone, Debug)]
pub struct Factorizations {
    n: usize,
    ranks: Range<u64>,
    alpha1: Vec<u32>,
    /// `α₁⁻¹ ∘ γ_n`, refreshed whenever `α₁` advances.
    beta: Vec<u32>,
    alpha2: Vec<u32>,
    done: bool,
}

/// All factorizations of `γ_n`; fails when `n > max_n`.
pub fn enumerate_factorizations(n: usize, max_n: usize) -> Result<Factorizations> {
    Factorizations::new(n, max_n)
}

impl Factorizations {
    pub fn new(n: usize, max_n: usize) -> Result<Self> {
        Self::with_alpha1_ranks(n, max_n, 0..factorial_u64(n))
    }

    /// Only factorizations whose `α₁` has lexicographic rank in `ranks`.
    pub fn with_alpha1_ranks(n: usize, max_n: usize, ranks: Range<u64>) -> Result<Self> {
        if n > max_n {
            return Err(Error::LimitExceeded {
                requested: n,
                limit: max_n,
            });
        }
        let ranks = ranks.start..ranks.end.min(factorial_u64(n));
        let alpha1 = if ranks.start < ranks.end {
            Permutation::unrank_lex(n, ranks.start).into_images()
        } else {
            Vec::new()
        };
        let mut out = Self {
            n,
            done: ranks.start >= ranks.end,
            ranks,
            beta: vec![0; n],
            alpha2: (1..=n as u32).collect(),
            alpha1,
        };
        out.refresh_beta();
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of triples still to be produced.
    pub fn remaining(&self) -> u64 {
        if self.done {
            0
        } else {
            (self.ranks.end - self.ranks.start) * factorial_u64(self.n)
        }
    }

    fn refresh_beta(&mut self) {
        if self.done {
            return;
        }
        let n = self.n as u32;
        let mut inv = vec![0u32; self.n];
        for (i, &v) in self.alpha1.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        for i in 1..=n {
            let g = if i == n { 1 } else { i + 1 };
            self.beta[i as usize - 1] = inv[g as usize - 1];
        }
    }

    /// Current pair without allocation: `(α₁, α₂, α₃)` one-line forms.
    fn emit(&self) -> FactorTriple {
        let mut a2_inv = vec![0u32; self.n];
        for (i, &v) in self.alpha2.iter().enumerate() {
            a2_inv[v as usize - 1] = i as u32 + 1;
        }
        let alpha3: Vec<u32> = self.beta.iter().map(|&b| a2_inv[b as usize - 1]).collect();
        FactorTriple::from_parts_unchecked(
            Permutation::from_images_unchecked(self.alpha1.clone()),
            Permutation::from_images_unchecked(self.alpha2.clone()),
            Permutation::from_images_unchecked(alpha3),
        )
    }

    fn advance(&mut self) {
        if next_permutation(&mut self.alpha2) {
            return;
        }
        self.alpha2.sort_unstable();
        self.ranks.start += 1;
        if self.ranks.start >= self.ranks.end || !next_permutation(&mut self.alpha1) {
            self.done = true;
            return;
        }
        self.refresh_beta();
    }
}

impl Iterator for Factorizations {
    type Item = FactorTriple;

    fn next(&mut self) -> Option<FactorTriple> {
        if self.done {
            return None;
        }
        let out = self.emit();
        self.advance();
        Some(out)
    }
}

/// Splits the `n!` lexicographic ranks of `α₁` into at most `parts` contiguous ranges.
pub fn alpha1_ranges(n: usize, parts: usize) -> Vec<Range<u64>> {
    let total = factorial_u64(n);
    let parts = (parts.max(1) as u64).min(total.max(1));
    let chunk = total.div_ceil(parts);
    (0..parts)
        .map(|k| (k * chunk).min(total)..((k + 1) * chunk).min(total))
        .filter(|r| r.start < r.end)
        .collect()
}

/// Every partitioned cactus in `CC(p₁, p₂, p₃, n)`: for each factorization, every
/// way to group the cycles of each `αᵢ` into exactly `pᵢ` blocks.
pub struct CactusEnumeration {
    p: [usize; 3],
    triples: Factorizations,
    current: Option<Current>,
    /// Restricted growth strings by cycle count, per color.
    rgs_cache: [Vec<Option<Vec<Vec<usize>>>>; 3],
}

struct Current {
    triple: FactorTriple,
    cycles: [Vec<Vec<u32>>; 3],
    idx: [usize; 3],
}

pub fn enumerate_cc(p: [usize; 3], n: usize, max_n: usize) -> Result<CactusEnumeration> {
    CactusEnumeration::new(p, Factorizations::new(n, max_n)?)
}

impl CactusEnumeration {
    /// Partitioned cacti built over an arbitrary (possibly range-restricted) stream of triples.
    pub fn new(p: [usize; 3], triples: Factorizations) -> Result<Self> {
        let n = triples.n();
        Ok(Self {
            p,
            triples,
            current: None,
            rgs_cache: [vec![None; n + 1], vec![None; n + 1], vec![None; n + 1]],
        })
    }

    fn strings(&mut self, color: usize, m: usize) -> &Vec<Vec<usize>> {
        let k = self.p[color];
        self.rgs_cache[color][m].get_or_insert_with(|| restricted_growth_strings(m, k))
    }

    fn load_next_triple(&mut self) -> bool {
        for triple in self.triples.by_ref() {
            let [c1, c2, c3] = triple.factors().map(|a| a.cycles());
            if c1.len() < self.p[0] || c2.len() < self.p[1] || c3.len() < self.p[2] {
                continue;
            }
            self.current = Some(Current {
                triple,
                cycles: [c1, c2, c3],
                idx: [0; 3],
            });
            return true;
        }
        self.current = None;
        false
    }
}

fn partition_from_rgs(n: usize, cycles: &[Vec<u32>], rgs: &[usize]) -> SetPartition {
    let mut labels = vec![0usize; n];
    for (cycle, &b) in cycles.iter().zip(rgs) {
        for &x in cycle {
            labels[x as usize - 1] = b;
        }
    }
    SetPartition::from_labels(&labels)
}

impl Iterator for CactusEnumeration {
    type Item = PartitionedCactus;

    fn next(&mut self) -> Option<PartitionedCactus> {
        loop {
            if self.current.is_none() && !self.load_next_triple() {
                return None;
            }
            let cur = self.current.take().expect("loaded above");
            let lens = [cur.cycles[0].len(), cur.cycles[1].len(), cur.cycles[2].len()];
            let counts = [0, 1, 2].map(|c| self.strings(c, lens[c]).len());
            if counts.contains(&0) || cur.idx[0] >= counts[0] {
                continue;
            }
            let n = cur.triple.n();
            let parts: [SetPartition; 3] = [0, 1, 2].map(|c| {
                let rgs = &self.rgs_cache[c][lens[c]].as_ref().expect("cached")[cur.idx[c]];
                partition_from_rgs(n, &cur.cycles[c], rgs)
            });
            let mut idx = cur.idx;
            // odometer, π₃ fastest
            idx[2] += 1;
            if idx[2] == counts[2] {
                idx[2] = 0;
                idx[1] += 1;
                if idx[1] == counts[1] {
                    idx[1] = 0;
                    idx[0] += 1;
                }
            }
            let [pi1, pi2, pi3] = parts;
            let pc = PartitionedCactus::from_triple(cur.triple.clone(), pi1, pi2, pi3);
            debug_assert!(pc.validate().is_ok());
            if idx[0] < counts[0] {
                self.current = Some(Current { idx, ..cur });
            }
            return Some(pc);
        }
    }
}
