use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::Permutation;
use crate::{Error, Result};

/// A partition of `{1..n}` into nonempty blocks, stored canonically: blocks sorted
/// by their minimum, elements ascending within a block.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<u32>>,
}

impl SetPartition {
    pub fn from_blocks(n: usize, mut blocks: Vec<Vec<u32>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &x in block.iter() {
                if x == 0 || x as usize > n {
                    return Err(Error::InvalidPartition(format!("element {x} outside 1..={n}")));
                }
                if seen[x as usize - 1] {
                    return Err(Error::InvalidPartition(format!("element {x} appears twice")));
                }
                seen[x as usize - 1] = true;
            }
            block.sort_unstable();
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!("element {} not covered", missing + 1)));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(Self { n, blocks })
    }

    /// Partition whose blocks are given by a block index per element (entry `i - 1`
    /// is the block of `i`). Indices need not be contiguous.
    pub fn from_labels(labels: &[usize]) -> Self {
        let max = labels.iter().copied().max().map_or(0, |m| m + 1);
        let mut buckets: Vec<Vec<u32>> = vec![Vec::new(); max];
        for (i, &l) in labels.iter().enumerate() {
            buckets[l].push(i as u32 + 1);
        }
        let mut blocks: Vec<Vec<u32>> = buckets.into_iter().filter(|b| !b.is_empty()).collect();
        blocks.sort_unstable_by_key(|b| b[0]);
        Self {
            n: labels.len(),
            blocks,
        }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Block index (into [`blocks`](Self::blocks)) of every element; entry `i - 1` is for `i`.
    pub fn block_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &x in block {
                idx[x as usize - 1] = b;
            }
        }
        idx
    }

    /// First cycle of `perm` that is not contained in a single block, paired with the
    /// block holding its first element. `None` when every block is a union of cycles.
    pub fn straddling_cycle(&self, perm: &Permutation) -> Option<(Vec<u32>, Vec<u32>)> {
        let idx = self.block_index();
        perm.cycles().into_iter().find_map(|cycle| {
            let b = idx[cycle[0] as usize - 1];
            cycle
                .iter()
                .any(|&x| idx[x as usize - 1] != b)
                .then(|| (self.blocks[b].clone(), cycle))
        })
    }
}

/// Restricted growth strings of length `m` using exactly `k` distinct values,
/// in lexicographic order. Each string encodes one partition of an `m`-set into
/// `k` unordered blocks (entry `i` is the block of element `i`).
pub fn restricted_growth_strings(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(m: usize, k: usize, prefix: &mut Vec<usize>, used: usize, out: &mut Vec<Vec<usize>>) {
        let remaining = m - prefix.len();
        if remaining == 0 {
            if used == k {
                out.push(prefix.clone());
            }
            return;
        }
        // each remaining element can open at most one new block
        if used + remaining < k {
            return;
        }
        let top = if used < k { used + 1 } else { used };
        for v in 0..top {
            prefix.push(v);
            go(m, k, prefix, used.max(v + 1), out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k > m || (k == 0 && m > 0) {
        return out;
    }
    go(m, k, &mut Vec::with_capacity(m), 0, &mut out);
    out
}
