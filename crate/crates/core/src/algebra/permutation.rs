use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A bijection of `{1..n}` stored in one-line form.
///
/// Products follow the "rightmost factor acts first" convention:
/// `p.compose(&q)` maps `i` to `p(q(i))`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n as u32).collect(),
        }
    }

    /// `γ_n = (1 2 … n)`.
    pub fn long_cycle(n: usize) -> Self {
        Self {
            images: (1..=n as u32)
                .map(|i| if i as usize == n { 1 } else { i + 1 })
                .collect(),
        }
    }

    /// Builds a permutation from its 1-based one-line form.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            let v = v as usize;
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!("image {v} outside 1..={n}")));
            }
            if seen[v - 1] {
                return Err(Error::InvalidPermutation(format!("image {v} repeated")));
            }
            seen[v - 1] = true;
        }
        Ok(Self { images })
    }

    /// Builds a permutation of degree `n` from disjoint cycles; omitted points are fixed.
    pub fn from_cycles(n: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = vec![0; n];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                if x == 0 || x as usize > n || next == 0 || next as usize > n {
                    return Err(Error::InvalidPermutation(format!("cycle entry outside 1..={n}")));
                }
                if images[x as usize - 1] != 0 {
                    return Err(Error::InvalidPermutation(format!("point {x} in two cycles")));
                }
                images[x as usize - 1] = next;
            }
        }
        for (i, v) in images.iter_mut().enumerate() {
            if *v == 0 {
                *v = i as u32 + 1;
            }
        }
        Self::from_images(images)
    }

    /// Assumes `images` is a valid one-line form.
    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Self { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// One-line form, entry `i - 1` being the image of `i`.
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn into_images(self) -> Vec<u32> {
        self.images
    }

    /// Image of the 1-based point `i`. Panics if `i` is out of range.
    #[inline]
    pub fn apply(&self, i: u32) -> u32 {
        self.images[i as usize - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Self { images: inv }
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::IncompatibleDegrees {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Self {
            images: other.images.iter().map(|&v| self.apply(v)).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Cycle decomposition in canonical form: each cycle starts at its minimum
    /// and cycles are sorted by minimum. Fixed points are 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n as u32 {
            if seen[start as usize - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x as usize - 1] {
                seen[x as usize - 1] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize - 1;
            }
        }
        count
    }

    /// Lexicographic successor of the one-line form, or `None` at the last permutation.
    pub fn next_lex(&self) -> Option<Self> {
        let mut images = self.images.clone();
        next_permutation(&mut images).then_some(Self { images })
    }

    /// All permutations of degree `n` in lexicographic order of their one-line forms.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        let mut current = Some(Self::identity(n));
        core::iter::from_fn(move || {
            let out = current.take()?;
            current = out.next_lex();
            Some(out)
        })
    }

    /// The permutation of lexicographic rank `rank` (0-based) among all of degree `n`.
    pub fn unrank_lex(n: usize, mut rank: u64) -> Self {
        let mut pool: Vec<u32> = (1..=n as u32).collect();
        let mut images = Vec::with_capacity(n);
        for k in (0..n).rev() {
            let f = factorial_u64(k);
            let idx = (rank / f) as usize;
            rank %= f;
            images.push(pool.remove(idx));
        }
        Self { images }
    }
}

pub(crate) fn factorial_u64(k: usize) -> u64 {
    (1..=k as u64).product()
}

/// In-place lexicographic successor; returns `false` (leaving the slice sorted
/// descending) when there is none.
pub(crate) fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    /// Cycle notation, e.g. `(1)(2 4)(3)(5)`; the empty permutation prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.images.is_empty() {
            return f.write_str("()");
        }
        for cycle in self.cycles() {
            f.write_str("(")?;
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}
