//! Factor triples `α₁α₂α₃ = γ_N` and partitioned 3-cacti.
//!
//! A triple is a rooted 3-cactus: triangle `i` is the integer `i`, white, black
//! and grey vertices are the cycles of `α₁`, `α₂`, `α₃`. A partitioned cactus adds
//! partitions `π₁, π₂, π₃` of `[N]` whose blocks are unions of cycles of the
//! matching permutation.

mod dot;
mod enumerate;
mod markers;

use alloc::format;
use alloc::vec::Vec;

pub use dot::export_dot;
pub use enumerate::{alpha1_ranges, enumerate_cc, enumerate_factorizations, CactusEnumeration, Factorizations};
pub use markers::MarkerSet;

use crate::algebra::{Permutation, SetPartition};
use crate::{Error, Result};

/// Three permutations of equal degree whose product (rightmost first) is `γ_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FactorTriple {
    alpha1: Permutation,
    alpha2: Permutation,
    alpha3: Permutation,
}

impl FactorTriple {
    /// Completes `(α₁, α₂)` with `α₃ = α₂⁻¹ ∘ α₁⁻¹ ∘ γ_n`.
    pub fn new(alpha1: Permutation, alpha2: Permutation) -> Result<Self> {
        let gamma = Permutation::long_cycle(alpha1.degree());
        let alpha3 = alpha2.inverse().compose(&alpha1.inverse().compose(&gamma)?)?;
        Ok(Self { alpha1, alpha2, alpha3 })
    }

    /// Checks the product invariant on an explicit triple.
    pub fn from_parts(alpha1: Permutation, alpha2: Permutation, alpha3: Permutation) -> Result<Self> {
        let product = alpha1.compose(&alpha2.compose(&alpha3)?)?;
        if product != Permutation::long_cycle(alpha1.degree()) {
            return Err(CactusViolation::NotLongCycle.into());
        }
        Ok(Self { alpha1, alpha2, alpha3 })
    }

    pub(crate) fn from_parts_unchecked(alpha1: Permutation, alpha2: Permutation, alpha3: Permutation) -> Self {
        debug_assert_eq!(
            alpha1.compose(&alpha2.compose(&alpha3).unwrap()).unwrap(),
            Permutation::long_cycle(alpha1.degree())
        );
        Self { alpha1, alpha2, alpha3 }
    }

    pub fn n(&self) -> usize {
        self.alpha1.degree()
    }

    pub fn alpha1(&self) -> &Permutation {
        &self.alpha1
    }

    pub fn alpha2(&self) -> &Permutation {
        &self.alpha2
    }

    pub fn alpha3(&self) -> &Permutation {
        &self.alpha3
    }

    pub fn factors(&self) -> [&Permutation; 3] {
        [&self.alpha1, &self.alpha2, &self.alpha3]
    }

    /// Cycle counts `(n₁, n₂, n₃)`.
    pub fn cycle_type(&self) -> [usize; 3] {
        [
            self.alpha1.cycle_count(),
            self.alpha2.cycle_count(),
            self.alpha3.cycle_count(),
        ]
    }

    /// Genus of the cactus from Euler's formula with `V = n₁+n₂+n₃`, `E = 3N`,
    /// `F = N + 1`, i.e. `g = (2N + 1 − n₁ − n₂ − n₃) / 2`.
    pub fn genus(&self) -> Result<u32> {
        let [n1, n2, n3] = self.cycle_type();
        let twice = (2 * self.n() + 1) as i64 - (n1 + n2 + n3) as i64;
        if twice < 0 || twice % 2 != 0 {
            return Err(Error::Internal(format!(
                "Euler characteristic gives non-integral genus {twice}/2"
            )));
        }
        Ok((twice / 2) as u32)
    }
}

/// A broken partitioned-cactus invariant. `which` is 1, 2 or 3 for `(π₁, α₁)`,
/// `(π₂, α₂)`, `(π₃, α₃)`.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CactusViolation {
    #[error("π{which} is a partition of [{found}], expected [{expected}]")]
    GroundSize { which: u8, expected: usize, found: usize },
    #[error("π{which} has {found} blocks, expected {expected}")]
    BlockCount { which: u8, expected: usize, found: usize },
    #[error("cycle {cycle:?} of α{which} straddles block {block:?} of π{which}")]
    CycleStraddlesBlocks {
        which: u8,
        block: Vec<u32>,
        cycle: Vec<u32>,
    },
    #[error("α₁α₂α₃ is not the long cycle")]
    NotLongCycle,
}

/// `(π₁, π₂, π₃, α₁, α₂)` with `α₃` derived.
///
/// Partitions are stored canonically, so the block holding `1` is always block 0
/// of `π₁`. Block indices in [`MarkerSet`] refer to this canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartitionedCactus {
    triple: FactorTriple,
    pi1: SetPartition,
    pi2: SetPartition,
    pi3: SetPartition,
}

impl PartitionedCactus {
    /// Assembles and validates.
    pub fn new(
        alpha1: Permutation,
        alpha2: Permutation,
        pi1: SetPartition,
        pi2: SetPartition,
        pi3: SetPartition,
    ) -> Result<Self> {
        let pc = Self::assemble(alpha1, alpha2, pi1, pi2, pi3)?;
        pc.validate()?;
        Ok(pc)
    }

    /// Derives `α₃` and checks degrees, without checking block stability.
    pub fn assemble(
        alpha1: Permutation,
        alpha2: Permutation,
        pi1: SetPartition,
        pi2: SetPartition,
        pi3: SetPartition,
    ) -> Result<Self> {
        let triple = FactorTriple::new(alpha1, alpha2)?;
        Ok(Self::from_triple(triple, pi1, pi2, pi3))
    }

    pub fn from_triple(triple: FactorTriple, pi1: SetPartition, pi2: SetPartition, pi3: SetPartition) -> Self {
        Self { triple, pi1, pi2, pi3 }
    }

    /// Checks ground sets and that each block of `πᵢ` is a union of cycles of `αᵢ`.
    /// Reports the first offending block/cycle pair.
    pub fn validate(&self) -> Result<(), CactusViolation> {
        let n = self.n();
        for (k, (pi, alpha)) in self.partitions().into_iter().zip(self.triple.factors()).enumerate() {
            let which = k as u8 + 1;
            if pi.ground_size() != n {
                return Err(CactusViolation::GroundSize {
                    which,
                    expected: n,
                    found: pi.ground_size(),
                });
            }
            if let Some((block, cycle)) = pi.straddling_cycle(alpha) {
                return Err(CactusViolation::CycleStraddlesBlocks { which, block, cycle });
            }
        }
        Ok(())
    }

    /// [`validate`](Self::validate) plus the declared block counts `(p₁, p₂, p₃)`.
    pub fn validate_counts(&self, p: [usize; 3]) -> Result<(), CactusViolation> {
        self.validate()?;
        for (k, (pi, &expected)) in self.partitions().into_iter().zip(&p).enumerate() {
            if pi.block_count() != expected {
                return Err(CactusViolation::BlockCount {
                    which: k as u8 + 1,
                    expected,
                    found: pi.block_count(),
                });
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.triple.n()
    }

    pub fn triple(&self) -> &FactorTriple {
        &self.triple
    }

    pub fn alpha1(&self) -> &Permutation {
        self.triple.alpha1()
    }

    pub fn alpha2(&self) -> &Permutation {
        self.triple.alpha2()
    }

    pub fn alpha3(&self) -> &Permutation {
        self.triple.alpha3()
    }

    pub fn pi1(&self) -> &SetPartition {
        &self.pi1
    }

    pub fn pi2(&self) -> &SetPartition {
        &self.pi2
    }

    pub fn pi3(&self) -> &SetPartition {
        &self.pi3
    }

    pub fn partitions(&self) -> [&SetPartition; 3] {
        [&self.pi1, &self.pi2, &self.pi3]
    }

    /// `(p₁, p₂, p₃)`.
    pub fn block_counts(&self) -> [usize; 3] {
        [self.pi1.block_count(), self.pi2.block_count(), self.pi3.block_count()]
    }

    /// Index of the `π₁` block containing 1 (always 0 in canonical order).
    pub fn root_block(&self) -> usize {
        0
    }

    /// White, black and grey traversal labels of triangle `i`:
    /// `(i, α₃⁻¹α₂⁻¹(i), α₃⁻¹(i))`.
    pub fn traversal_labels(&self, i: u32) -> Result<(u32, u32, u32)> {
        let n = self.n();
        if i == 0 || i as usize > n {
            return Err(Error::OutOfRange { index: i as usize, n });
        }
        let a3_inv = self.alpha3().inverse();
        let black = a3_inv.apply(self.alpha2().inverse().apply(i));
        Ok((i, black, a3_inv.apply(i)))
    }

    pub fn markers(&self) -> MarkerSet {
        MarkerSet::compute(self)
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn perm(n: usize, cycles: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    pub fn part(n: usize, blocks: &[&[u32]]) -> SetPartition {
        SetPartition::from_blocks(n, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    /// The sphere cactus with the running-example partitions.
    pub fn pc1() -> PartitionedCactus {
        PartitionedCactus::new(
            perm(5, &[&[2, 4]]),
            perm(5, &[&[2, 3], &[4, 5]]),
            part(5, &[&[2, 4, 5], &[1, 3]]),
            part(5, &[&[1, 2, 3], &[4, 5]]),
            part(5, &[&[3], &[1, 2, 4, 5]]),
        )
        .unwrap()
    }

    pub fn sphere_triple() -> FactorTriple {
        FactorTriple::new(perm(5, &[&[2, 4]]), perm(5, &[&[2, 3], &[4, 5]])).unwrap()
    }

    pub fn torus_triples() -> [FactorTriple; 2] {
        [
            FactorTriple::new(perm(2, &[&[1, 2]]), perm(2, &[&[1, 2]])).unwrap(),
            FactorTriple::new(perm(4, &[&[1, 3]]), perm(4, &[&[1, 4], &[2, 3]])).unwrap(),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn derived_third_factor() {
        let t = FactorTriple::new(Permutation::identity(2), Permutation::identity(2)).unwrap();
        assert_eq!(t.alpha3(), &Permutation::long_cycle(2));
        assert_eq!(sphere_triple().alpha3(), &perm(5, &[&[1, 5]]));
        let [middle, right] = torus_triples();
        assert_eq!(middle.alpha3(), &perm(2, &[&[1, 2]]));
        assert_eq!(right.alpha3(), &perm(4, &[&[1, 3], &[2, 4]]));
        assert!(FactorTriple::new(Permutation::identity(2), Permutation::identity(3)).is_err());
    }

    #[test]
    fn from_parts_checks_product() {
        let t = sphere_triple();
        assert!(FactorTriple::from_parts(t.alpha1().clone(), t.alpha2().clone(), t.alpha3().clone()).is_ok());
        let bad = FactorTriple::from_parts(
            Permutation::identity(3),
            Permutation::identity(3),
            Permutation::identity(3),
        );
        assert_eq!(bad, Err(Error::Cactus(CactusViolation::NotLongCycle)));
    }

    #[test]
    fn genus_of_sphere_and_torus_cacti() {
        assert_eq!(sphere_triple().cycle_type(), [4, 3, 4]);
        assert_eq!(sphere_triple().genus().unwrap(), 0);
        let [middle, right] = torus_triples();
        assert_eq!(middle.cycle_type(), [1, 1, 1]);
        assert_eq!(middle.genus().unwrap(), 1);
        assert_eq!(right.cycle_type(), [3, 2, 2]);
        assert_eq!(right.genus().unwrap(), 1);
    }

    #[test]
    fn running_example_is_valid() {
        let pc = pc1();
        assert_eq!(pc.validate(), Ok(()));
        assert_eq!(pc.validate_counts([2, 2, 2]), Ok(()));
        assert_eq!(pc.pi1().blocks()[pc.root_block()][0], 1);
    }

    #[test]
    fn straddling_cycle_is_reported() {
        let pc = PartitionedCactus::assemble(
            perm(5, &[&[2, 4]]),
            perm(5, &[&[2, 3], &[4, 5]]),
            part(5, &[&[2], &[1, 3, 4, 5]]),
            part(5, &[&[1, 2, 3], &[4, 5]]),
            part(5, &[&[3], &[1, 2, 4, 5]]),
        )
        .unwrap();
        assert_eq!(
            pc.validate(),
            Err(CactusViolation::CycleStraddlesBlocks {
                which: 1,
                block: alloc::vec![2],
                cycle: alloc::vec![2, 4]
            })
        );
    }

    #[test]
    fn wrong_block_count_is_reported() {
        let pc = pc1();
        let err = pc.validate_counts([2, 2, 3]).unwrap_err();
        assert_eq!(
            err,
            CactusViolation::BlockCount {
                which: 3,
                expected: 3,
                found: 2
            }
        );
    }

    #[test]
    fn mismatched_ground_set() {
        let pc = PartitionedCactus::assemble(
            Permutation::identity(2),
            Permutation::identity(2),
            part(3, &[&[1, 2, 3]]),
            part(2, &[&[1, 2]]),
            part(2, &[&[1, 2]]),
        )
        .unwrap();
        assert!(matches!(
            pc.validate(),
            Err(CactusViolation::GroundSize { which: 1, .. })
        ));
    }

    #[test]
    fn traversal_labels_of_running_example() {
        let pc = pc1();
        assert_eq!(pc.traversal_labels(5).unwrap().2, 1);
        assert_eq!(pc.traversal_labels(3).unwrap().1, 2);
        assert!(pc.traversal_labels(0).is_err());
        assert!(pc.traversal_labels(6).is_err());
        let trivial = PartitionedCactus::new(
            Permutation::long_cycle(3),
            Permutation::identity(3),
            part(3, &[&[1, 2, 3]]),
            part(3, &[&[1], &[2], &[3]]),
            part(3, &[&[1], &[2], &[3]]),
        )
        .unwrap();
        for i in 1..=3 {
            assert_eq!(trivial.traversal_labels(i).unwrap(), (i, i, i));
        }
    }
}
