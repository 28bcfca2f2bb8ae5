use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::Permutation;
use crate::tree::{CactusTree, TreeProfile, TreeViolation, TreeViolationKind};
use crate::{Error, Result};

/// An element `(τ, S₀, S₁, S₂, χ, σ₁, σ₂)` of the image set.
///
/// Sets are ascending; `S₁` and `S₂` include `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ImageTuple {
    pub n: usize,
    pub p: [u32; 3],
    pub tau: CactusTree,
    pub s0: Vec<u32>,
    pub s1: Vec<u32>,
    pub s2: Vec<u32>,
    pub chi: Vec<u32>,
    pub sigma1: Permutation,
    pub sigma2: Permutation,
}

/// Required sizes given `n` and the profile of `τ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TupleSizes {
    pub s0: i64,
    pub s1: i64,
    pub s2: i64,
    pub chi: i64,
    pub sigma1: i64,
    pub sigma2: i64,
}

impl TupleSizes {
    pub fn new(n: usize, pr: TreeProfile) -> Self {
        let n = n as i64;
        let [p1, p2, p3, a, b, c] = pr.to_array().map(i64::from);
        Self {
            s0: p1 - 1 + p2 - a,
            s1: p1 - 1 + p3 - c,
            s2: p2 + p3 - b,
            chi: p3 - b - c,
            sigma1: n - p1 + 1 - p3 + c,
            sigma2: n - p2 - p3 + b,
        }
    }

    /// Whether some tuple can have these sizes on `[n]`.
    pub fn feasible(&self, n: usize) -> bool {
        let n = n as i64;
        let all = [self.s0, self.s1, self.s2, self.chi, self.sigma1, self.sigma2];
        all.iter().all(|&x| x >= 0)
            && self.s0 <= n
            && (1..=n).contains(&self.s1)
            && (1..=n).contains(&self.s2)
            && self.s0 + self.chi <= n
    }
}

fn ascending_subset(name: &str, set: &[u32], n: usize) -> Result<()> {
    if set.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidTuple(format!("{name} is not strictly ascending")));
    }
    if set.iter().any(|&x| x == 0 || x as usize > n) {
        return Err(Error::InvalidTuple(format!("{name} has an element outside 1..={n}")));
    }
    Ok(())
}

impl ImageTuple {
    pub fn profile(&self) -> TreeProfile {
        self.tau.profile()
    }

    /// Checks every structural and size constraint of the image set.
    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        if n == 0 {
            return Err(Error::InvalidTuple("n must be at least 1".into()));
        }
        self.tau.validate()?;
        let pr = self.tau.profile();
        if [pr.p1, pr.p2, pr.p3] != self.p {
            return Err(TreeViolation::new(
                Vec::new(),
                TreeViolationKind::ProfileMismatch {
                    expected: TreeProfile::new(self.p[0], self.p[1], self.p[2], pr.a, pr.b, pr.c),
                    found: pr,
                },
            )
            .into());
        }
        let sizes = TupleSizes::new(n, pr);
        for (name, set) in [("s0", &self.s0), ("s1", &self.s1), ("s2", &self.s2)] {
            ascending_subset(name, set, n)?;
        }
        let checks = [
            ("s0", self.s0.len(), sizes.s0),
            ("s1", self.s1.len(), sizes.s1),
            ("s2", self.s2.len(), sizes.s2),
            ("chi", self.chi.len(), sizes.chi),
            ("sigma1", self.sigma1.degree(), sizes.sigma1),
            ("sigma2", self.sigma2.degree(), sizes.sigma2),
        ];
        for (name, got, want) in checks {
            if got as i64 != want {
                return Err(Error::InvalidTuple(format!("{name} has size {got}, expected {want}")));
            }
        }
        if self.s1.last() != Some(&(n as u32)) || self.s2.last() != Some(&(n as u32)) {
            return Err(Error::InvalidTuple(format!("s1 and s2 must contain {n}")));
        }
        let mut seen = vec![false; n + 1];
        for &x in &self.s0 {
            seen[x as usize] = true;
        }
        for &x in &self.chi {
            if x == 0 || x as usize > n {
                return Err(Error::InvalidTuple(format!("chi has an element outside 1..={n}")));
            }
            if seen[x as usize] {
                return Err(Error::InvalidTuple(format!("chi repeats {x} or meets s0")));
            }
            seen[x as usize] = true;
        }
        Ok(())
    }
}
