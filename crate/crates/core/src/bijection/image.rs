use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use super::tuple::{ImageTuple, TupleSizes};
use crate::algebra::numbers::factorial;
use crate::algebra::{binomial, Permutation};
use crate::tree::{ct_count_formula, enumerate_ct_with_limit, TreeProfile};
use crate::{Error, Result};

/// Every `k`-subset of `pool` (ascending), in lexicographic order.
pub fn combinations(pool: &[u32], k: usize) -> Vec<Vec<u32>> {
    fn go(pool: &[u32], k: usize, start: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..pool.len() {
            if pool.len() - i < k - cur.len() {
                break;
            }
            cur.push(pool[i]);
            go(pool, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= pool.len() {
        go(pool, k, 0, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Every sequence of `k` distinct elements of `pool`.
pub fn arrangements(pool: &[u32], k: usize) -> Vec<Vec<u32>> {
    fn go(pool: &[u32], k: usize, used: &mut [bool], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in 0..pool.len() {
            if !used[i] {
                used[i] = true;
                cur.push(pool[i]);
                go(pool, k, used, cur, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    if k <= pool.len() {
        go(
            pool,
            k,
            &mut vec![false; pool.len()],
            &mut Vec::with_capacity(k),
            &mut out,
        );
    }
    out
}

/// Profiles `(p, a, b, c)` that admit at least the size constraints of a tuple on `[n]`.
fn candidate_profiles(p: [u32; 3], n: usize) -> impl Iterator<Item = TreeProfile> {
    let [p1, p2, p3] = p;
    (0..=p1).flat_map(move |a| {
        (0..=p2).flat_map(move |b| {
            (0..=p3)
                .map(move |c| TreeProfile::new(p1, p2, p3, a, b, c))
                .filter(move |pr| TupleSizes::new(n, *pr).feasible(n))
        })
    })
}

/// Calls `visit` on every element of the image set `I(p₁, p₂, p₃, n)`: every tree
/// of every admissible profile, every choice of `S₀`, `S₁ ∋ n`, `S₂ ∋ n`, every
/// arrangement `χ` avoiding `S₀`, and every pair `(σ₁, σ₂)`.
pub fn visit_image_set(p: [u32; 3], n: usize, max_n: usize, mut visit: impl FnMut(&ImageTuple)) -> Result<()> {
    if n > max_n {
        return Err(Error::LimitExceeded {
            requested: n,
            limit: max_n,
        });
    }
    if n == 0 || p.contains(&0) {
        return Ok(());
    }
    let all: Vec<u32> = (1..=n as u32).collect();
    let below: Vec<u32> = (1..n as u32).collect();
    for pr in candidate_profiles(p, n) {
        let sizes = TupleSizes::new(n, pr);
        let trees = enumerate_ct_with_limit(pr, 3 * n)?;
        if trees.is_empty() {
            continue;
        }
        let with_n = |mut v: Vec<u32>| {
            v.push(n as u32);
            v
        };
        let s1s: Vec<Vec<u32>> = combinations(&below, sizes.s1 as usize - 1)
            .into_iter()
            .map(with_n)
            .collect();
        let s2s: Vec<Vec<u32>> = combinations(&below, sizes.s2 as usize - 1)
            .into_iter()
            .map(with_n)
            .collect();
        let sigma1s: Vec<Permutation> = Permutation::all(sizes.sigma1 as usize).collect();
        let sigma2s: Vec<Permutation> = Permutation::all(sizes.sigma2 as usize).collect();
        for tau in &trees {
            for s0 in combinations(&all, sizes.s0 as usize) {
                let rest: Vec<u32> = all.iter().copied().filter(|x| !s0.contains(x)).collect();
                for chi in arrangements(&rest, sizes.chi as usize) {
                    for s1 in &s1s {
                        for s2 in &s2s {
                            for sigma1 in &sigma1s {
                                for sigma2 in &sigma2s {
                                    visit(&ImageTuple {
                                        n,
                                        p,
                                        tau: tau.clone(),
                                        s0: s0.clone(),
                                        s1: s1.clone(),
                                        s2: s2.clone(),
                                        chi: chi.clone(),
                                        sigma1: sigma1.clone(),
                                        sigma2: sigma2.clone(),
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// `|I(p₁, p₂, p₃, n)|` as a product count over profiles, with `|CT|` from the
/// closed form: `Σ |CT| · C(n, |S₀|) · C(n−1, |S₁|−1) · C(n−1, |S₂|−1) ·
/// (n − |S₀|)_{|χ|} · d₁! · d₂!`.
pub fn image_set_size(p: [u32; 3], n: usize) -> Result<BigUint> {
    let mut total = BigUint::zero();
    if n == 0 || p.contains(&0) {
        return Ok(total);
    }
    let n64 = n as i64;
    for pr in candidate_profiles(p, n) {
        let s = TupleSizes::new(n, pr);
        let trees = ct_count_formula(pr)?;
        let Some(trees) = trees.to_biguint() else {
            return Err(Error::Internal("negative tree count".into()));
        };
        let free = (n64 - s.s0) as u64;
        let chi: BigUint = (0..s.chi as u64).map(|j| BigUint::from(free - j)).product();
        total += trees
            * binomial(n64, s.s0)
            * binomial(n64 - 1, s.s1 - 1)
            * binomial(n64 - 1, s.s2 - 1)
            * chi
            * factorial(s.sigma1 as u64)
            * factorial(s.sigma2 as u64);
    }
    Ok(total)
}
