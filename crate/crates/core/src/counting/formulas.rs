use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use super::mtable::{m_bruteforce, MTable};
use crate::algebra::{binomial, factorial, multinomial, stirling2};
use crate::{Error, Result};

fn valid(p: [u32; 3], n: usize) -> bool {
    n > 0 && p.iter().all(|&x| x >= 1 && x as usize <= n)
}

fn exact_quotient(num: BigUint, den: BigUint) -> Result<BigUint> {
    let (q, r) = num.div_rem(&den);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::Internal("count is not an integer".into()))
    }
}

/// `C(N−1, p₃−1) Σ_a C(N−p₂, p₁−1−a) C(N−p₃, a) C(N−1−a, N−p₂)`, the integer
/// factor multiplying `binom(x₁,p₁)binom(x₂,p₂)binom(x₃,p₃)` in the polynomial
/// identity for `Σ M x^n / N!²`.
pub fn theorem1_factor(p: [u32; 3], n: usize) -> BigUint {
    if !valid(p, n) {
        return BigUint::zero();
    }
    let [p1, p2, p3] = p.map(i64::from);
    let n = n as i64;
    let sum: BigUint = (0..p1)
        .map(|a| binomial(n - p2, p1 - 1 - a) * binomial(n - p3, a) * binomial(n - 1 - a, n - p2))
        .sum();
    binomial(n - 1, p3 - 1) * sum
}

/// Size of the image set: `N!²/(p₁!p₂!p₃!)` times [`theorem1_factor`].
/// Zero unless `1 ≤ pᵢ ≤ N`.
pub fn i_count_formula(p: [u32; 3], n: usize) -> Result<BigUint> {
    if !valid(p, n) {
        return Ok(BigUint::zero());
    }
    let f = factorial(n as u64);
    let den: BigUint = p.iter().map(|&x| factorial(x as u64)).product();
    exact_quotient(&f * &f * theorem1_factor(p, n), den)
}

/// `N!²/(p₁!p₂!p₃!) Σ_{a,b,c} C(N−1; a, b, c, p₁−1−a−c, p₂−1−a−b, p₃−1−b−c)`,
/// symmetric in `p`.
pub fn jackson_symmetric(p: [u32; 3], n: usize) -> Result<BigUint> {
    if !valid(p, n) {
        return Ok(BigUint::zero());
    }
    let [p1, p2, p3] = p.map(i64::from);
    let n = n as i64;
    let mut sum = BigUint::zero();
    for a in 0..p1.min(p2) {
        for b in 0..p2.min(p3) {
            for c in 0..p3.min(p1) {
                sum += multinomial(n - 1, &[a, b, c, p1 - 1 - a - c, p2 - 1 - a - b, p3 - 1 - b - c]);
            }
        }
    }
    let f = factorial(n as u64);
    let den: BigUint = p.iter().map(|&x| factorial(x as u64)).product();
    exact_quotient(&f * &f * sum, den)
}

/// `Σ S(n₁,p₁)S(n₂,p₂)S(n₃,p₃) M(n₁,n₂,n₃,N)` over a precomputed table.
pub fn cc_count_from_table(p: [u32; 3], table: &MTable) -> BigUint {
    table
        .rows()
        .map(|(n1, n2, n3, m)| {
            stirling2(n1 as usize, p[0] as usize)
                * stirling2(n2 as usize, p[1] as usize)
                * stirling2(n3 as usize, p[2] as usize)
                * m
        })
        .sum()
}

/// `|CC(p₁, p₂, p₃, N)|` through the Stirling-weighted brute-force table.
pub fn cc_count_stirling(p: [u32; 3], n: usize, max_n: usize) -> Result<BigUint> {
    Ok(cc_count_from_table(p, &m_bruteforce(n, max_n)?))
}
