//! Exact counting numbers: factorials, binomials with the zero-on-invalid
//! convention, implicit-remainder multinomials, Stirling numbers of the second
//! kind, and falling-factorial polynomials.

use alloc::vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::series::{rational, SeriesShape, TruncatedSeries};
use crate::{Error, Result};

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `C(n, k)`, zero unless `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `n! / (k₁!…k_m!(n − Σk)!)` with the remainder as an implicit last part.
/// Zero if `n < 0`, any part is negative, or the parts exceed `n`.
pub fn multinomial(n: i64, parts: &[i64]) -> BigUint {
    if n < 0 || parts.iter().any(|&k| k < 0) {
        return BigUint::zero();
    }
    let mut remaining = n;
    let mut acc = BigUint::one();
    for &k in parts {
        if k > remaining {
            return BigUint::zero();
        }
        acc *= binomial(remaining, k);
        remaining -= k;
    }
    acc
}

/// Stirling number of the second kind `S(a, b)`.
pub fn stirling2(a: usize, b: usize) -> BigUint {
    if b > a {
        return BigUint::zero();
    }
    // row-by-row S(i, j) = j S(i-1, j) + S(i-1, j-1)
    let mut row = vec![BigUint::zero(); b + 1];
    row[0] = BigUint::one();
    for _ in 0..a {
        for j in (1..=b).rev() {
            row[j] = &row[j] * j + &row[j - 1];
        }
        row[0] = BigUint::zero();
    }
    row.swap_remove(b)
}

/// The falling factorial `(x)_ℓ = x(x−1)…(x−ℓ+1)` in variable `var` of `shape`.
pub fn falling_factorial(shape: &SeriesShape, var: usize, ell: u32) -> Result<TruncatedSeries> {
    let x = TruncatedSeries::variable(shape, var);
    let mut acc = TruncatedSeries::one(shape);
    for j in 0..ell {
        let factor = x.sub(&TruncatedSeries::constant(shape, rational(j)))?;
        acc = acc.mul(&factor)?;
    }
    Ok(acc)
}

/// `binom(x, p) = (x)_p / p!` in variable `var` of `shape`.
pub fn binomial_poly(shape: &SeriesShape, var: usize, p: u32) -> Result<TruncatedSeries> {
    let f = factorial(p as u64);
    let inv = BigRational::new(BigInt::one(), BigInt::from(f));
    Ok(falling_factorial(shape, var, p)?.scale(&inv))
}

/// Default cap for [`binomial_poly_eval_check`].
pub const FALLING_FACTORIAL_CHECK_CAP: usize = 12;

/// Outcome of expanding `Σ_b S(a, b)(x)_b` and comparing it with `x^a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FallingFactorialCheck {
    pub a: usize,
    pub lhs: TruncatedSeries,
    pub rhs: TruncatedSeries,
}

impl FallingFactorialCheck {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Builds `Σ_{b=1..a} S(a,b)(x)_b` and `x^a` as exact univariate polynomials.
pub fn binomial_poly_eval_check(a: usize, cap: usize) -> Result<FallingFactorialCheck> {
    if a > cap {
        return Err(Error::LimitExceeded {
            requested: a,
            limit: cap,
        });
    }
    let shape = SeriesShape::new(vec![a as u32]);
    let mut lhs = TruncatedSeries::zero(&shape);
    for b in 0..=a {
        let s = BigRational::from_integer(BigInt::from(stirling2(a, b)));
        lhs = lhs.add(&falling_factorial(&shape, 0, b as u32)?.scale(&s))?;
    }
    let rhs = TruncatedSeries::monomial(&shape, vec![a as u32], BigRational::one());
    Ok(FallingFactorialCheck { a, lhs, rhs })
}

/// Integer-valued falling factorial, for evaluation checks.
pub fn falling_factorial_value(x: i64, ell: u32) -> BigInt {
    (0..ell as i64).fold(BigInt::one(), |acc, j| acc * (x - j))
}

pub(crate) fn to_rational(n: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(n.clone()))
}

/// Product of factorials, handy for normalizing counts.
pub fn factorial_product(ns: &[u64]) -> BigUint {
    ns.iter().map(|&n| factorial(n)).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Brute force: count surjections [a] → [b] by enumeration, divide by b!.
    fn stirling_oracle(a: usize, b: usize) -> u64 {
        if b == 0 {
            return u64::from(a == 0);
        }
        let total = (b as u64).pow(a as u32);
        let mut surj = 0u64;
        for code in 0..total {
            let mut hit = vec![false; b];
            let mut c = code;
            for _ in 0..a {
                hit[(c % b as u64) as usize] = true;
                c /= b as u64;
            }
            if hit.iter().all(|&h| h) {
                surj += 1;
            }
        }
        surj / (1..=b as u64).product::<u64>()
    }

    #[test]
    fn stirling_values() {
        assert_eq!(stirling_oracle(4, 2), 7);
        assert_eq!(stirling2(4, 2), BigUint::from(7u32));
        assert_eq!(stirling2(0, 0), BigUint::one());
        assert_eq!(stirling2(3, 0), BigUint::zero());
        assert_eq!(stirling2(2, 3), BigUint::zero());
        for a in 1..8 {
            assert_eq!(stirling2(a, 1), BigUint::one());
            assert_eq!(stirling2(a, a), BigUint::one());
            for b in 0..=a {
                assert_eq!(stirling2(a, b), BigUint::from(stirling_oracle(a, b)), "S({a},{b})");
            }
        }
    }

    #[test]
    fn multinomial_values() {
        // 4!/(1!·1!·2!) = 24/2
        assert_eq!(multinomial(4, &[1, 1]), BigUint::from(12u32));
        for n in 0..6 {
            assert_eq!(multinomial(n, &[n]), BigUint::one());
        }
        assert_eq!(multinomial(3, &[2, 2]), BigUint::zero());
        assert_eq!(multinomial(3, &[-1, 2]), BigUint::zero());
        assert_eq!(multinomial(-1, &[]), BigUint::zero());
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(5, 6), BigUint::zero());
        assert_eq!(binomial(-2, 0), BigUint::zero());
    }

    #[test]
    fn falling_factorial_polys() {
        let shape = SeriesShape::new(vec![3]);
        let x = TruncatedSeries::variable(&shape, 0);
        assert_eq!(falling_factorial(&shape, 0, 1).unwrap(), x);
        let b2 = binomial_poly(&shape, 0, 2).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(b2.coefficient(&[2]), half);
        assert_eq!(b2.coefficient(&[1]), -half.clone());
        assert_eq!(b2.coefficient(&[0]), BigRational::zero());
    }

    #[test]
    fn stirling_expansion_of_cube() {
        // (x)_1 + 3(x)_2 + (x)_3 = x + 3x² − 3x + x³ − 3x² + 2x = x³
        let check = binomial_poly_eval_check(3, FALLING_FACTORIAL_CHECK_CAP).unwrap();
        assert!(check.passed());
        for a in 0..=FALLING_FACTORIAL_CHECK_CAP {
            assert!(binomial_poly_eval_check(a, FALLING_FACTORIAL_CHECK_CAP)
                .unwrap()
                .passed());
        }
        assert!(binomial_poly_eval_check(13, FALLING_FACTORIAL_CHECK_CAP).is_err());
    }

    #[test]
    fn stirling_sum_at_integer_points() {
        for a in 0..=10usize {
            for x in 1..=(a as i64 + 1) {
                let sum: BigInt = (0..=a)
                    .map(|b| BigInt::from(stirling2(a, b)) * falling_factorial_value(x, b as u32))
                    .sum();
                assert_eq!(sum, num_traits::pow(BigInt::from(x), a));
            }
        }
    }

    proptest! {
        #[test]
        fn multinomial_is_symmetric(n in 0i64..12, mut parts in proptest::collection::vec(0i64..6, 0..4), seed in 0usize..24) {
            let base = multinomial(n, &parts);
            let len = parts.len();
            if len > 1 {
                parts.rotate_left(seed % len);
                parts.swap(0, len - 1);
            }
            prop_assert_eq!(multinomial(n, &parts), base);
        }
    }
}
