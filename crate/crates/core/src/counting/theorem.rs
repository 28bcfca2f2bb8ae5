use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::formulas::{cc_count_from_table, theorem1_factor};
use super::mtable::{m_bruteforce, MTable};
use crate::algebra::numbers::{binomial_poly, factorial, falling_factorial, to_rational};
use crate::algebra::{SeriesShape, TruncatedSeries};
use crate::Result;

/// Two trivariate polynomials expected to be equal coefficient by coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialCheck {
    pub lhs: TruncatedSeries,
    pub rhs: TruncatedSeries,
}

impl PolynomialCheck {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }

    /// The lexicographically first monomial where the sides differ.
    pub fn first_mismatch(&self) -> Option<(Vec<u32>, BigRational, BigRational)> {
        let mut keys: Vec<Vec<u32>> = self
            .lhs
            .terms()
            .chain(self.rhs.terms())
            .map(|(e, _)| e.to_vec())
            .collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().find_map(|e| {
            let (l, r) = (self.lhs.coefficient(&e), self.rhs.coefficient(&e));
            (l != r).then_some((e, l, r))
        })
    }
}

/// Both bridges between the brute-force table and the closed forms at one `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem1Report {
    pub n: usize,
    /// `Σ M x^n / N!²` against `Σ_p binom(x₁,p₁)binom(x₂,p₂)binom(x₃,p₃) · factor(p)`.
    pub binomial_form: PolynomialCheck,
    /// `Σ M x^n` against `Σ_p |CC(p)| (x₁)_{p₁}(x₂)_{p₂}(x₃)_{p₃}` with Stirling-weighted `|CC|`.
    pub falling_form: PolynomialCheck,
}

impl Theorem1Report {
    pub fn passed(&self) -> bool {
        self.binomial_form.passed() && self.falling_form.passed()
    }
}

pub fn theorem1_check(n: usize, max_n: usize) -> Result<Theorem1Report> {
    theorem1_check_table(&m_bruteforce(n, max_n)?)
}

/// Same as [`theorem1_check`] on an already computed table.
pub fn theorem1_check_table(table: &MTable) -> Result<Theorem1Report> {
    let n = table.n();
    let cap = n as u32;
    let shape = SeriesShape::new(vec![cap, cap, cap]);
    let f = factorial(n as u64);
    let norm = BigRational::new(BigInt::from(1), BigInt::from(&f * &f));

    let mut raw = TruncatedSeries::zero(&shape);
    for (n1, n2, n3, m) in table.rows() {
        raw.insert(vec![n1, n2, n3], to_rational(m));
    }

    let polys = |build: &dyn Fn(usize, u32) -> Result<TruncatedSeries>| -> Result<Vec<Vec<TruncatedSeries>>> {
        (0..3).map(|var| (0..=cap).map(|p| build(var, p)).collect()).collect()
    };
    let binoms = polys(&|var, p| binomial_poly(&shape, var, p))?;
    let fallings = polys(&|var, p| falling_factorial(&shape, var, p))?;

    let mut binomial_rhs = TruncatedSeries::zero(&shape);
    let mut falling_rhs = TruncatedSeries::zero(&shape);
    for p1 in 1..=cap {
        for p2 in 1..=cap {
            for p3 in 1..=cap {
                let p = [p1, p2, p3];
                let k = theorem1_factor(p, n);
                let product = |v: &[Vec<TruncatedSeries>]| -> Result<TruncatedSeries> {
                    v[0][p1 as usize].mul(&v[1][p2 as usize])?.mul(&v[2][p3 as usize])
                };
                if k != 0u32.into() {
                    binomial_rhs = binomial_rhs.add(&product(&binoms)?.scale(&to_rational(&k)))?;
                }
                let cc = cc_count_from_table(p, table);
                if cc != 0u32.into() {
                    falling_rhs = falling_rhs.add(&product(&fallings)?.scale(&to_rational(&cc)))?;
                }
            }
        }
    }
    Ok(Theorem1Report {
        n,
        binomial_form: PolynomialCheck {
            lhs: raw.scale(&norm),
            rhs: binomial_rhs,
        },
        falling_form: PolynomialCheck {
            lhs: raw,
            rhs: falling_rhs,
        },
    })
}
