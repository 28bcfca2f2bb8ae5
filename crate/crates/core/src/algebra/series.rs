use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Which monomials a [`TruncatedSeries`] keeps: a degree cap per variable and an
/// optional cap on the total degree of a chosen prefix of the variables.
///
/// The kept monomials form a down-set, so truncation commutes with the ring operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesShape {
    caps: Vec<u32>,
    total_cap: Option<(usize, u32)>,
}

impl SeriesShape {
    pub fn new(caps: Vec<u32>) -> Self {
        Self { caps, total_cap: None }
    }

    /// Additionally drop monomials whose degree in the first `vars` variables exceeds `cap`.
    pub fn with_total_cap(mut self, vars: usize, cap: u32) -> Self {
        self.total_cap = Some((vars.min(self.caps.len()), cap));
        self
    }

    pub fn vars(&self) -> usize {
        self.caps.len()
    }

    pub fn caps(&self) -> &[u32] {
        &self.caps
    }

    pub fn admits(&self, exps: &[u32]) -> bool {
        exps.len() == self.caps.len()
            && exps.iter().zip(&self.caps).all(|(e, c)| e <= c)
            && self
                .total_cap
                .is_none_or(|(k, cap)| exps[..k].iter().sum::<u32>() <= cap)
    }

    /// Upper bound on the total degree of any kept monomial.
    pub fn max_total_degree(&self) -> u32 {
        let all: u32 = self.caps.iter().sum();
        match self.total_cap {
            Some((k, cap)) => all.min(cap + self.caps[k..].iter().sum::<u32>()),
            None => all,
        }
    }
}

/// A multivariate power series with exact rational coefficients, truncated to a
/// [`SeriesShape`]. Absent monomials have coefficient zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    shape: SeriesShape,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl TruncatedSeries {
    pub fn zero(shape: &SeriesShape) -> Self {
        Self {
            shape: shape.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(shape: &SeriesShape, c: BigRational) -> Self {
        let mut s = Self::zero(shape);
        s.insert(vec![0; shape.vars()], c);
        s
    }

    pub fn one(shape: &SeriesShape) -> Self {
        Self::constant(shape, BigRational::one())
    }

    /// The variable with index `var` (0-based), or zero if its cap is 0.
    pub fn variable(shape: &SeriesShape, var: usize) -> Self {
        let mut exps = vec![0; shape.vars()];
        exps[var] = 1;
        Self::monomial(shape, exps, BigRational::one())
    }

    pub fn monomial(shape: &SeriesShape, exps: Vec<u32>, c: BigRational) -> Self {
        let mut s = Self::zero(shape);
        s.insert(exps, c);
        s
    }

    /// Adds `c` to the coefficient of `exps`; monomials outside the shape are dropped.
    pub fn insert(&mut self, exps: Vec<u32>, c: BigRational) {
        if c.is_zero() || !self.shape.admits(&exps) {
            return;
        }
        accumulate(&mut self.terms, exps, c);
    }

    pub fn shape(&self) -> &SeriesShape {
        &self.shape
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigRational {
        self.terms.get(exps).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Nonzero terms in lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigRational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.is_empty()
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.shape == other.shape {
            Ok(())
        } else {
            Err(Error::ShapeMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            accumulate(&mut out.terms, e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            return Self::zero(&self.shape);
        }
        Self {
            shape: self.shape.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut terms = BTreeMap::new();
        let mut exps = vec![0u32; self.shape.vars()];
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                for (slot, (a, b)) in exps.iter_mut().zip(e1.iter().zip(e2)) {
                    *slot = a + b;
                }
                if self.shape.admits(&exps) {
                    accumulate(&mut terms, exps.clone(), c1 * c2);
                }
            }
        }
        Ok(Self {
            shape: self.shape.clone(),
            terms,
        })
    }

    /// Multiplicative inverse modulo the truncation; needs a nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = self.coefficient(&vec![0; self.shape.vars()]);
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv_c0 = c0.recip();
        // s = c0 (1 - u) with u nilpotent, so 1/s = (1/c0) Σ u^k
        let u = Self::one(&self.shape).sub(&self.scale(&inv_c0))?;
        let mut acc = Self::zero(&self.shape);
        let mut power = Self::one(&self.shape);
        while !power.is_zero() {
            acc = acc.add(&power)?;
            power = power.mul(&u)?;
        }
        Ok(acc.scale(&inv_c0))
    }

    /// Evaluates a univariate-or-multivariate series at rational point `x`.
    pub fn evaluate(&self, x: &[BigRational]) -> BigRational {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(x)
                    .fold(c.clone(), |acc, (&k, xi)| acc * num_traits::pow(xi.clone(), k as usize))
            })
            .fold(BigRational::zero(), |a, b| a + b)
    }
}

fn accumulate(terms: &mut BTreeMap<Vec<u32>, BigRational>, exps: Vec<u32>, c: BigRational) {
    use alloc::collections::btree_map::Entry;
    match terms.entry(exps) {
        Entry::Vacant(v) => {
            if !c.is_zero() {
                v.insert(c);
            }
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Integer as an exact rational.
pub fn rational(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

impl fmt::Display for TruncatedSeries {
    /// Human-readable sum with variables named `x1, x2, …`, highest exponents first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (exps, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mag = c.abs();
            let mut vars = String::new();
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !vars.is_empty() {
                    vars.push('*');
                }
                vars.push_str(&alloc::format!("x{}", i + 1));
                if e > 1 {
                    vars.push_str(&alloc::format!("^{e}"));
                }
            }
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&vars)?;
            } else {
                write!(f, "{mag}*{vars}")?;
            }
        }
        Ok(())
    }
}
