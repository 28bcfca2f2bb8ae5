use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;

use num_bigint::BigUint;
use num_traits::Signed;

use super::TreeProfile;
use crate::algebra::{SeriesShape, TruncatedSeries};
use crate::{Error, Result};

/// Largest number of monomials a shape may admit before [`gf_coefficients`] refuses.
pub const GF_TERM_BUDGET: u64 = 200_000;

/// Truncation for the tree generating functions in `x₁, x₂, x₃` (vertex colors)
/// and `y₁, y₂, y₃` (flagged white, black, grey vertices).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GfCaps {
    pub x: [u32; 3],
    pub y: [u32; 3],
    /// Optional cap on `p₁ + p₂ + p₃`.
    pub total: Option<u32>,
}

impl GfCaps {
    /// Every profile with at most `t` vertices. A flag needs its own vertex and an
    /// unflagged child, so no color carries more than `(t − 1) / 2` flags.
    pub fn total_vertices(t: u32) -> Self {
        let y = t.saturating_sub(1) / 2;
        Self {
            x: [t; 3],
            y: [y; 3],
            total: Some(t),
        }
    }

    fn shape(&self) -> SeriesShape {
        let caps = vec![self.x[0], self.x[1], self.x[2], self.y[0], self.y[1], self.y[2]];
        let shape = SeriesShape::new(caps);
        match self.total {
            Some(t) => shape.with_total_cap(3, t),
            None => shape,
        }
    }

    /// Upper bound on the number of admissible monomials.
    fn term_bound(&self) -> u64 {
        let y: u64 = self.y.iter().map(|&c| c as u64 + 1).product();
        let x_box: u64 = self.x.iter().map(|&c| c as u64 + 1).product();
        let x = match self.total {
            Some(t) => {
                let t = t as u64;
                x_box.min((t + 1) * (t + 2) * (t + 3) / 6)
            }
            None => x_box,
        };
        x.saturating_mul(y)
    }

    fn sum(&self) -> u32 {
        self.x.iter().chain(&self.y).sum()
    }
}

/// Solves the fixed point
///
/// ```text
/// W = x₁ / (1 − B(1 + G·y₂))
/// B = x₂ / (1 − G(1 + W·y₃))
/// G = x₃ / (1 − W(1 + B·y₁))
/// ```
///
/// from `W = B = G = 0` under `caps` and returns every nonzero coefficient of `W`,
/// keyed by the profile its monomial encodes.
pub fn gf_coefficients(caps: GfCaps) -> Result<BTreeMap<TreeProfile, BigUint>> {
    if caps.term_bound() > GF_TERM_BUDGET {
        return Err(Error::LimitExceeded {
            requested: caps.term_bound() as usize,
            limit: GF_TERM_BUDGET as usize,
        });
    }
    let shape = caps.shape();
    let one = TruncatedSeries::one(&shape);
    let var = |i: usize| TruncatedSeries::variable(&shape, i);
    let (x1, x2, x3, y1, y2, y3) = (var(0), var(1), var(2), var(3), var(4), var(5));

    let step = |w: &TruncatedSeries, b: &TruncatedSeries, g: &TruncatedSeries| -> Result<[TruncatedSeries; 3]> {
        let side = |parent_x: &TruncatedSeries,
                    child: &TruncatedSeries,
                    grandchild: &TruncatedSeries,
                    y: &TruncatedSeries|
         -> Result<TruncatedSeries> {
            let inner = one.add(&grandchild.mul(y)?)?;
            let denom = one.sub(&child.mul(&inner)?)?;
            parent_x.mul(&denom.reciprocal()?)
        };
        Ok([side(&x1, b, g, &y2)?, side(&x2, g, w, &y3)?, side(&x3, w, b, &y1)?])
    };

    let mut state = [
        TruncatedSeries::zero(&shape),
        TruncatedSeries::zero(&shape),
        TruncatedSeries::zero(&shape),
    ];
    let max_iter = caps.sum() as usize + 1;
    let mut stable = false;
    for _ in 0..max_iter {
        let next = step(&state[0], &state[1], &state[2])?;
        if next == state {
            stable = true;
            break;
        }
        state = next;
    }
    // one extra iteration must leave every kept coefficient unchanged
    if !stable || step(&state[0], &state[1], &state[2])? != state {
        return Err(Error::Internal(format!(
            "fixed point did not stabilize within {max_iter} iterations"
        )));
    }

    let mut out = BTreeMap::new();
    for (exps, c) in state[0].terms() {
        if !c.is_integer() || c.is_negative() {
            return Err(Error::Internal(format!("coefficient {c} is not a count")));
        }
        let count = c.to_integer().to_biguint().expect("nonnegative");
        let pr = TreeProfile::new(exps[0], exps[1], exps[2], exps[3], exps[4], exps[5]);
        out.insert(pr, count);
    }
    Ok(out)
}
