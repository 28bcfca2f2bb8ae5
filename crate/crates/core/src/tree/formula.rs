use alloc::format;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::TreeProfile;
use crate::algebra::multinomial;
use crate::algebra::numbers::to_rational;
use crate::{Error, Result};

/// Closed-form `|CT(p₁, p₂, p₃, a, b, c)|`:
///
/// ```text
/// (a(b − p₃) + p₂p₃) / (p₁p₂p₃)
///   · C(p₁+p₂−1−a; p₁−1, p₂−a−b)
///   · C(p₂+p₃−1−b; p₂−1, p₃−b−c)
///   · C(p₁+p₃−2−c; p₃−1, p₁−1−a−c)
/// ```
///
/// with trinomials vanishing on any negative part. Needs every `pᵢ ≥ 1`.
pub fn ct_count_formula(pr: TreeProfile) -> Result<BigInt> {
    let TreeProfile { p1, p2, p3, a, b, c } = pr;
    if p1 == 0 || p2 == 0 || p3 == 0 {
        return Err(Error::DegenerateProfile([p1, p2, p3]));
    }
    let [p1, p2, p3, a, b, c] = [p1, p2, p3, a, b, c].map(i64::from);
    let trinomials = multinomial(p1 + p2 - 1 - a, &[p1 - 1, p2 - a - b])
        * multinomial(p2 + p3 - 1 - b, &[p2 - 1, p3 - b - c])
        * multinomial(p1 + p3 - 2 - c, &[p3 - 1, p1 - 1 - a - c]);
    if trinomials.is_zero() {
        return Ok(BigInt::zero());
    }
    let prefactor = BigRational::new(BigInt::from(a * (b - p3) + p2 * p3), BigInt::from(p1 * p2 * p3));
    let value = prefactor * to_rational(&trinomials);
    if !value.is_integer() {
        return Err(Error::Internal(format!("non-integral tree count {value} for {pr}")));
    }
    Ok(value.to_integer())
}
