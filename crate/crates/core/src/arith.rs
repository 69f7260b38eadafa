//! Checked wide-integer helpers. Everything is computed in `i128` and
//! narrowed back to `i64` at the API boundary.

use crate::error::{Error, Result};

pub(crate) fn add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn sub(a: i128, b: i128) -> Result<i128> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

pub(crate) fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub(crate) fn narrow(x: i128) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow)
}

/// Exact division; a nonzero remainder is an internal-consistency failure.
pub(crate) fn div_exact(num: i128, den: i128, what: &str) -> Result<i128> {
    if den == 0 {
        return Err(Error::internal(format!("{what}: division by zero")));
    }
    if num % den != 0 {
        return Err(Error::internal(format!(
            "{what}: {num} is not divisible by {den}"
        )));
    }
    Ok(num / den)
}

/// `C(k, 3)` for `k >= 3`, zero otherwise: the dimension of the space of
/// degree `k - 3` forms in four variables.
pub fn binom3(k: i64) -> Result<i64> {
    if k < 3 {
        return Ok(0);
    }
    cubic_poly(k)
}

/// `k(k-1)(k-2)/6` evaluated for every integer `k`; equals `χ(O_P3(k - 3))`.
pub fn cubic_poly(k: i64) -> Result<i64> {
    let k = k as i128;
    let p = mul(mul(k, k - 1)?, k - 2)?;
    narrow(div_exact(p, 6, "cubic polynomial")?)
}
