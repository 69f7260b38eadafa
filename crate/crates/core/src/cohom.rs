//! Line-bundle cohomology on `S(a, b)`.
//!
//! For `c >= 0` the direct image of `O_S(c, d)` to `P¹` splits as
//! `⊕_{j=0..c} O(d - j·e)`; `c = -1` has vanishing direct images; `c <= -2`
//! is reduced to the first case by Serre duality with `K = (-2, -(e + 2))`.

use std::ops::RangeInclusive;

use crate::arith::{add, div_exact, mul, narrow, sub};
use crate::chow::{intersect, DivisorClass, ScrollSurface};
use crate::error::{Error, Result};

/// Upper bound on the number of monomials [`h0_oracle`] will enumerate.
pub const ORACLE_MONOMIAL_LIMIT: u64 = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CohomologyVector {
    pub h0: i64,
    pub h1: i64,
    pub h2: i64,
    pub chi: i64,
}

impl CohomologyVector {
    fn from_dims(h0: i64, h1: i64, h2: i64) -> Result<Self> {
        let chi = narrow(add(sub(h0 as i128, h1 as i128)?, h2 as i128)?)?;
        Ok(CohomologyVector { h0, h1, h2, chi })
    }

    pub fn get(&self, i: usize) -> i64 {
        match i {
            0 => self.h0,
            1 => self.h1,
            2 => self.h2,
            _ => 0,
        }
    }
}

/// `(h⁰, h¹)` of `⊕_{j=0..c} O_P1(d - j·e)` for `c >= 0`, `e >= 0`.
fn split_pieces(c: i64, d: i64, e: i64) -> Result<(i128, i128)> {
    let (c, d, e) = (c as i128, d as i128, e as i128);
    let h0 = if d < 0 {
        0
    } else {
        // Piece j contributes d - j·e + 1 while that is positive.
        let last = if e == 0 { c } else { c.min(d / e) };
        let k = last + 1;
        sub(
            mul(k, d + 1)?,
            mul(e, div_exact(mul(k, k - 1)?, 2, "triangular")?)?,
        )?
    };
    let triangular = div_exact(mul(c, c + 1)?, 2, "triangular")?;
    let euler = sub(mul(c + 1, d + 1)?, mul(e, triangular)?)?;
    Ok((h0, sub(h0, euler)?))
}

/// `h⁰, h¹, h²` and `χ` of `O_S(D)`.
pub fn cohomology(s: &ScrollSurface, d: DivisorClass) -> Result<CohomologyVector> {
    let v = raw_cohomology(s, d)?;
    let rr = riemann_roch_chi(s, d)?;
    if v.chi != rr {
        return Err(Error::internal(format!(
            "cohomology of {d} on {s}: h0-h1+h2 = {} but Riemann-Roch gives {rr}",
            v.chi
        )));
    }
    Ok(v)
}

fn raw_cohomology(s: &ScrollSurface, d: DivisorClass) -> Result<CohomologyVector> {
    match d.c {
        c if c >= 0 => {
            let (h0, h1) = split_pieces(c, d.d, s.e())?;
            CohomologyVector::from_dims(narrow(h0)?, narrow(h1)?, 0)
        }
        -1 => CohomologyVector::from_dims(0, 0, 0),
        _ => {
            let dual = s.canonical().checked_sub(d)?;
            let v = raw_cohomology(s, dual)?;
            CohomologyVector::from_dims(v.h2, v.h1, v.h0)
        }
    }
}

pub fn h0(s: &ScrollSurface, d: DivisorClass) -> Result<i64> {
    Ok(cohomology(s, d)?.h0)
}

pub fn h1(s: &ScrollSurface, d: DivisorClass) -> Result<i64> {
    Ok(cohomology(s, d)?.h1)
}

pub fn h2(s: &ScrollSurface, d: DivisorClass) -> Result<i64> {
    Ok(cohomology(s, d)?.h2)
}

/// `χ(O_S(D)) = 1 + ½·D·(D + c₁)`.
pub fn riemann_roch_chi(s: &ScrollSurface, d: DivisorClass) -> Result<i64> {
    let prod = intersect(s, d, d.checked_add(s.c1())?)? as i128;
    narrow(add(div_exact(prod, 2, "Riemann-Roch D·(D + c1)")?, 1)?)
}

/// Effective (the empty divisor included) iff `c >= 0` and `d >= 0`.
pub fn is_effective(_s: &ScrollSurface, d: DivisorClass) -> bool {
    d.c >= 0 && d.d >= 0
}

/// Effective and not the zero class.
pub fn is_nontrivial_effective(s: &ScrollSurface, d: DivisorClass) -> bool {
    is_effective(s, d) && !d.is_zero()
}

/// For an effective class: `h¹ = h² = 0` iff `d >= c·e - 1`.
pub fn has_natural_cohomology(s: &ScrollSurface, d: DivisorClass) -> Result<bool> {
    if !is_effective(s, d) {
        return Err(Error::precondition(format!("{d} is not effective")));
    }
    let bound = sub(mul(d.c as i128, s.e() as i128)?, 1)?;
    Ok(d.d as i128 >= bound)
}

/// Counts sections of `O_S(c, d)` by listing Cox-ring monomials
/// `u^i v^j w^k z^l` with `k + l = c` and `i + j = d - l·e`, one at a time.
///
/// `u, v` have class `f`, `w` has class `η` and `z` has class `η + e·f`.
pub fn h0_oracle(s: &ScrollSurface, d: DivisorClass) -> Result<u64> {
    if d.c < 0 {
        return Err(Error::precondition("oracle needs c >= 0"));
    }
    let (c, e) = (d.c, s.e());
    // Cheap a-priori bound on the number of monomials.
    let per_l = (d.d.max(-1) as u128) + 1;
    let estimate = per_l.saturating_mul(c as u128 + 1);
    if estimate > ORACLE_MONOMIAL_LIMIT as u128 {
        return Err(Error::EnumerationBound(format!(
            "up to {estimate} monomials for {d}, limit {ORACLE_MONOMIAL_LIMIT}"
        )));
    }
    let mut count = 0u64;
    for l in 0..=c {
        let k = c - l;
        debug_assert_eq!(k + l, c);
        let fiber_degree = d.d - l * e;
        for i in 0..=fiber_degree.max(-1) {
            let j = fiber_degree - i;
            if j >= 0 {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Checks `h¹(O_S(l·h)) = 0` for every `l` in the range.
pub fn scroll_is_acm_check(s: &ScrollSurface, l_range: RangeInclusive<i64>) -> Result<bool> {
    for l in l_range {
        if h1(s, s.h().checked_scale(l)?)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}
