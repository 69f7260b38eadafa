//! Invariants of a curve class on `S(a, b)` and of its image under a general
//! projection to `P³`.
//!
//! The `P³` functions assume the image curve `C` is linked by `O_X(m)` to a
//! preserved curve (a curve mapped isomorphically by `S → X`). For smooth
//! curves on the ruled cubic this holds with `m = d`.

use num_rational::Ratio;

use crate::arith::{binom3, narrow};
use crate::chow::{adjunction_genus, degree_in_p3, intersect, DivisorClass, ScrollSurface};
use crate::cohom::{h0, h1, h2, is_effective};
use crate::error::{Error, Result};

/// A divisor class on a fixed scroll, viewed as a curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CurveClass {
    pub surface: ScrollSurface,
    pub cls: DivisorClass,
}

impl CurveClass {
    pub fn new(surface: ScrollSurface, cls: DivisorClass) -> Self {
        CurveClass { surface, cls }
    }

    pub fn degree(&self) -> Result<i64> {
        degree_in_p3(&self.surface, self.cls)
    }

    pub fn genus(&self) -> Result<i64> {
        adjunction_genus(&self.surface, self.cls)
    }

    pub fn is_smooth_class(&self) -> bool {
        smooth_class(&self.surface, self.cls)
    }
}

/// Values of an integer function on `[n_min, n_max]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FunctionTable {
    pub n_min: i64,
    pub n_max: i64,
    pub values: Vec<i64>,
}

impl FunctionTable {
    /// Evaluates `f` on every `n` in the range; negative values are rejected.
    pub fn tabulate<F>(n_min: i64, n_max: i64, mut f: F) -> Result<Self>
    where
        F: FnMut(i64) -> Result<i64>,
    {
        if n_max < n_min {
            return Err(Error::InvalidInput(format!(
                "empty table range [{n_min}, {n_max}]"
            )));
        }
        let values = (n_min..=n_max)
            .map(|n| {
                let v = f(n)?;
                if v < 0 {
                    return Err(Error::internal(format!(
                        "negative table value {v} at n = {n}"
                    )));
                }
                Ok(v)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FunctionTable {
            n_min,
            n_max,
            values,
        })
    }

    pub fn get(&self, n: i64) -> Option<i64> {
        if n < self.n_min || n > self.n_max {
            return None;
        }
        self.values.get((n - self.n_min) as usize).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        (self.n_min..).zip(self.values.iter().copied())
    }

    pub fn is_identically_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// True if the last `k` entries are all zero.
    pub fn has_trailing_zeros(&self, k: usize) -> bool {
        self.values.len() >= k && self.values[self.values.len() - k..].iter().all(|&v| v == 0)
    }

    /// Smallest `n` with a nonzero value.
    pub fn first_nonzero(&self) -> Option<i64> {
        self.iter().find(|&(_, v)| v != 0).map(|(n, _)| n)
    }
}

/// Whether the linear system `|c·η + d·f|` has an irreducible nonsingular
/// member.
pub fn smooth_class(s: &ScrollSurface, d: DivisorClass) -> bool {
    let (c, dd, e) = (d.c, d.d, s.e());
    if d == DivisorClass::ETA || d == DivisorClass::FIBER {
        return true;
    }
    if c <= 0 {
        return false;
    }
    if e > 0 {
        (c as i128) * (e as i128) <= dd as i128
    } else {
        dd > 0
    }
}

fn require_projectable(s: &ScrollSurface) -> Result<()> {
    if s.degree() < 3 {
        return Err(Error::precondition("h.M2 = 0 on S(1,1); no double curve"));
    }
    Ok(())
}

/// The linkage degree
/// `m = (2·C·M₂ - 2·(g(C) - g(C̃))) / (h·M₂)`.
///
/// `genus_of_image` is the arithmetic genus of the image curve in `P³`; for
/// preserved curves it equals the adjunction genus of `C`.
pub fn linkage_degree(
    s: &ScrollSurface,
    c: DivisorClass,
    genus_of_image: i64,
) -> Result<Ratio<i64>> {
    require_projectable(s)?;
    let m2 = s.m2();
    let cm2 = intersect(s, c, m2)? as i128;
    let g_tilde = adjunction_genus(s, c)? as i128;
    let num = 2 * cm2 - 2 * (genus_of_image as i128 - g_tilde);
    let den = intersect(s, s.h(), m2)? as i128;
    if den == 0 {
        return Err(Error::precondition("h.M2 = 0"));
    }
    Ok(Ratio::new(narrow(num)?, narrow(den)?))
}

/// `m` for a preserved curve of class `c`, if it is a positive integer.
pub fn preserved_linkage_degree(s: &ScrollSurface, c: DivisorClass) -> Result<Option<i64>> {
    let m = linkage_degree(s, c, adjunction_genus(s, c)?)?;
    Ok((m.is_integer() && *m.numer() > 0).then(|| m.to_integer()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TransversalLinkage {
    pub m: Ratio<i64>,
    pub m_is_positive_integer: bool,
    /// `m·h - C` when `m` is an integer.
    pub residual: Option<DivisorClass>,
    pub residual_effective: bool,
    pub residual_h0: Option<i64>,
    pub c_dot_m2: i64,
    pub hypothesis_satisfied: bool,
}

/// Evaluates the three conditions under which a curve meeting `M₂`
/// transversally has a link on `X`: `m = 2·C·M₂ / h·M₂` a positive integer,
/// `m·h - C` effective, and `h⁰(O_S(m·h - C)) > C·M₂`.
pub fn transversal_linkage_check(s: &ScrollSurface, c: DivisorClass) -> Result<TransversalLinkage> {
    require_projectable(s)?;
    if !is_effective(s, c) {
        return Err(Error::precondition(format!("{c} is not effective")));
    }
    let m2 = s.m2();
    let c_dot_m2 = intersect(s, c, m2)?;
    let m = Ratio::new(narrow(2 * c_dot_m2 as i128)?, intersect(s, s.h(), m2)?);
    let m_is_positive_integer = m.is_integer() && *m.numer() > 0;
    let residual = if m.is_integer() {
        Some(s.h().checked_scale(m.to_integer())?.checked_sub(c)?)
    } else {
        None
    };
    let residual_effective = residual.is_some_and(|r| is_effective(s, r));
    let residual_h0 = residual.map(|r| h0(s, r)).transpose()?;
    let hypothesis_satisfied =
        m_is_positive_integer && residual_effective && residual_h0.is_some_and(|v| v > c_dot_m2);
    Ok(TransversalLinkage {
        m,
        m_is_positive_integer,
        residual,
        residual_effective,
        residual_h0,
        c_dot_m2,
        hypothesis_satisfied,
    })
}

fn twist(s: &ScrollSurface, n: i64) -> Result<DivisorClass> {
    s.h().checked_scale(n)
}

/// Specialty `h¹(O_C(n)) = h²(O_S(nh - C̃)) - h²(O_S(nh))` of a preserved
/// curve.
pub fn specialty(s: &ScrollSurface, c_tilde: DivisorClass, n: i64) -> Result<i64> {
    let nh = twist(s, n)?;
    if h1(s, nh)? != 0 {
        return Err(Error::precondition(format!("h1(O_S({n}h)) != 0")));
    }
    let v = h2(s, nh.checked_sub(c_tilde)?)? - h2(s, nh)?;
    if v < 0 {
        return Err(Error::internal(format!(
            "negative specialty {v} at n = {n}"
        )));
    }
    Ok(v)
}

/// `h⁰(I_T(n))` for the complete intersection of a degree-`m` surface with
/// the degree-`deg` surface `X`.
pub fn complete_intersection_h0_ideal(m: i64, deg: i64, n: i64) -> Result<i64> {
    Ok(binom3(n - m + 3)? + binom3(n - deg + 3)? - binom3(n - m - deg + 3)?)
}

fn require_link_degree(m: i64) -> Result<()> {
    if m < 0 {
        return Err(Error::precondition(format!(
            "linkage degree m = {m} is negative"
        )));
    }
    Ok(())
}

/// Hilbert function `h⁰(I_C(n))` of the image of a curve with pullback class
/// `c_pullback`, linked by `O_X(m)` to a preserved curve.
pub fn hilbert_fn(s: &ScrollSurface, c_pullback: DivisorClass, m: i64, n: i64) -> Result<i64> {
    require_link_degree(m)?;
    let deg = s.degree();
    if h1(s, twist(s, deg + m - n - 4)?)? != 0 {
        return Err(Error::precondition(format!(
            "h1(O_S(({deg} + {m} - {n} - 4)h)) != 0"
        )));
    }
    let m2 = s.m2();
    let nh = twist(s, n)?;
    let v = complete_intersection_h0_ideal(m, deg, n)?
        + h0(s, nh.checked_sub(c_pullback)?.checked_sub(m2)?)?
        - h0(s, twist(s, n - m)?.checked_sub(m2)?)?;
    if v < 0 {
        return Err(Error::precondition(format!(
            "inconsistent linkage ({c_pullback}, m = {m}): h0(I_C({n})) = {v}"
        )));
    }
    Ok(v)
}

/// Rao function `h¹(I_C(n))` of the image of a preserved curve linked by
/// `O_X(m)` to a preserved curve.
pub fn rao_fn(s: &ScrollSurface, c_tilde: DivisorClass, m: i64, n: i64) -> Result<i64> {
    require_link_degree(m)?;
    let nh = twist(s, n)?;
    if h1(s, nh)? != 0 {
        return Err(Error::precondition(format!("h1(O_S({n}h)) != 0")));
    }
    let deg = s.degree();
    let m2 = s.m2();
    let residual = nh.checked_sub(c_tilde)?;
    let h0_structure_t = binom3(n + 3)? - complete_intersection_h0_ideal(m, deg, n)?;
    let v = h0(s, nh)? - h0(s, residual)? + h1(s, residual)? - h0_structure_t
        + h0(s, residual.checked_sub(m2)?)?
        - h0(s, twist(s, n - m)?.checked_sub(m2)?)?;
    if v < 0 {
        return Err(Error::precondition(format!(
            "inconsistent linkage ({c_tilde}, m = {m}): h1(I_C({n})) = {v}"
        )));
    }
    Ok(v)
}

/// Rao function of the curve in the scroll's own embedding `P^{a+b+1}`:
/// `h¹(O_S(nh - C))`.
pub fn rao_in_big_space(s: &ScrollSurface, c: DivisorClass, n: i64) -> Result<i64> {
    h1(s, twist(s, n)?.checked_sub(c)?)
}

fn require_ruled_cubic(s: &ScrollSurface) -> Result<()> {
    if (s.a(), s.b()) != (1, 2) {
        return Err(Error::precondition(format!("{s} is not S(1,2)")));
    }
    Ok(())
}

/// ACM criterion for a curve on `S(1,2) ⊂ P⁴`: `2c - 2 <= d <= 2c + 1`.
pub fn is_acm_in_big_space(s: &ScrollSurface, c: DivisorClass) -> Result<bool> {
    require_ruled_cubic(s)?;
    if !is_effective(s, c) {
        return Err(Error::precondition(format!("{c} is not effective")));
    }
    let (cc, d) = (c.c as i128, c.d as i128);
    Ok(2 * cc - 2 <= d && d <= 2 * cc + 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NormalBundleDims {
    pub h0: i64,
    pub h1: i64,
}

fn require_smooth(s: &ScrollSurface, c: DivisorClass) -> Result<()> {
    if !smooth_class(s, c) {
        return Err(Error::precondition(format!(
            "{c} has no smooth irreducible member on {s}"
        )));
    }
    Ok(())
}

/// Cohomology of the normal bundle of the image curve in `P³`:
/// `h¹ = h⁰(O_S(C̃ - 4h))` and `χ = 4·deg C`.
pub fn normal_bundle_dims(s: &ScrollSurface, c_tilde: DivisorClass) -> Result<NormalBundleDims> {
    require_smooth(s, c_tilde)?;
    let h1v = h0(s, c_tilde.checked_sub(twist(s, 4)?)?)?;
    if (c_tilde.c <= 3 || c_tilde.d < 4 * s.b()) && h1v != 0 {
        return Err(Error::internal(format!(
            "h1(N) = {h1v} for {c_tilde} although c <= 3 or d < 4b"
        )));
    }
    let deg = degree_in_p3(s, c_tilde)?;
    let h0v = narrow(4 * deg as i128 + h1v as i128)?;
    Ok(NormalBundleDims { h0: h0v, h1: h1v })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyGap {
    pub h0_normal: i64,
    pub curve_family_dim: i64,
    pub gap: i64,
}

/// Compares `h⁰(N_C)` with the dimension `dim|C̃| + 5a + 3b + 2` of the
/// family of projected curves.
pub fn family_gap(s: &ScrollSurface, c_tilde: DivisorClass) -> Result<FamilyGap> {
    let normal = normal_bundle_dims(s, c_tilde)?;
    let linear_system = h0(s, c_tilde)? - 1;
    let curve_family_dim = linear_system + crate::projection::surface_family_dimension(s);
    Ok(FamilyGap {
        h0_normal: normal.h0,
        curve_family_dim,
        gap: normal.h0 - curve_family_dim,
    })
}

/// Hilbert, Rao and specialty tables of a projected curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveTables {
    /// `h⁰(I_C(n))`
    pub hilbert: FunctionTable,
    /// `h¹(I_C(n))`
    pub rao: FunctionTable,
    /// `h¹(O_C(n))`
    pub specialty: FunctionTable,
}

/// Default upper end of the table window: `m + h·h + 2`.
pub fn default_table_bound(s: &ScrollSurface, m: i64) -> i64 {
    m + s.degree() + 2
}

pub fn curve_tables(
    s: &ScrollSurface,
    c_tilde: DivisorClass,
    m: i64,
    n_max: i64,
) -> Result<CurveTables> {
    Ok(CurveTables {
        hilbert: FunctionTable::tabulate(0, n_max, |n| hilbert_fn(s, c_tilde, m, n))?,
        rao: FunctionTable::tabulate(0, n_max, |n| rao_fn(s, c_tilde, m, n))?,
        specialty: FunctionTable::tabulate(0, n_max, |n| specialty(s, c_tilde, n))?,
    })
}
