//! Intersection theory on the Hirzebruch surface underlying a scroll.
//!
//! Divisor classes are written `c·η + d·f` where `f` is a fiber of the ruling
//! and `η` the negative section with `η² = -e`, `e = b - a`. The Chow ring is
//! `Z[f, η] / (η² + e·fη, f²)`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::arith::{self, add, mul, narrow, sub};
use crate::error::{Error, Result};

/// Largest scroll parameter accepted by [`ScrollSurface::new`].
pub const MAX_SCROLL_PARAM: i64 = 1_000_000;

/// The class `c·η + d·f` in the Picard lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DivisorClass {
    pub c: i64,
    pub d: i64,
}

impl DivisorClass {
    pub const ZERO: DivisorClass = DivisorClass { c: 0, d: 0 };
    /// The negative section `η`.
    pub const ETA: DivisorClass = DivisorClass { c: 1, d: 0 };
    /// A fiber of the ruling.
    pub const FIBER: DivisorClass = DivisorClass { c: 0, d: 1 };

    pub const fn new(c: i64, d: i64) -> Self {
        DivisorClass { c, d }
    }

    pub fn is_zero(self) -> bool {
        self.c == 0 && self.d == 0
    }

    pub fn checked_add(self, other: Self) -> Result<Self> {
        Ok(DivisorClass {
            c: self.c.checked_add(other.c).ok_or(Error::Overflow)?,
            d: self.d.checked_add(other.d).ok_or(Error::Overflow)?,
        })
    }

    pub fn checked_sub(self, other: Self) -> Result<Self> {
        Ok(DivisorClass {
            c: self.c.checked_sub(other.c).ok_or(Error::Overflow)?,
            d: self.d.checked_sub(other.d).ok_or(Error::Overflow)?,
        })
    }

    pub fn checked_scale(self, k: i64) -> Result<Self> {
        Ok(DivisorClass {
            c: self.c.checked_mul(k).ok_or(Error::Overflow)?,
            d: self.d.checked_mul(k).ok_or(Error::Overflow)?,
        })
    }
}

// Panicking operators for small, known-bounded values (tests, constants).
impl Add for DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("divisor class overflow")
    }
}

impl Sub for DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs).expect("divisor class overflow")
    }
}

impl Neg for DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> Self {
        DivisorClass::ZERO - self
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.c, self.d)
    }
}

/// The rational normal scroll `S(a, b) ⊂ P^{a+b+1}`, stored with `a <= b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ScrollSurface {
    a: i64,
    b: i64,
}

impl ScrollSurface {
    /// Builds `S(a, b)`, swapping the parameters if `a > b`.
    pub fn new(a: i64, b: i64) -> Result<Self> {
        for (name, v) in [("a", a), ("b", b)] {
            if !(1..=MAX_SCROLL_PARAM).contains(&v) {
                return Err(Error::InvalidInput(format!(
                    "scroll parameter {name} = {v} must lie in [1, {MAX_SCROLL_PARAM}]"
                )));
            }
        }
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        Ok(ScrollSurface { a, b })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    /// `e = b - a`, the invariant of the Hirzebruch surface.
    pub fn e(&self) -> i64 {
        self.b - self.a
    }

    /// Hyperplane class `h = η + b·f`.
    pub fn h(&self) -> DivisorClass {
        DivisorClass::new(1, self.b)
    }

    /// First Chern class `c₁ = 2η + (e + 2)f` (the anticanonical class).
    pub fn c1(&self) -> DivisorClass {
        DivisorClass::new(2, self.e() + 2)
    }

    /// Degree of the second Chern class (topological Euler characteristic).
    pub fn c2_degree(&self) -> i64 {
        4
    }

    /// Canonical class `K = -c₁`.
    pub fn canonical(&self) -> DivisorClass {
        -self.c1()
    }

    /// `h·h = a + b`, the degree of the scroll and of its projection.
    pub fn degree(&self) -> i64 {
        self.a + self.b
    }

    /// Class of the source double curve `M₂ = (h·h - 4)h + c₁`.
    pub fn m2(&self) -> DivisorClass {
        // a, b <= 10^6 keeps every coordinate well inside i64.
        self.h().checked_scale(self.degree() - 4).expect("bounded") + self.c1()
    }
}

impl fmt::Display for ScrollSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S({},{})", self.a, self.b)
    }
}

/// Intersection number `D1·D2`.
pub fn intersect(s: &ScrollSurface, d1: DivisorClass, d2: DivisorClass) -> Result<i64> {
    let (c1, e1) = (d1.c as i128, d1.d as i128);
    let (c2, e2) = (d2.c as i128, d2.d as i128);
    let mixed = add(mul(c1, e2)?, mul(c2, e1)?)?;
    let eta_sq = mul(mul(s.e() as i128, c1)?, c2)?;
    narrow(sub(mixed, eta_sq)?)
}

/// Arithmetic genus by adjunction: `2g - 2 = D·(D - c₁)`.
pub fn adjunction_genus(s: &ScrollSurface, d: DivisorClass) -> Result<i64> {
    let twisted = d.checked_sub(s.c1())?;
    let prod = intersect(s, d, twisted)? as i128;
    let half = arith::div_exact(prod, 2, "adjunction D·(D - c1)")?;
    narrow(add(half, 1)?)
}

/// Degree of the image in `P³` (or in the scroll's own embedding): `D·h`.
pub fn degree_in_p3(s: &ScrollSurface, d: DivisorClass) -> Result<i64> {
    intersect(s, d, s.h())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(a: i64, b: i64) -> ScrollSurface {
        ScrollSurface::new(a, b).unwrap()
    }

    #[test]
    fn intersect_examples() {
        let h = DivisorClass::new(1, 2);
        assert_eq!(intersect(&s(1, 2), h, h).unwrap(), 3);
        for (a, b) in [(1, 1), (2, 5), (3, 3)] {
            assert_eq!(
                intersect(&s(a, b), DivisorClass::FIBER, DivisorClass::FIBER).unwrap(),
                0
            );
        }
        assert_eq!(
            intersect(&s(1, 3), DivisorClass::ETA, DivisorClass::ETA).unwrap(),
            -2
        );
    }

    #[test]
    fn adjunction_examples() {
        let s12 = s(1, 2);
        assert_eq!(adjunction_genus(&s12, DivisorClass::new(1, 2)).unwrap(), 0);
        assert_eq!(adjunction_genus(&s(4, 9), DivisorClass::FIBER).unwrap(), 0);
        assert_eq!(adjunction_genus(&s12, DivisorClass::new(2, 3)).unwrap(), 1);
    }

    #[test]
    fn degree_examples() {
        assert_eq!(degree_in_p3(&s(1, 2), DivisorClass::new(1, 2)).unwrap(), 3);
        assert_eq!(degree_in_p3(&s(5, 7), DivisorClass::ZERO).unwrap(), 0);
        assert_eq!(degree_in_p3(&s(2, 3), DivisorClass::new(4, 8)).unwrap(), 16);
    }

    #[test]
    fn constructor_normalizes_and_validates() {
        assert_eq!(s(3, 1), s(1, 3));
        assert!(matches!(
            ScrollSurface::new(0, 2),
            Err(Error::InvalidInput(_))
        ));
        assert!(ScrollSurface::new(1, MAX_SCROLL_PARAM + 1).is_err());
    }

    #[test]
    fn m2_on_ruled_cubic() {
        assert_eq!(s(1, 2).m2(), DivisorClass::new(1, 1));
    }

    #[test]
    fn overflow_surfaces_as_error() {
        let big = DivisorClass::new(i64::MAX, i64::MAX);
        assert_eq!(intersect(&s(1, 5), big, big), Err(Error::Overflow));
        assert_eq!(adjunction_genus(&s(1, 5), big), Err(Error::Overflow));
    }

    #[test]
    fn standard_numbers_hold_on_every_small_scroll() {
        for a in 1..=30 {
            for b in a..=30 {
                let sc = s(a, b);
                let (h, c1) = (sc.h(), sc.c1());
                assert_eq!(intersect(&sc, h, h).unwrap(), a + b);
                assert_eq!(intersect(&sc, h, c1).unwrap(), a + b + 2);
                assert_eq!(intersect(&sc, c1, c1).unwrap(), 8);
                assert_eq!(adjunction_genus(&sc, h).unwrap(), 0);
                assert_eq!(adjunction_genus(&sc, DivisorClass::FIBER).unwrap(), 0);
            }
        }
    }

    #[test]
    fn self_intersection_minus_canonical_degree_is_even() {
        for e in 0..=6 {
            let sc = s(1, 1 + e);
            for c in -100..=100 {
                for d in -100..=100 {
                    let dd = DivisorClass::new(c, d);
                    let v = intersect(&sc, dd, dd - sc.c1()).unwrap();
                    assert_eq!(v.rem_euclid(2), 0, "{dd} on {sc}");
                }
            }
        }
    }
}
