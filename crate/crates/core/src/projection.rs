//! Singularities of a general linear projection `S(a, b) → P³`.
//!
//! The image `X` is a surface of degree `a + b` with ordinary singularities:
//! a double curve `N₂` (with source `M₂ ⊂ S` mapping 2:1 onto it), triple
//! points (`N₃`) and pinch points (images of the ramification locus `R₁`).

use crate::arith::{add, cubic_poly, div_exact, mul, narrow, sub};
use crate::chow::{intersect, DivisorClass, ScrollSurface};
use crate::cohom::riemann_roch_chi;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProjectionInvariants {
    /// Degree of the image surface, `h·h`.
    pub deg_x: i64,
    pub m2_class: DivisorClass,
    pub deg_n2: i64,
    pub genus_n2: i64,
    pub triple_points: i64,
    pub pinch_points: i64,
    pub surface_family_dim: i64,
}

fn require_projectable(s: &ScrollSurface) -> Result<()> {
    if s.degree() < 3 {
        return Err(Error::precondition(
            "S(1,1) is a quadric; its projection to P3 is not a general projection",
        ));
    }
    Ok(())
}

/// Evaluates the multiple-point formulas in the Chow ring of `S`.
pub fn generic_invariants(s: &ScrollSurface) -> Result<ProjectionInvariants> {
    require_projectable(s)?;
    let h = s.h();
    let c1 = s.c1();
    let hh = intersect(s, h, h)? as i128;
    let hc1 = intersect(s, h, c1)? as i128;
    let c1c1 = intersect(s, c1, c1)? as i128;
    let c2 = s.c2_degree() as i128;

    let m2 = h.checked_scale(narrow(hh - 4)?)?.checked_add(c1)?;
    let m2h = intersect(s, m2, h)? as i128;
    let deg_n2 = div_exact(m2h, 2, "deg N2 = M2.h / 2")?;

    // 12·g(N₂) = 4H³ - 36H² + 74H + 6H(h·c₁) - 24(h·c₁) + (c₁² + c₂) + 12
    let h3 = mul(mul(hh, hh)?, hh)?;
    let twelve_g = [
        mul(4, h3)?,
        -mul(36, mul(hh, hh)?)?,
        mul(74, hh)?,
        mul(6, mul(hh, hc1)?)?,
        -mul(24, hc1)?,
        c1c1 + c2,
        12,
    ]
    .into_iter()
    .try_fold(0i128, add)?;
    let genus_n2 = div_exact(twelve_g, 12, "genus of N2")?;

    // deg M₃ = (H² - 12H + h·c₁ + 44)·H + (2H - 24)(h·c₁) + 4c₁² - 2c₂
    let m3 = [
        mul(add(sub(mul(hh, hh)?, mul(12, hh)?)?, hc1 + 44)?, hh)?,
        mul(2 * hh - 24, hc1)?,
        mul(4, c1c1)?,
        -2 * c2,
    ]
    .into_iter()
    .try_fold(0i128, add)?;
    let triple_points = div_exact(m3, 3, "triple points = deg M3 / 3")?;

    let pinch_points = 6 * hh - 4 * hc1 + c1c1 - c2;

    Ok(ProjectionInvariants {
        deg_x: narrow(hh)?,
        m2_class: m2,
        deg_n2: narrow(deg_n2)?,
        genus_n2: narrow(genus_n2)?,
        triple_points: narrow(triple_points)?,
        pinch_points: narrow(pinch_points)?,
        surface_family_dim: surface_family_dimension(s),
    })
}

/// The same invariants from the closed forms in `a + b`.
pub fn closed_form_invariants(a: i64, b: i64) -> Result<ProjectionInvariants> {
    let s = ScrollSurface::new(a, b)?;
    require_projectable(&s)?;
    let n = s.degree() as i128;
    let deg_n2 = div_exact((n - 2) * (n - 1), 2, "closed-form deg N2")?;
    let genus_n2 = div_exact((n - 3) * (n - 4) * (2 * n - 1), 6, "closed-form g(N2)")?;
    let triple_points = div_exact((n - 2) * (n - 3) * (n - 4), 3, "closed-form deg N3")?;
    Ok(ProjectionInvariants {
        deg_x: s.degree(),
        m2_class: s.m2(),
        deg_n2: narrow(deg_n2)?,
        genus_n2: narrow(genus_n2)?,
        triple_points: narrow(triple_points)?,
        pinch_points: narrow(2 * n - 4)?,
        surface_family_dim: surface_family_dimension(&s),
    })
}

/// `χ(O_X(n))` for a surface of degree `deg` in `P³`.
pub fn chi_hypersurface(n: i64, deg: i64) -> Result<i64> {
    narrow(sub(
        cubic_poly(n + 3)? as i128,
        cubic_poly(n - deg + 3)? as i128,
    )?)
}

/// Checks `χ(O_S(nh)) = χ(O_X(n)) + χ(ω_{N₂}(4 - h·h + n))`.
///
/// The left side comes from Riemann-Roch on `S`; the right side from the
/// hypersurface count and the closed-form degree and genus of `N₂`.
pub fn chi_sequence_check(s: &ScrollSurface, n: i64) -> Result<bool> {
    require_projectable(s)?;
    let lhs = riemann_roch_chi(s, s.h().checked_scale(n)?)? as i128;
    let inv = closed_form_invariants(s.a(), s.b())?;
    let twist = (4 - s.degree() + n) as i128;
    let omega = add(mul(twist, inv.deg_n2 as i128)?, inv.genus_n2 as i128 - 1)?;
    let rhs = add(chi_hypersurface(n, s.degree())? as i128, omega)?;
    Ok(lhs == rhs)
}

/// `k(n - k)`, the dimension of the Grassmannian of `k`-planes in `C^n`.
fn grassmannian_dim(k: i64, n: i64) -> i64 {
    k * (n - k)
}

/// Dimension of the family of projected surfaces:
/// `dim Gr + dim PGL(4) - dim Aut S(a,b) = 5a + 3b + 2`.
pub fn surface_family_dimension(s: &ScrollSurface) -> i64 {
    let (a, b) = (s.a(), s.b());
    // Centers of projection are P^{a+b-3}'s in P^{a+b+1}.
    let centers = grassmannian_dim(a + b - 2, a + b + 2);
    let automorphisms = b - a + 5;
    centers + 15 - automorphisms
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(a: i64, b: i64) -> ScrollSurface {
        ScrollSurface::new(a, b).unwrap()
    }

    fn quad(i: &ProjectionInvariants) -> (i64, i64, i64, i64) {
        (i.deg_n2, i.genus_n2, i.triple_points, i.pinch_points)
    }

    #[test]
    fn generic_examples() {
        assert_eq!(quad(&generic_invariants(&s(1, 2)).unwrap()), (1, 0, 0, 2));
        assert_eq!(quad(&generic_invariants(&s(2, 2)).unwrap()), (3, 0, 0, 4));
        assert_eq!(quad(&generic_invariants(&s(2, 3)).unwrap()), (6, 3, 2, 6));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(quad(&closed_form_invariants(1, 2).unwrap()), (1, 0, 0, 2));
        assert_eq!(quad(&closed_form_invariants(2, 3).unwrap()), (6, 3, 2, 6));
        assert_eq!(quad(&closed_form_invariants(1, 3).unwrap()), (3, 0, 0, 4));
    }

    #[test]
    fn quadric_is_rejected() {
        assert!(matches!(
            generic_invariants(&s(1, 1)),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            closed_form_invariants(1, 1),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            chi_sequence_check(&s(1, 1), 0),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn chi_sequence_examples() {
        assert!(chi_sequence_check(&s(1, 2), 1).unwrap());
        assert!(chi_sequence_check(&s(1, 2), 0).unwrap());
        assert!(chi_sequence_check(&s(2, 3), 3).unwrap());
        // S(1,2), n = 1: 5 = 4 + (2·1 + 0 - 1)
        assert_eq!(riemann_roch_chi(&s(1, 2), s(1, 2).h()).unwrap(), 5);
        assert_eq!(chi_hypersurface(1, 3).unwrap(), 4);
    }

    #[test]
    fn chi_identity_degenerates_correctly_on_quadric() {
        // deg N₂ = 0, g = 1 from the closed forms at a + b = 2: ω-term vanishes.
        let sc = s(1, 1);
        for n in -5..=15 {
            let lhs = riemann_roch_chi(&sc, sc.h().checked_scale(n).unwrap()).unwrap();
            assert_eq!(lhs, chi_hypersurface(n, 2).unwrap());
        }
    }

    #[test]
    fn family_dimension_examples() {
        assert_eq!(surface_family_dimension(&s(1, 2)), 13);
        assert_eq!(surface_family_dimension(&s(2, 2)), 18);
        assert_eq!(surface_family_dimension(&s(1, 1)), 10);
        for a in 1..=20 {
            for b in a..=20 {
                assert_eq!(surface_family_dimension(&s(a, b)), 5 * a + 3 * b + 2);
            }
        }
    }

    #[test]
    fn deg_n2_is_half_m2_dot_h() {
        for a in 1..=30 {
            for b in a..=30 {
                if a + b < 3 {
                    continue;
                }
                let sc = s(a, b);
                let inv = generic_invariants(&sc).unwrap();
                assert_eq!(2 * inv.deg_n2, intersect(&sc, sc.m2(), sc.h()).unwrap());
                assert!(inv.genus_n2 >= 0 && inv.triple_points >= 0);
                assert_eq!(inv.pinch_points, 2 * a + 2 * b - 4);
            }
        }
    }
}
