//! Curves on the ruled cubic surface `X ⊂ P³`, the general projection of
//! `S(1,2) ⊂ P⁴`.
//!
//! An almost Cartier divisor class on `X` is a triple `(c, d, α)`: a class
//! `c·η + d·f` on the normalization together with a divisor `α` on the
//! double conic `M₂`, taken modulo pullbacks from the double line `N₂`, with
//! `d ≡ deg α (mod 2)`. The double line itself is not almost Cartier and has
//! no triple; see [`DOUBLE_LINE`].

mod alpha;
mod classify;

use std::fmt;
use std::str::FromStr;

pub use alpha::{parse_alpha, reduce_alpha, Alpha, M2Point, MAX_PARSED_ENTRIES};
pub use classify::{
    line_tables, maximal_rank_classify, maximal_rank_scan, scan_reports, ClassifyMethod,
    MaximalRankReport, Verdict, PUBLISHED_MAXIMAL_RANK_CLASSES,
};

use crate::chow::{DivisorClass, ScrollSurface};
use crate::curves::smooth_class;
use crate::error::{Error, Result};

/// Name used for the double line `N₂`, which is of maximal rank but lies
/// outside the triple model.
pub const DOUBLE_LINE: &str = "N2 (double line, not almost Cartier)";

/// The normalization `S(1,2)` of the ruled cubic.
pub fn ruled_cubic_normalization() -> ScrollSurface {
    ScrollSurface::new(1, 2).expect("S(1,2) is valid")
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct APicClass {
    pub c: i64,
    pub d: i64,
    pub alpha: Alpha,
}

impl APicClass {
    pub fn new(c: i64, d: i64, alpha: Alpha) -> Self {
        APicClass { c, d, alpha }
    }

    pub fn class(&self) -> DivisorClass {
        DivisorClass::new(self.c, self.d)
    }

    pub fn parity_ok(&self) -> bool {
        (self.d as i128 - self.alpha.degree() as i128).rem_euclid(2) == 0
    }

    pub fn check_parity(&self) -> Result<()> {
        if self.parity_ok() {
            Ok(())
        } else {
            Err(Error::Parity {
                d: self.d,
                alpha_degree: self.alpha.degree(),
            })
        }
    }

    pub fn reduced_alpha(&self) -> Alpha {
        reduce_alpha(&self.alpha)
    }
}

impl fmt::Display for APicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.c, self.d, self.alpha)
    }
}

impl FromStr for APicClass {
    type Err = Error;

    /// `c,d` or `c,d,{α}`; the α list uses [`parse_alpha`] syntax.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (head, alpha) = match t.find('{') {
            Some(i) => (&t[..i], parse_alpha(&t[i..])?),
            None => (t, Alpha::new()),
        };
        let head = head.trim().trim_end_matches(',');
        let nums: Vec<&str> = head.split(',').map(str::trim).collect();
        let [c, d] = nums.as_slice() else {
            return Err(Error::Parse(format!(
                "expected `c,d[,{{alpha}}]`, found {s:?}"
            )));
        };
        let parse = |x: &str| {
            x.parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad integer {x:?} in {s:?}")))
        };
        Ok(APicClass::new(parse(c)?, parse(d)?, alpha))
    }
}

/// Effectiveness of `(c, d, α)`: `c, d > 0`; or `d = 0`, `ᾱ = ∅`, `c > 0`;
/// or `c = 0`, `d > 0`, `deg ᾱ <= d`.
pub fn is_effective(t: &APicClass) -> Result<bool> {
    t.check_parity()?;
    let reduced = t.reduced_alpha();
    Ok((t.c > 0 && t.d > 0)
        || (t.d == 0 && reduced.is_empty() && t.c > 0)
        || (t.c == 0 && t.d > 0 && reduced.degree() <= t.d))
}

/// Whether the class contains a preserved curve: as [`is_effective`] with
/// `deg ᾱ = d` in the cases `d > 0`.
pub fn contains_preserved(t: &APicClass) -> Result<bool> {
    t.check_parity()?;
    let reduced = t.reduced_alpha();
    Ok((t.c > 0 && t.d > 0 && t.d == reduced.degree())
        || (t.d == 0 && reduced.is_empty() && t.c > 0)
        || (t.c == 0 && t.d > 0 && t.d == reduced.degree()))
}

/// `t1` and `t2` are linked by `O_X(m)`: the classes add up to `m·h` on
/// `S(1,2)` and `α₁ + α₂` is a pullback from `N₂`.
pub fn are_linked(t1: &APicClass, t2: &APicClass, m: i64) -> Result<bool> {
    t1.check_parity()?;
    t2.check_parity()?;
    if m <= 0 {
        return Err(Error::precondition(format!(
            "linkage degree m = {m} must be positive"
        )));
    }
    let h = ruled_cubic_normalization().h();
    let sum = t1.class().checked_add(t2.class())?;
    Ok(sum == h.checked_scale(m)? && reduce_alpha(&(&t1.alpha + &t2.alpha)).is_empty())
}

/// The preserved link `(d - c, d, σ(α))` of a smooth curve class, linked to
/// it by `O_X(d)`.
pub fn preserved_link(t: &APicClass) -> Result<APicClass> {
    t.check_parity()?;
    if t.class() == DivisorClass::ETA {
        return Err(Error::precondition(
            "the (-1)-curve eta has no effective link: d*H - C is not effective",
        ));
    }
    let s = ruled_cubic_normalization();
    if !smooth_class(&s, t.class()) || t.d <= 0 {
        return Err(Error::precondition(format!(
            "({},{}) is not the class of a smooth curve meeting M2",
            t.c, t.d
        )));
    }
    if !contains_preserved(t)? {
        return Err(Error::precondition(format!(
            "{t} contains no preserved curve"
        )));
    }
    Ok(APicClass::new(t.d - t.c, t.d, t.alpha.sigma()))
}
