//! Points of the double conic `M₂ ≅ P¹` and formal integer combinations of
//! them, modulo pullbacks of divisors on the double line `N₂`.
//!
//! `M₂` is parametrized by `u ∈ Q ∪ {∞}`; the involution exchanging the two
//! sheets over `N₂` is `u ↦ -u`, with fixed points `0` and `∞` (the two
//! ramification points).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum M2Point {
    Finite(Ratio<i64>),
    Infinity,
}

impl M2Point {
    pub fn integer(u: i64) -> Self {
        M2Point::Finite(Ratio::from_integer(u))
    }

    pub fn rational(p: i64, q: i64) -> Result<Self> {
        if q == 0 {
            return Err(Error::Parse("zero denominator".into()));
        }
        if p == i64::MIN || q == i64::MIN {
            return Err(Error::Overflow);
        }
        Ok(M2Point::Finite(Ratio::new(p, q)))
    }

    /// The sheet involution `u ↦ -u`.
    pub fn sigma(self) -> Self {
        match self {
            M2Point::Finite(u) => M2Point::Finite(-u),
            M2Point::Infinity => M2Point::Infinity,
        }
    }

    /// Ramification point of `M₂ → N₂`.
    pub fn is_fixed(self) -> bool {
        self.sigma() == self
    }
}

impl fmt::Display for M2Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            M2Point::Infinity => write!(f, "inf"),
            M2Point::Finite(u) if *u < Ratio::zero() => write!(f, "({u})"),
            M2Point::Finite(u) => write!(f, "{u}"),
        }
    }
}

fn parse_i64(s: &str) -> Result<i64> {
    let t = s.trim();
    let digits = t.strip_prefix('-').unwrap_or(t);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("expected an integer, found {s:?}")));
    }
    t.parse::<i64>()
        .map_err(|_| Error::Parse(format!("integer out of range: {s:?}")))
}

impl FromStr for M2Point {
    type Err = Error;

    /// `inf`, an integer, `p/q`, or any of these (signed) in parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") {
            return Ok(M2Point::Infinity);
        }
        let (body, signed) = match t.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            Some(inner) => (inner.trim(), true),
            None => (t, false),
        };
        if body.eq_ignore_ascii_case("inf") {
            return Ok(M2Point::Infinity);
        }
        if !signed && body.starts_with('-') {
            return Err(Error::Parse(format!(
                "negative point {t:?} must be parenthesized"
            )));
        }
        match body.split_once('/') {
            Some((p, q)) => {
                let q = parse_i64(q)?;
                if q < 0 {
                    return Err(Error::Parse(format!("negative denominator in {t:?}")));
                }
                M2Point::rational(parse_i64(p)?, q)
            }
            None => {
                let u = parse_i64(body)?;
                if u == i64::MIN {
                    return Err(Error::Overflow);
                }
                Ok(M2Point::integer(u))
            }
        }
    }
}

/// A formal integer combination of points of `M₂`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Alpha {
    terms: BTreeMap<M2Point, i64>,
}

impl Alpha {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_points<I: IntoIterator<Item = M2Point>>(points: I) -> Self {
        let mut a = Alpha::new();
        for p in points {
            a.add_point(p, 1);
        }
        a
    }

    /// Adds `mult · p`. Multiplicities saturate at the `i64` range.
    pub fn add_point(&mut self, p: M2Point, mult: i64) {
        let entry = self.terms.entry(p).or_insert(0);
        *entry = entry.saturating_add(mult);
        if *entry == 0 {
            self.terms.remove(&p);
        }
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.terms
            .values()
            .fold(0i64, |acc, &m| acc.saturating_add(m))
    }

    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|&m| m > 0)
    }

    pub fn multiplicity(&self, p: M2Point) -> i64 {
        self.terms.get(&p).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (M2Point, i64)> + '_ {
        self.terms.iter().map(|(&p, &m)| (p, m))
    }

    /// Applies the involution pointwise.
    pub fn sigma(&self) -> Alpha {
        let mut out = Alpha::new();
        for (p, m) in self.iter() {
            out.add_point(p.sigma(), m);
        }
        out
    }
}

impl Add for &Alpha {
    type Output = Alpha;
    fn add(self, rhs: &Alpha) -> Alpha {
        let mut out = self.clone();
        for (p, m) in rhs.iter() {
            out.add_point(p, m);
        }
        out
    }
}

impl Add for Alpha {
    type Output = Alpha;
    fn add(self, rhs: Alpha) -> Alpha {
        &self + &rhs
    }
}

impl FromIterator<(M2Point, i64)> for Alpha {
    fn from_iter<I: IntoIterator<Item = (M2Point, i64)>>(iter: I) -> Self {
        let mut a = Alpha::new();
        for (p, m) in iter {
            a.add_point(p, m);
        }
        a
    }
}

/// Written as a brace-enclosed list, one entry per unit of multiplicity,
/// negative coefficients prefixed by `-`: `{2, 3, 3, -(-1/2)}`.
impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        let mut first = true;
        for (p, m) in self.iter() {
            let sign = if m < 0 { "-" } else { "" };
            for _ in 0..m.unsigned_abs() {
                if !first {
                    f.write_str(", ")?;
                }
                first = false;
                write!(f, "{sign}{p}")?;
            }
        }
        f.write_str("}")
    }
}

/// Largest total multiplicity accepted from text.
pub const MAX_PARSED_ENTRIES: usize = 100_000;

/// Parses a comma-separated list of entries, optionally wrapped in braces.
///
/// Each entry is `inf`, an integer, or `p/q`, optionally prefixed by `-` for
/// a negative formal coefficient. A point with negative parameter is
/// parenthesized: `-(-3)` is minus the point `u = -3`. Repeated entries
/// accumulate.
pub fn parse_alpha(s: &str) -> Result<Alpha> {
    let t = s.trim();
    let inner = match t.strip_prefix('{') {
        Some(rest) => rest
            .strip_suffix('}')
            .ok_or_else(|| Error::Parse(format!("unbalanced braces in {s:?}")))?,
        None => t,
    };
    let mut alpha = Alpha::new();
    if inner.trim().is_empty() {
        return Ok(alpha);
    }
    let entries: Vec<&str> = inner.split(',').collect();
    if entries.len() > MAX_PARSED_ENTRIES {
        return Err(Error::Parse(format!(
            "more than {MAX_PARSED_ENTRIES} entries"
        )));
    }
    for raw in entries {
        let entry = raw.trim();
        if entry.is_empty() {
            return Err(Error::Parse(format!("empty entry in {s:?}")));
        }
        let (coef, point) = match entry.strip_prefix('-') {
            Some(rest) => (-1, rest.trim()),
            None => (1, entry),
        };
        alpha.add_point(point.parse()?, coef);
    }
    Ok(alpha)
}

/// The effective representative `ᾱ` of least degree in the class of `α`
/// modulo `π*Cart N₂`.
///
/// Negative points `-Q` are replaced by `σ(Q)`, then every pair
/// `P + σ(P)` is removed; a fixed point pairs with itself.
pub fn reduce_alpha(alpha: &Alpha) -> Alpha {
    let mut positive = Alpha::new();
    for (p, m) in alpha.iter() {
        if m > 0 {
            positive.add_point(p, m);
        } else {
            positive.add_point(p.sigma(), m.saturating_neg());
        }
    }
    let mut out = Alpha::new();
    for (p, m) in positive.iter() {
        if p.is_fixed() {
            out.add_point(p, m % 2);
            continue;
        }
        let partner = positive.multiplicity(p.sigma());
        out.add_point(p, m - m.min(partner));
    }
    out
}
