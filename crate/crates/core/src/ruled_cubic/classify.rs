//! Maximal-rank classification of smooth curves on the ruled cubic.
//!
//! A smooth curve of class `(c, d)` with `d > 0` is linked by `O_X(d)` to a
//! preserved curve, so its Hilbert and Rao functions in `P³` come from the
//! liaison formulas with `m = d`. The two lines `(1,0)` and `(0,1)` are
//! handled by the table of a line in `P³`.

use rayon::prelude::*;

use super::ruled_cubic_normalization;
use crate::arith::binom3;
use crate::chow::{adjunction_genus, degree_in_p3, DivisorClass};
use crate::curves::{hilbert_fn, rao_fn, smooth_class, FunctionTable};
use crate::error::{Error, Result};

/// The published list of maximal-rank classes `(c, d)` with `c >= 1`. The
/// scan disagrees: it also finds `(1,3)` and `(1,4)`.
pub const PUBLISHED_MAXIMAL_RANK_CLASSES: [(i64, i64); 8] = [
    (1, 0),
    (1, 1),
    (1, 2),
    (2, 2),
    (2, 3),
    (2, 4),
    (3, 3),
    (3, 4),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    MaximalRank,
    /// Both `h⁰(I_C(n))` and `h¹(I_C(n))` are nonzero at `n`.
    NotMaximalRank {
        n: i64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassifyMethod {
    Liaison { m: i64 },
    LineTable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalRankReport {
    pub class: DivisorClass,
    pub degree: i64,
    pub genus: i64,
    pub method: ClassifyMethod,
    pub verdict: Verdict,
    /// `h¹(I_C(n)) = 0` on the whole window.
    pub acm: bool,
    pub hilbert: FunctionTable,
    pub rao: FunctionTable,
}

impl MaximalRankReport {
    pub fn is_maximal_rank(&self) -> bool {
        self.verdict == Verdict::MaximalRank
    }
}

/// Hilbert and Rao tables of a line in `P³` on `[0, n_max]`.
pub fn line_tables(n_max: i64) -> Result<(FunctionTable, FunctionTable)> {
    let hilbert = FunctionTable::tabulate(0, n_max, |n| Ok(binom3(n + 3)? - (n + 1)))?;
    let rao = FunctionTable::tabulate(0, n_max, |_| Ok(0))?;
    Ok((hilbert, rao))
}

fn window_end(class: DivisorClass) -> i64 {
    class.c + class.d + 4
}

pub fn maximal_rank_classify(c: i64, d: i64) -> Result<MaximalRankReport> {
    let s = ruled_cubic_normalization();
    let class = DivisorClass::new(c, d);
    if !smooth_class(&s, class) {
        return Err(Error::precondition(format!(
            "({c},{d}) has no smooth irreducible member on S(1,2)"
        )));
    }
    let n_max = window_end(class);
    let (method, hilbert, rao) = if class == DivisorClass::ETA || class == DivisorClass::FIBER {
        let (hilbert, rao) = line_tables(n_max)?;
        (ClassifyMethod::LineTable, hilbert, rao)
    } else {
        let m = d;
        let hilbert = FunctionTable::tabulate(0, n_max, |n| hilbert_fn(&s, class, m, n))?;
        let rao = FunctionTable::tabulate(0, n_max, |n| rao_fn(&s, class, m, n))?;
        if !rao.has_trailing_zeros(3) {
            return Err(Error::internal(format!(
                "Rao function of ({c},{d}) has not vanished by n = {n_max}"
            )));
        }
        (ClassifyMethod::Liaison { m }, hilbert, rao)
    };
    let verdict = hilbert
        .iter()
        .zip(rao.iter())
        .find(|&((_, h0), (_, h1))| h0 != 0 && h1 != 0)
        .map_or(Verdict::MaximalRank, |((n, _), _)| {
            Verdict::NotMaximalRank { n }
        });
    Ok(MaximalRankReport {
        class,
        degree: degree_in_p3(&s, class)?,
        genus: adjunction_genus(&s, class)?,
        method,
        verdict,
        acm: rao.is_identically_zero(),
        hilbert,
        rao,
    })
}

fn scan_cells(c_max: i64, d_max: i64, include_rulings: bool) -> Result<Vec<DivisorClass>> {
    if c_max < 0 || d_max < 0 {
        return Err(Error::InvalidInput(format!(
            "scan bounds must be nonnegative, got ({c_max},{d_max})"
        )));
    }
    let s = ruled_cubic_normalization();
    let mut cells: Vec<DivisorClass> = (1..=c_max)
        .flat_map(|c| (0..=d_max).map(move |d| DivisorClass::new(c, d)))
        .filter(|&k| smooth_class(&s, k))
        .collect();
    if include_rulings {
        cells.extend(
            (0..=d_max)
                .map(|d| DivisorClass::new(0, d))
                .filter(|&k| smooth_class(&s, k)),
        );
    }
    cells.sort();
    Ok(cells)
}

/// Classifies every smooth class in the box, sorted by `(c, d)`.
pub fn scan_reports(
    c_max: i64,
    d_max: i64,
    include_rulings: bool,
) -> Result<Vec<MaximalRankReport>> {
    scan_cells(c_max, d_max, include_rulings)?
        .into_par_iter()
        .map(|k| maximal_rank_classify(k.c, k.d))
        .collect()
}

/// The maximal-rank classes among smooth classes with `1 <= c <= c_max`,
/// `0 <= d <= d_max` (and the ruling `(0,1)` if requested).
pub fn maximal_rank_scan(
    c_max: i64,
    d_max: i64,
    include_rulings: bool,
) -> Result<Vec<DivisorClass>> {
    Ok(scan_reports(c_max, d_max, include_rulings)?
        .into_iter()
        .filter(MaximalRankReport::is_maximal_rank)
        .map(|r| r.class)
        .collect())
}
