//! Independent oracles shared by the integration tests. Nothing here calls
//! the closed forms it is used to check.
#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::Rng;
use scrollcurves::ruled_cubic::{APicClass, Alpha, M2Point};

/// `h⁰(O_P1(m))`
pub fn p1_h0(m: i64) -> i64 {
    (m + 1).max(0)
}

/// Rao function of a curve of class `(c, d)` on `S(1,2) ⊂ P⁴`, from the two
/// explicit sums (valid for `n >= c` and `n <= c - 2`; zero at `n = c - 1`).
pub fn p4_rao_formula(c: i64, d: i64, n: i64) -> i64 {
    if n >= c {
        (0..=n - c).map(|i| p1_h0(d + i - 2 * n - 2)).sum()
    } else if n <= c - 2 {
        (0..=c - n - 2).map(|i| p1_h0(2 * n + i + 1 - d)).sum()
    } else {
        0
    }
}

/// Degree of the least effective representative of `α` modulo pullbacks
/// `P + σ(P)` (and `2P` at the fixed points): for each orbit `{P, σP}` with
/// coefficients `x, y` the minimum is `|x - y|`; at a fixed point it is
/// `x mod 2`.
pub fn reduced_degree(alpha: &Alpha) -> i64 {
    let mut orbits: BTreeMap<M2Point, (i64, i64)> = BTreeMap::new();
    for (p, m) in alpha.iter() {
        let q = p.sigma();
        let key = p.min(q);
        let slot = orbits.entry(key).or_insert((0, 0));
        if p.is_fixed() || p == key {
            slot.0 += m;
        } else {
            slot.1 += m;
        }
    }
    orbits
        .into_iter()
        .map(|(p, (x, y))| {
            if p.is_fixed() {
                x.rem_euclid(2)
            } else {
                (x - y).abs()
            }
        })
        .sum()
}

/// Effectiveness of `(c, d, α)`, restated with [`reduced_degree`].
pub fn effective_oracle(c: i64, d: i64, alpha: &Alpha) -> bool {
    let rd = reduced_degree(alpha);
    (c > 0 && d > 0) || (d == 0 && rd == 0 && c > 0) || (c == 0 && d > 0 && rd <= d)
}

pub fn random_point<R: Rng>(rng: &mut R) -> M2Point {
    match rng.gen_range(0..20) {
        0 => M2Point::Infinity,
        1 => M2Point::integer(0),
        _ => {
            let p = rng.gen_range(-30..=30);
            let q = rng.gen_range(1..=4);
            M2Point::rational(p, q).unwrap()
        }
    }
}

/// An arbitrary formal combination with small coefficients.
pub fn random_alpha<R: Rng>(rng: &mut R, max_terms: usize) -> Alpha {
    let n = rng.gen_range(0..=max_terms);
    (0..n)
        .map(|_| (random_point(rng), rng.gen_range(-3..=3)))
        .collect()
}

/// A triple whose `(c, d)` is a smooth class on `S(1,2)` with `d > 0` and
/// whose `α` is `d` points without involution pairs, disguised by adding
/// pullbacks and flipping points to `-σ(P)`.
pub fn random_smooth_preserved_triple<R: Rng>(rng: &mut R) -> APicClass {
    let c = rng.gen_range(0..=8);
    let d = if c == 0 { 1 } else { rng.gen_range(c..=c + 12) };
    let mut chosen: Vec<M2Point> = Vec::new();
    while (chosen.len() as i64) < d {
        let p = random_point(rng);
        if p.is_fixed() || chosen.contains(&p) || chosen.contains(&p.sigma()) {
            continue;
        }
        chosen.push(p);
    }
    let mut alpha = Alpha::new();
    for p in chosen {
        if rng.gen_bool(0.3) {
            alpha.add_point(p.sigma(), -1);
        } else {
            alpha.add_point(p, 1);
        }
    }
    for _ in 0..rng.gen_range(0..3) {
        let p = random_point(rng);
        let k = rng.gen_range(-2..=2);
        if p.is_fixed() {
            alpha.add_point(p, 2 * k);
        } else {
            alpha.add_point(p, k);
            alpha.add_point(p.sigma(), k);
        }
    }
    APicClass::new(c, d, alpha)
}
