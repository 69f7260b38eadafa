//! Command-line front end: argument grammar, command implementations and
//! report rendering. `main.rs` only parses, prints and sets the exit code.

mod report;

use std::fmt;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use scrollcurves::chow::{
    adjunction_genus, degree_in_p3, DivisorClass, ScrollSurface, MAX_SCROLL_PARAM,
};
use scrollcurves::cohom::{cohomology, h0_oracle, has_natural_cohomology, is_effective};
use scrollcurves::curves::{
    default_table_bound, family_gap, hilbert_fn, linkage_degree, normal_bundle_dims, rao_fn,
    smooth_class, specialty, FunctionTable,
};
use scrollcurves::projection::{closed_form_invariants, generic_invariants};
use scrollcurves::ruled_cubic::{
    self, are_linked, contains_preserved, parse_alpha, preserved_link, ruled_cubic_normalization,
    scan_reports, APicClass, Alpha, Verdict,
};
use scrollcurves::Error;

pub use report::{Format, Report, Table, TableRow, CSV_HEADER};

/// Largest accepted `|c|`, `|d|`.
pub const MAX_CLASS_COORD: i64 = 1_000_000;
/// Largest accepted table end `--nmax`.
pub const MAX_NMAX: i64 = 100_000;
/// Largest accepted scan box side.
pub const MAX_SCAN: i64 = 1_000;

#[derive(Debug, Parser)]
#[command(
    name = "scrollcurves",
    version,
    about = "Invariants of curves on projected rational normal scrolls"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Singularities of a general projection of S(a,b) to P3.
    #[command(allow_negative_numbers = true)]
    Surface { a: i64, b: i64 },
    /// Cohomology of the line bundle O_S(c·eta + d·f) on S(a,b).
    #[command(allow_negative_numbers = true)]
    Cohom { a: i64, b: i64, c: i64, d: i64 },
    /// Invariants and tables of the projection of a curve of class (c,d).
    #[command(allow_negative_numbers = true)]
    Curve {
        a: i64,
        b: i64,
        c: i64,
        d: i64,
        /// Linkage degree; defaults to the preserved linkage degree.
        #[arg(long)]
        m: Option<i64>,
        /// Last n of the tables; defaults to m + deg X + 2.
        #[arg(long)]
        nmax: Option<i64>,
    },
    /// Curves on the ruled cubic surface.
    Cubic {
        #[command(subcommand)]
        command: CubicCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum CubicCommand {
    /// Smooth classes of maximal rank with 1 <= c <= cmax, 0 <= d <= dmax.
    Scan {
        #[arg(long)]
        cmax: i64,
        #[arg(long)]
        dmax: i64,
        /// Also scan the ruling class (0,1).
        #[arg(long)]
        rulings: bool,
        /// Emit tables for every scanned class, not only maximal-rank ones.
        #[arg(long)]
        all_tables: bool,
    },
    /// Parity, reduction and effectiveness of a triple (c, d, alpha).
    #[command(allow_negative_numbers = true)]
    Apic {
        c: i64,
        d: i64,
        /// Entries of alpha: `u`, `p/q`, `inf`, `(-u)`; a leading `-` negates.
        #[arg(allow_hyphen_values = true)]
        alpha: Vec<String>,
    },
    /// Whether two triples `c,d,{alpha}` are linked by a surface of degree m.
    Link {
        #[arg(allow_hyphen_values = true)]
        t1: String,
        #[arg(allow_hyphen_values = true)]
        t2: String,
        m: i64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub const INVALID: u8 = 2;
    pub const PRECONDITION: u8 = 3;
    pub const INTERNAL: u8 = 4;

    fn invalid(msg: impl Into<String>) -> Self {
        CliError {
            code: Self::INVALID,
            message: msg.into(),
        }
    }

    fn precondition(msg: impl Into<String>) -> Self {
        CliError {
            code: Self::PRECONDITION,
            message: msg.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidInput(_) | Error::Parse(_) | Error::Overflow => CliError::INVALID,
            Error::Precondition(_) | Error::Parity { .. } => CliError::PRECONDITION,
            Error::EnumerationBound(_) | Error::Internal(_) => CliError::INTERNAL,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

pub fn run(cli: &Cli) -> CliResult<Report> {
    match &cli.command {
        Command::Surface { a, b } => cmd_surface(*a, *b),
        Command::Cohom { a, b, c, d } => cmd_cohomology(*a, *b, *c, *d),
        Command::Curve {
            a,
            b,
            c,
            d,
            m,
            nmax,
        } => cmd_curve(*a, *b, *c, *d, *m, *nmax),
        Command::Cubic { command } => match command {
            CubicCommand::Scan {
                cmax,
                dmax,
                rulings,
                all_tables,
            } => cmd_cubic_scan(*cmax, *dmax, *rulings, *all_tables),
            CubicCommand::Apic { c, d, alpha } => cmd_cubic_apic(*c, *d, alpha),
            CubicCommand::Link { t1, t2, m } => cmd_cubic_link(t1, t2, *m),
        },
    }
}

/// Parses `args` (without the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> CliResult<(Report, Format)>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once("scrollcurves".into()).chain(args.into_iter().map(Into::into));
    let cli = Cli::try_parse_from(argv).map_err(|e| CliError::invalid(e.to_string()))?;
    Ok((run(&cli)?, cli.format))
}

fn scroll(a: i64, b: i64) -> CliResult<ScrollSurface> {
    if !(1..=MAX_SCROLL_PARAM).contains(&a) || !(1..=MAX_SCROLL_PARAM).contains(&b) {
        return Err(CliError::invalid(format!(
            "scroll parameters must lie in 1..={MAX_SCROLL_PARAM}, got ({a},{b})"
        )));
    }
    Ok(ScrollSurface::new(a, b)?)
}

fn class(c: i64, d: i64) -> CliResult<DivisorClass> {
    if c.abs() > MAX_CLASS_COORD || d.abs() > MAX_CLASS_COORD {
        return Err(CliError::invalid(format!(
            "class coordinates must satisfy |c|,|d| <= {MAX_CLASS_COORD}, got ({c},{d})"
        )));
    }
    Ok(DivisorClass::new(c, d))
}

pub fn cmd_surface(a: i64, b: i64) -> CliResult<Report> {
    let mut r = Report::new(format!("surface {a} {b}"));
    r.input("a", a).input("b", b);
    let s = scroll(a, b)?;
    if s.degree() < 3 {
        return Err(CliError::invalid(
            "S(1,1) is excluded: the quadric has no double curve under projection",
        ));
    }
    let g = generic_invariants(&s)?;
    let c = closed_form_invariants(s.a(), s.b())?;
    r.result("deg_x", g.deg_x)
        .result("m2_class", g.m2_class.to_string())
        .result("deg_n2", g.deg_n2)
        .result("genus_n2", g.genus_n2)
        .result("triple_points", g.triple_points)
        .result("pinch_points", g.pinch_points)
        .result("surface_family_dim", g.surface_family_dim)
        .result("closed_deg_n2", c.deg_n2)
        .result("closed_genus_n2", c.genus_n2)
        .result("closed_triple_points", c.triple_points)
        .result("closed_pinch_points", c.pinch_points)
        .result("closed_forms_agree", g == c);
    if g != c {
        return Err(CliError {
            code: CliError::INTERNAL,
            message: format!("Chow-ring and closed-form invariants differ on {s}: {g:?} vs {c:?}"),
        });
    }
    Ok(r)
}

pub fn cmd_cohomology(a: i64, b: i64, c: i64, d: i64) -> CliResult<Report> {
    let mut r = Report::new(format!("cohom {a} {b} {c} {d}"));
    r.input("a", a).input("b", b).input("c", c).input("d", d);
    let s = scroll(a, b)?;
    let k = class(c, d)?;
    let v = cohomology(&s, k)?;
    let effective = is_effective(&s, k);
    r.result("h0", v.h0)
        .result("h1", v.h1)
        .result("h2", v.h2)
        .result("chi", v.chi);
    r.result("effective", effective);
    if effective {
        r.result("natural_cohomology", has_natural_cohomology(&s, k)?);
    }
    if c >= 0 {
        match h0_oracle(&s, k) {
            Ok(n) => {
                r.result("oracle_h0", n);
                r.result("oracle_agrees", n as i64 == v.h0);
                if n as i64 != v.h0 {
                    return Err(CliError {
                        code: CliError::INTERNAL,
                        message: format!("monomial count {n} disagrees with h0 = {}", v.h0),
                    });
                }
            }
            Err(Error::EnumerationBound(msg)) => r.warnings.push(format!("oracle skipped: {msg}")),
            Err(e) => return Err(e.into()),
        }
    }
    Ok(r)
}

fn tables_for(
    label: String,
    hilbert: &FunctionTable,
    rao: &FunctionTable,
    structure: &FunctionTable,
) -> Table {
    let rows = hilbert
        .iter()
        .map(|(n, h0)| TableRow {
            n,
            h0_ideal: h0,
            h1_ideal: rao.get(n).unwrap_or(0),
            h1_structure: structure.get(n).unwrap_or(0),
        })
        .collect();
    Table { label, rows }
}

pub fn cmd_curve(
    a: i64,
    b: i64,
    c: i64,
    d: i64,
    m: Option<i64>,
    nmax: Option<i64>,
) -> CliResult<Report> {
    let mut r = Report::new(format!("curve {a} {b} {c} {d}"));
    r.input("a", a).input("b", b).input("c", c).input("d", d);
    if let Some(m) = m {
        r.input("m", m);
    }
    if let Some(n) = nmax {
        r.input("nmax", n);
    }
    let s = scroll(a, b)?;
    let k = class(c, d)?;
    if !smooth_class(&s, k) {
        return Err(CliError::precondition(format!(
            "{k} has no smooth irreducible member on {s} (need c = 1, d = 0; c = 0, d = 1; or c > 0 and d >= c·e with e = {})",
            s.e()
        )));
    }
    let m = match m {
        Some(m) if m < 0 => {
            return Err(CliError::invalid(format!(
                "--m must be nonnegative, got {m}"
            )))
        }
        Some(m) => m,
        None => {
            let q = linkage_degree(&s, k, adjunction_genus(&s, k)?)?;
            if !q.is_integer() || *q.numer() <= 0 {
                return Err(CliError::precondition(format!(
                    "linkage degree 2·C.M2/h.M2 = {q} is not a positive integer; pass --m"
                )));
            }
            q.to_integer()
        }
    };
    let bound = default_table_bound(&s, m);
    let n_max = nmax.unwrap_or(bound);
    if !(0..=MAX_NMAX).contains(&n_max) {
        return Err(CliError::invalid(format!(
            "--nmax must lie in 0..={MAX_NMAX}, got {n_max}"
        )));
    }
    if n_max < bound {
        r.warnings.push(format!(
            "table ends at {n_max} < m + deg X + 2 = {bound}; trailing zeros not verified"
        ));
    }

    let normal = normal_bundle_dims(&s, k)?;
    let gap = family_gap(&s, k)?;
    r.result("degree", degree_in_p3(&s, k)?)
        .result("genus", adjunction_genus(&s, k)?)
        .result("m", m)
        .result("h0_normal", normal.h0)
        .result("h1_normal", normal.h1)
        .result("curve_family_dim", gap.curve_family_dim)
        .result("gap", gap.gap);

    let hilbert = FunctionTable::tabulate(0, n_max, |n| hilbert_fn(&s, k, m, n))?;
    let rao = FunctionTable::tabulate(0, n_max, |n| rao_fn(&s, k, m, n))?;
    let structure = FunctionTable::tabulate(0, n_max, |n| specialty(&s, k, n))?;
    r.result("rao_vanishes", rao.is_identically_zero());
    r.tables
        .push(tables_for(k.to_string(), &hilbert, &rao, &structure));
    Ok(r)
}

pub fn cmd_cubic_scan(cmax: i64, dmax: i64, rulings: bool, all_tables: bool) -> CliResult<Report> {
    let mut r = Report::new(format!("cubic scan --cmax {cmax} --dmax {dmax}"));
    r.input("cmax", cmax)
        .input("dmax", dmax)
        .input("rulings", rulings);
    if !(0..=MAX_SCAN).contains(&cmax) || !(0..=MAX_SCAN).contains(&dmax) {
        return Err(CliError::invalid(format!(
            "scan bounds must lie in 0..={MAX_SCAN}"
        )));
    }
    let s = ruled_cubic_normalization();
    let reports = scan_reports(cmax, dmax, rulings)?;
    let mut maximal = Vec::new();
    let mut acm = Vec::new();
    let mut witnesses = Vec::new();
    for rep in &reports {
        let label = rep.class.to_string();
        match rep.verdict {
            Verdict::MaximalRank => maximal.push(Value::from(label.clone())),
            Verdict::NotMaximalRank { n } => {
                witnesses.push(json!({ "class": label.clone(), "n": n }));
            }
        }
        if rep.acm {
            acm.push(Value::from(label.clone()));
        }
        if all_tables || rep.is_maximal_rank() {
            let (lo, hi) = rep
                .hilbert
                .iter()
                .fold((i64::MAX, i64::MIN), |(lo, hi), (n, _)| {
                    (lo.min(n), hi.max(n))
                });
            let structure = FunctionTable::tabulate(lo, hi, |n| specialty(&s, rep.class, n))?;
            r.tables
                .push(tables_for(label, &rep.hilbert, &rep.rao, &structure));
        }
    }
    r.result("scanned", reports.len())
        .result("maximal_rank_count", maximal.len())
        .result("maximal_rank", maximal)
        .result("acm", acm)
        .result("first_failure", witnesses)
        .result("also_maximal_rank", ruled_cubic::DOUBLE_LINE);
    Ok(r)
}

fn alpha_from_args(entries: &[String]) -> CliResult<Alpha> {
    Ok(parse_alpha(&entries.join(","))?)
}

fn apic_results(r: &mut Report, prefix: &str, t: &APicClass) {
    let reduced = t.reduced_alpha();
    r.result(&format!("{prefix}alpha"), t.alpha.to_string())
        .result(&format!("{prefix}alpha_degree"), t.alpha.degree())
        .result(&format!("{prefix}parity_ok"), t.parity_ok())
        .result(&format!("{prefix}alpha_reduced"), reduced.to_string())
        .result(&format!("{prefix}alpha_reduced_degree"), reduced.degree());
}

pub fn cmd_cubic_apic(c: i64, d: i64, entries: &[String]) -> CliResult<Report> {
    let mut r = Report::new(
        format!("cubic apic {c} {d} {}", entries.join(" "))
            .trim_end()
            .to_string(),
    );
    r.input("c", c)
        .input("d", d)
        .input("alpha", entries.join(","));
    class(c, d)?;
    let t = APicClass::new(c, d, alpha_from_args(entries)?);
    apic_results(&mut r, "", &t);
    t.check_parity()?;
    let effective = ruled_cubic::is_effective(&t)?;
    let preserved = contains_preserved(&t)?;
    r.result("effective", effective)
        .result("contains_preserved", preserved);
    if preserved && smooth_class(&ruled_cubic_normalization(), t.class()) && t.d > 0 {
        let link = preserved_link(&t)?;
        r.result("preserved_link", link.to_string())
            .result("link_degree", t.d);
    }
    Ok(r)
}

fn parse_triple(s: &str) -> CliResult<APicClass> {
    let t: APicClass = s.parse()?;
    class(t.c, t.d)?;
    Ok(t)
}

pub fn cmd_cubic_link(t1: &str, t2: &str, m: i64) -> CliResult<Report> {
    let mut r = Report::new(format!("cubic link {t1} {t2} {m}"));
    r.input("t1", t1).input("t2", t2).input("m", m);
    let a = parse_triple(t1)?;
    let b = parse_triple(t2)?;
    let linked = are_linked(&a, &b, m)?;
    let sum = a.class().checked_add(b.class())?;
    r.result("class_sum", sum.to_string())
        .result(
            "alpha_sum_reduced",
            scrollcurves::ruled_cubic::reduce_alpha(&(&a.alpha + &b.alpha)).to_string(),
        )
        .result("linked", linked);
    Ok(r)
}
