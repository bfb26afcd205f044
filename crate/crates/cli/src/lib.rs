//! Front end for `hypinertia-core`: argument handling, sweeps, and the
//! JSON / CSV / LaTeX / text renderings.
//!
//! Exit codes: `0` success, `1` verification failure, `2` usage error.

pub mod cli;
pub mod records;
pub mod render;

use std::fmt;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use hypinertia_core::ages::exponent_paper;
use hypinertia_core::assembler::{
    oracle_age, pcr_first_principles, pcr_paper, reconcile, stringy_chow, Grading, Mode,
    ReconciliationReport,
};
use hypinertia_core::hyp::{sectors_hyp, HypSector};
use hypinertia_core::laws::{check_genus_with, GenusSummary};
use hypinertia_core::m0n::{sectors_m0n, M0nSector};
use hypinertia_core::qpoly::QPolynomial;
use hypinertia_core::Rational;
use rayon::prelude::*;
use serde::Serialize;

use crate::cli::{
    Cli, Command, PoincareArgs, ReconcileArgs, SectorsArgs, Stack, SweepArgs, VerifyArgs,
};
use crate::records::{
    poly_record, PoincareRecord, PoincareSectorRow, ReportRecord, SectorRecord, SweepRecord,
};
use crate::render::{latex_poly, Cell, Format, Table};

#[derive(Debug)]
pub enum Failure {
    /// Bad arguments; exit code 2.
    Usage(String),
    /// A law failed; exit code 1.
    Verification(String),
    Other(anyhow::Error),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Verification(_) | Failure::Other(_) => 1,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage: {m}"),
            Failure::Verification(m) => write!(f, "FAIL: {m}"),
            Failure::Other(e) => write!(f, "error: {e:#}"),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Other(e)
    }
}

impl From<hypinertia_core::Error> for Failure {
    fn from(e: hypinertia_core::Error) -> Self {
        match e {
            hypinertia_core::Error::Law { .. } => Failure::Verification(e.to_string()),
            hypinertia_core::Error::Genus(_) | hypinertia_core::Error::PointCount(_) => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Other(other.into()),
        }
    }
}

/// Rendered output of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub output: String,
    pub out: Option<PathBuf>,
    pub status: i32,
}

fn outcome(output: String, out: Option<PathBuf>) -> Outcome {
    Outcome {
        output,
        out,
        status: 0,
    }
}

pub fn run(cli: Cli) -> Result<Outcome, Failure> {
    let pool = match cli.jobs {
        Some(n) => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(n as usize)
                .build()
                .map_err(anyhow::Error::from)?,
        ),
        None => None,
    };
    let go = move || match cli.command {
        Command::Sectors(a) => cmd_sectors(a),
        Command::Poincare(a) => cmd_poincare(a),
        Command::Reconcile(a) => cmd_reconcile(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Sweep(a) => cmd_sweep(a),
    };
    match pool {
        Some(p) => p.install(go),
        None => go(),
    }
}

/// Maps `f` over the range in parallel, keeping index order.
fn par_map<T, F>(range: RangeInclusive<u64>, f: F) -> Result<Vec<T>, Failure>
where
    T: Send,
    F: Fn(u64) -> Result<T, Failure> + Sync + Send,
{
    let results: Vec<Result<T, Failure>> = range.into_par_iter().map(f).collect();
    results.into_iter().collect()
}

fn to_json<T: Serialize>(value: &T) -> Result<String, Failure> {
    let mut s = serde_json::to_string_pretty(value).map_err(anyhow::Error::from)?;
    s.push('\n');
    Ok(s)
}

fn json_one_or_many<T: Serialize>(items: &[T], many: bool) -> Result<String, Failure> {
    if many {
        to_json(&items)
    } else {
        to_json(&items[0])
    }
}

fn label_cell(s: &hypinertia_core::exactnum::CharacterClass) -> Cell {
    Cell::Text(s.to_string())
}

pub fn hyp_sector_table(sectors: &[HypSector]) -> Table {
    let mut t = Table::new(vec![
        "g",
        "N",
        "full_order",
        "k",
        "a",
        "label",
        "kind",
        "lambda",
        "coarse",
        "dim",
        "age",
        "exponent_paper",
    ]);
    for s in sectors {
        t.push(vec![
            s.g.into(),
            s.reduced_order.into(),
            s.lift.full_order.into(),
            s.k().into(),
            s.a().into(),
            label_cell(&s.label),
            s.label.kind().as_str().into(),
            s.lambda.map(|l| format!("{:+}", l.as_i8())).into(),
            s.coarse.to_string().into(),
            s.coarse.dimension().into(),
            oracle_age(s).into(),
            exponent_paper(s).into(),
        ]);
    }
    t
}

pub fn m0n_sector_table(sectors: &[M0nSector]) -> Table {
    let mut t = Table::new(vec!["n", "N", "k", "a", "label", "kind", "coarse", "dim"]);
    for s in sectors {
        t.push(vec![
            s.n.into(),
            s.reduced_order.into(),
            s.k.into(),
            s.a.into(),
            label_cell(&s.label),
            s.label.kind().as_str().into(),
            s.coarse.to_string().into(),
            s.coarse.dimension().into(),
        ]);
    }
    t
}

fn cmd_sectors(args: SectorsArgs) -> Result<Outcome, Failure> {
    let format = args.output.format;
    let text = match args.stack {
        Stack::Hyp => {
            if args.n.is_some() || args.n_max.is_some() {
                return Err(Failure::Usage("--n applies to --stack m0n".into()));
            }
            let (range, _) = args.genus.range()?;
            let per_g = par_map(range, |g| Ok(sectors_hyp(g)?))?;
            let all: Vec<HypSector> = per_g.into_iter().flatten().collect();
            match format {
                Format::Json => {
                    to_json(&all.iter().map(SectorRecord::from_hyp).collect::<Vec<_>>())?
                }
                f => hyp_sector_table(&all).render(f)?,
            }
        }
        Stack::M0n => {
            if args.genus.g.is_some() || args.genus.g_max.is_some() {
                return Err(Failure::Usage("--g applies to --stack hyp".into()));
            }
            let (range, _) = args.n_range()?;
            let per_n = par_map(range, |n| Ok(sectors_m0n(n)?))?;
            let all: Vec<M0nSector> = per_n.into_iter().flatten().collect();
            match format {
                Format::Json => {
                    to_json(&all.iter().map(SectorRecord::from_m0n).collect::<Vec<_>>())?
                }
                f => m0n_sector_table(&all).render(f)?,
            }
        }
    };
    Ok(outcome(text, args.output.out))
}

/// Polynomial and per-sector rows for one genus.
pub fn poincare_record(
    g: u64,
    mode: Mode,
    grading: Grading,
    stringy: bool,
) -> Result<PoincareRecord, Failure> {
    let sectors = sectors_hyp(g)?;
    let polynomial = match (stringy, mode) {
        (true, m) => stringy_chow(g, m, grading)?,
        (false, Mode::Paper) => pcr_paper(g)?,
        (false, Mode::FirstPrinciples) => pcr_first_principles(g, grading)?,
    };
    let rows = sectors
        .iter()
        .map(|s| {
            let shift = match mode {
                Mode::Paper => exponent_paper(s),
                Mode::FirstPrinciples => oracle_age(s).scale(grading.factor()),
            };
            let poincare = if stringy {
                QPolynomial::one()
            } else {
                s.coarse.poincare()
            };
            PoincareSectorRow {
                sector: SectorRecord::from_hyp(s),
                shift: shift.into(),
                poincare: poly_record(&poincare),
            }
        })
        .collect();
    Ok(PoincareRecord {
        g,
        mode: match mode {
            Mode::Paper => "paper",
            Mode::FirstPrinciples => "fp",
        },
        grading: match mode {
            Mode::Paper => None,
            Mode::FirstPrinciples => Some(match grading {
                Grading::Real => "real",
                Grading::Complex => "complex",
            }),
        },
        stringy,
        text: polynomial.to_string(),
        total: polynomial.total(),
        polynomial: poly_record(&polynomial),
        sectors: rows,
    })
}

fn rat(r: &records::RationalRecord) -> Rational {
    Rational::new(r.num, r.den)
}

fn poly_from_record(terms: &[records::TermRecord]) -> QPolynomial {
    let mut p = QPolynomial::zero();
    for t in terms {
        // exponents in records come from valid polynomials
        p.add_assign(&QPolynomial::monomial(rat(&t.exp), t.coeff).expect("nonnegative exponent"));
    }
    p
}

fn poincare_table(records: &[PoincareRecord]) -> Table {
    let mut t = Table::new(vec![
        "g",
        "sector",
        "N",
        "k",
        "a",
        "label",
        "lambda",
        "age",
        "exponent_paper",
        "shift",
        "poincare",
    ]);
    for r in records {
        for row in &r.sectors {
            let s = &row.sector;
            t.push(vec![
                r.g.into(),
                match (s.k, s.reduced_order) {
                    (None, _) if s.label.modulus == 1 => "untwisted".into(),
                    (None, _) => "tau".into(),
                    _ => "twisted".into(),
                },
                s.reduced_order.into(),
                s.k.into(),
                s.a.into(),
                Cell::Text(format!(
                    "{{{}}} mod {}",
                    s.label
                        .members
                        .iter()
                        .map(|m| m.to_string())
                        .collect::<Vec<_>>()
                        .join(","),
                    s.label.modulus
                )),
                s.lambda.map(|l| format!("{l:+}")).into(),
                s.age.as_ref().map(rat).into(),
                s.exponent_paper.as_ref().map(rat).into(),
                rat(&row.shift).into(),
                Cell::Poly(poly_from_record(&row.poincare)),
            ]);
        }
        t.push(vec![
            r.g.into(),
            "TOTAL".into(),
            Cell::Empty,
            Cell::Empty,
            Cell::Empty,
            Cell::Empty,
            Cell::Empty,
            Cell::Empty,
            Cell::Empty,
            Cell::Empty,
            Cell::Poly(poly_from_record(&r.polynomial)),
        ]);
    }
    t
}

fn cmd_poincare(args: PoincareArgs) -> Result<Outcome, Failure> {
    let (range, many) = args.genus.range()?;
    let mode: Mode = args.mode.into();
    let grading: Grading = args.grading.into();
    let records = par_map(range, |g| poincare_record(g, mode, grading, args.stringy))?;
    let text = match args.output.format {
        Format::Json => json_one_or_many(&records, many)?,
        Format::Csv => poincare_table(&records).to_csv()?,
        Format::Text => {
            let mut out = String::new();
            for r in &records {
                out.push_str(&format!(
                    "g={} mode={}{}{} total={}\n",
                    r.g,
                    r.mode,
                    r.grading
                        .map(|g| format!(" grading={g}"))
                        .unwrap_or_default(),
                    if r.stringy { " stringy" } else { "" },
                    r.total
                ));
                out.push_str(&format!("P(q) = {}\n\n", r.text));
            }
            out.push_str(&poincare_table(&records).to_text());
            out
        }
        Format::Latex => {
            let mut out = String::new();
            for r in &records {
                out.push_str(&format!(
                    "\\[ P_{{{}}}(q) = {} \\]\n",
                    r.g,
                    latex_poly(&poly_from_record(&r.polynomial))
                ));
            }
            out.push_str(&poincare_table(&records).to_latex());
            out
        }
    };
    Ok(outcome(text, args.output.out))
}

fn report_tables(reports: &[ReconciliationReport]) -> (Table, Table) {
    let mut rows = Table::new(vec![
        "g",
        "N",
        "k",
        "a",
        "label",
        "lambda",
        "exponent_paper",
        "age",
        "twice_age",
        "compared_against",
        "difference",
        "predicted",
    ]);
    let mut totals = Table::new(vec![
        "g",
        "paper_total",
        "first_principles_total",
        "corollary_literal",
        "corollary_clamped",
        "corollary_gap",
        "corollary_gap_status",
    ]);
    for r in reports {
        for row in &r.rows {
            let s = &row.sector;
            rows.push(vec![
                r.g.into(),
                s.reduced_order.into(),
                s.k().into(),
                s.a().into(),
                label_cell(&s.label),
                s.lambda.map(|l| format!("{:+}", l.as_i8())).into(),
                row.exponent_paper.into(),
                row.age.into(),
                row.twice_age.into(),
                row.comparison.as_str().into(),
                row.difference.into(),
                row.predicted.into(),
            ]);
        }
        totals.push(vec![
            r.g.into(),
            r.totals.paper_total.into(),
            r.totals.first_principles_total.into(),
            r.totals.corollary.literal.to_string().into(),
            r.totals.corollary.clamped.to_string().into(),
            r.totals.corollary_gap.to_string().into(),
            "informational".into(),
        ]);
    }
    (rows, totals)
}

fn cmd_reconcile(args: ReconcileArgs) -> Result<Outcome, Failure> {
    let (range, many) = args.genus.range()?;
    let reports = par_map(range, |g| Ok(reconcile(g)?))?;
    let text = match args.output.format {
        Format::Json => {
            let recs: Vec<ReportRecord> = reports.iter().map(ReportRecord::from).collect();
            json_one_or_many(&recs, many)?
        }
        f => {
            let (rows, totals) = report_tables(&reports);
            format!("{}\n{}", rows.render(f)?, totals.render(f)?)
        }
    };
    Ok(outcome(text, args.output.out))
}

#[derive(Debug, Serialize)]
struct VerifySummary {
    g_min: u64,
    g_max: u64,
    passed: bool,
    genera: Vec<GenusLine>,
    failure: Option<String>,
}

#[derive(Debug, Serialize)]
struct GenusLine {
    g: u64,
    sectors: usize,
    total: u64,
}

impl From<GenusSummary> for GenusLine {
    fn from(s: GenusSummary) -> Self {
        GenusLine {
            g: s.g,
            sectors: s.sectors,
            total: s.total,
        }
    }
}

fn tampered_age(s: &HypSector, first_a_family: Option<usize>, idx: usize) -> Rational {
    let a = oracle_age(s);
    if Some(idx) == first_a_family {
        a + Rational::new(1, s.reduced_order as i64)
    } else {
        a
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<Outcome, Failure> {
    if args.g_min > args.g_max {
        return Err(Failure::Usage(format!(
            "empty range: --g-min {} exceeds --g-max {}",
            args.g_min, args.g_max
        )));
    }
    let inject = args.inject_age_fault;
    let results: Vec<Result<GenusSummary, String>> = (args.g_min..=args.g_max)
        .into_par_iter()
        .map(|g| {
            let res = if inject {
                let sectors = sectors_hyp(g).map_err(|e| e.to_string())?;
                let target = sectors.iter().position(|s| s.is_a_family());
                check_genus_with(g, |s| {
                    let idx = sectors.iter().position(|t| t == s).unwrap_or(usize::MAX);
                    tampered_age(s, target, idx)
                })
            } else {
                check_genus_with(g, oracle_age)
            };
            res.map_err(|e| e.to_string())
        })
        .collect();

    let mut genera = Vec::new();
    let mut failure = None;
    for r in results {
        match r {
            Ok(s) => genera.push(GenusLine::from(s)),
            Err(e) => {
                failure = Some(e);
                break;
            }
        }
    }
    let passed = failure.is_none();
    let summary = VerifySummary {
        g_min: args.g_min,
        g_max: args.g_max,
        passed,
        genera,
        failure,
    };
    let text = match args.format {
        Format::Json => to_json(&summary)?,
        _ => {
            let mut out = String::new();
            for line in &summary.genera {
                out.push_str(&format!(
                    "ok   g={} sectors={} total={}\n",
                    line.g, line.sectors, line.total
                ));
            }
            match &summary.failure {
                None => out.push_str(&format!(
                    "PASS: all laws hold for g={}..={}\n",
                    summary.g_min, summary.g_max
                )),
                Some(f) => out.push_str(&format!("FAIL: {f}\n")),
            }
            out
        }
    };
    Ok(Outcome {
        output: text,
        out: args.out,
        status: if passed { 0 } else { 1 },
    })
}

pub fn sweep_record(g: u64) -> Result<SweepRecord, Failure> {
    let sectors = sectors_hyp(g)?;
    let report = reconcile(g)?;
    Ok(SweepRecord {
        g,
        sectors: sectors.iter().map(SectorRecord::from_hyp).collect(),
        pcr_paper: poly_record(&report.pcr_paper),
        pcr_real: poly_record(&report.pcr_real),
        pcr_complex: poly_record(&report.pcr_complex),
        report: ReportRecord::from(&report),
    })
}

fn cmd_sweep(args: SweepArgs) -> Result<Outcome, Failure> {
    if args.format != Format::Json {
        return Err(Failure::Usage("sweep only writes JSON".into()));
    }
    let (range, _) = args.genus.range()?;
    let records = par_map(range, sweep_record)?;
    Ok(outcome(compact_json_array(&records)?, args.out))
}

/// A JSON array with one compact element per line; sweeps get large.
fn compact_json_array<T: Serialize>(items: &[T]) -> Result<String, Failure> {
    let mut out = String::from("[\n");
    for (idx, item) in items.iter().enumerate() {
        if idx > 0 {
            out.push_str(",\n");
        }
        out.push_str(&serde_json::to_string(item).map_err(anyhow::Error::from)?);
    }
    out.push_str("\n]\n");
    Ok(out)
}
