//! Orbifold Poincaré polynomials, stringy Chow polynomials, total
//! dimensions and the printed-vs-recomputed reconciliation.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::ages::{a_exponent, age_oracle, b_exponent, exponent_paper, weight_vector};
use crate::error::{Error, Result};
use crate::exactnum::{phi, units};
use crate::hyp::{iota_index, sectors_hyp, HypSector};
use crate::qpoly::{p0_swap, p0_two_fixed, QPolynomial};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Literal transcription of the closed formula.
    Paper,
    /// Sum over the enumerated sectors with oracle ages.
    FirstPrinciples,
}

/// How an age shifts cohomological degree. Only used by
/// [`Mode::FirstPrinciples`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Grading {
    /// Shift by `2·age`.
    Real,
    /// Shift by `age`.
    Complex,
}

impl Grading {
    pub fn factor(&self) -> i64 {
        match self {
            Grading::Real => 2,
            Grading::Complex => 1,
        }
    }
}

/// One summand `multiplicity · q^exponent · P(q)` of the closed formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaperTerm {
    pub exponent: Rational,
    pub multiplicity: u64,
    pub poincare: QPolynomial,
}

fn check_genus(g: u64) -> Result<()> {
    if g < 2 {
        Err(Error::Genus(g as u32))
    } else {
        Ok(())
    }
}

/// Summands of the closed formula in the order they are printed.
pub fn paper_terms(g: u64) -> Result<Vec<PaperTerm>> {
    check_genus(g)?;
    let mut out = Vec::new();
    let mut a_family =
        |n: u64, multiplicity: u64, printed: fn(u64, u64, u64) -> Rational, swap: bool| {
            for order in 3..=n {
                if !n.is_multiple_of(order) {
                    continue;
                }
                let k = n / order;
                let poincare = if swap { p0_swap(k) } else { p0_two_fixed(k) };
                for i in units(order) {
                    out.push(PaperTerm {
                        exponent: printed(g, i, order),
                        multiplicity,
                        poincare: poincare.clone(),
                    });
                }
            }
        };
    a_family(2 * g + 2, 1, a_exponent, true);
    a_family(2 * g + 1, 2, b_exponent, false);
    a_family(2 * g, 1, b_exponent, true);

    out.push(PaperTerm {
        exponent: Rational::ZERO,
        multiplicity: 2,
        poincare: QPolynomial::one(),
    });
    let low = Rational::new(g as i64 - 1, 2);
    let high = Rational::new(g as i64, 2);
    let (multiplicity, p_high, p_low) = if g.is_multiple_of(2) {
        (1, p0_two_fixed(g + 1), p0_two_fixed(g))
    } else {
        (2, p0_swap(g + 1), p0_swap(g))
    };
    out.push(PaperTerm {
        exponent: low,
        multiplicity,
        poincare: p_high,
    });
    out.push(PaperTerm {
        exponent: high,
        multiplicity,
        poincare: p_low,
    });
    Ok(out)
}

fn assemble(terms: &[PaperTerm], trivial_coarse: bool) -> Result<QPolynomial> {
    let mut p = QPolynomial::zero();
    for t in terms {
        let base = if trivial_coarse {
            QPolynomial::one()
        } else {
            t.poincare.clone()
        };
        p.add_assign(&base.shift(t.exponent)?.scale(t.multiplicity));
    }
    Ok(p)
}

/// The closed formula for the orbifold Poincaré polynomial, evaluated as
/// printed.
pub fn pcr_paper(g: u64) -> Result<QPolynomial> {
    assemble(&paper_terms(g)?, false)
}

/// Per-sector summands `q^{s·age} P(coarse)` with ages supplied by `age`.
pub fn sector_terms<F>(sectors: &[HypSector], grading: Grading, age: F) -> Vec<PaperTerm>
where
    F: Fn(&HypSector) -> Rational,
{
    sectors
        .iter()
        .map(|s| PaperTerm {
            exponent: age(s).scale(grading.factor()),
            multiplicity: 1,
            poincare: s.coarse.poincare(),
        })
        .collect()
}

pub fn oracle_age(s: &HypSector) -> Rational {
    age_oracle(&weight_vector(s))
}

/// Orbifold Poincaré polynomial summed over the enumerated sectors.
pub fn pcr_first_principles(g: u64, grading: Grading) -> Result<QPolynomial> {
    let sectors = sectors_hyp(g)?;
    assemble(&sector_terms(&sectors, grading, oracle_age), false)
}

/// Every coarse Poincaré polynomial replaced by `1`.
pub fn stringy_chow(g: u64, mode: Mode, grading: Grading) -> Result<QPolynomial> {
    match mode {
        Mode::Paper => assemble(&paper_terms(g)?, true),
        Mode::FirstPrinciples => {
            let sectors = sectors_hyp(g)?;
            assemble(&sector_terms(&sectors, grading, oracle_age), true)
        }
    }
}

/// The closed formula re-indexed by sectors: each sector contributes
/// `q^{exponent_paper} P(coarse)`.
pub fn pcr_paper_by_sector(g: u64) -> Result<QPolynomial> {
    let sectors = sectors_hyp(g)?;
    let terms: Vec<PaperTerm> = sectors
        .iter()
        .map(|s| PaperTerm {
            exponent: exponent_paper(s),
            multiplicity: 1,
            poincare: s.coarse.poincare(),
        })
        .collect();
    assemble(&terms, false)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorollaryValues {
    /// Printed total-dimension formula with true floors.
    pub literal: i64,
    /// Same with each negative floor term replaced by `0`.
    pub clamped: i64,
}

pub fn hcr_corollary(g: u64) -> Result<CorollaryValues> {
    check_genus(g)?;
    let n = 2 * g + 2;
    let floor4 = |x: i64| x.div_euclid(4);
    let base = if g.is_multiple_of(2) {
        3 + 2 * g as i64
    } else {
        2 + 4 * (floor4(n as i64 - 2) + floor4(n as i64 - 1))
    };
    let mut fixed_sum = 0i64;
    let mut literal_swap = 0i64;
    let mut clamped_swap = 0i64;
    for order in 3..=n {
        let tot = phi(order) as i64;
        if (n - 1).is_multiple_of(order) {
            fixed_sum += ((n - 1) / order) as i64 * tot;
        }
        for m in [n, n - 2] {
            if m % order == 0 {
                let f = floor4((m / order) as i64 - 2);
                literal_swap += f * tot;
                clamped_swap += f.max(0) * tot;
            }
        }
    }
    Ok(CorollaryValues {
        literal: base + 2 * fixed_sum + 2 * literal_swap,
        clamped: base + 2 * fixed_sum + 2 * clamped_swap,
    })
}

/// Which oracle quantity a printed exponent is compared against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    /// `A_n` sectors: printed exponent against `2·age`.
    TwiceAge,
    /// `N = 2` sectors: printed exponent against `age`.
    Age,
}

impl Comparison {
    pub fn as_str(&self) -> &'static str {
        match self {
            Comparison::TwiceAge => "2*age",
            Comparison::Age => "age",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconciliationRow {
    pub sector: HypSector,
    pub exponent_paper: Rational,
    pub age: Rational,
    pub twice_age: Rational,
    pub comparison: Comparison,
    pub difference: Rational,
    pub predicted: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconciliationTotals {
    pub paper_total: u64,
    pub first_principles_total: u64,
    pub corollary: CorollaryValues,
    /// `paper_total - corollary.literal`; informational only.
    pub corollary_gap: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconciliationReport {
    pub g: u64,
    pub rows: Vec<ReconciliationRow>,
    pub totals: ReconciliationTotals,
    pub pcr_paper: QPolynomial,
    pub pcr_real: QPolynomial,
    pub pcr_complex: QPolynomial,
}

fn violation(law: &'static str, s: &HypSector, detail: alloc::string::String) -> Error {
    Error::Law {
        law,
        sector: s.to_string(),
        detail,
    }
}

/// Builds the report, failing on the first violated per-sector law
/// (printed-vs-oracle, ι-pairing, zero count).
pub fn reconcile(g: u64) -> Result<ReconciliationReport> {
    reconcile_with(g, oracle_age)
}

/// [`reconcile`] with ages taken from `age` instead of the oracle.
pub fn reconcile_with<F>(g: u64, age: F) -> Result<ReconciliationReport>
where
    F: Fn(&HypSector) -> Rational,
{
    let sectors = sectors_hyp(g)?;
    let ages: Vec<Rational> = sectors.iter().map(&age).collect();
    let mut rows = Vec::new();
    for (idx, s) in sectors.iter().enumerate() {
        let printed = exponent_paper(s);
        let a = ages[idx];
        let zeros = weight_vector(s).zero_count() as u64;
        if zeros != s.coarse.dimension() {
            return Err(violation(
                "zero-count",
                s,
                alloc::format!(
                    "{zeros} zero weights, coarse dimension {}",
                    s.coarse.dimension()
                ),
            ));
        }
        let partner = iota_index(s, &sectors)?;
        let codim = Rational::from_integer(s.codimension() as i64);
        if a + ages[partner] != codim {
            return Err(violation(
                "iota-pairing",
                s,
                alloc::format!("age {a} + partner age {} != codim {codim}", ages[partner]),
            ));
        }
        let Some(k) = s.k() else {
            if printed != Rational::ZERO || a != Rational::ZERO {
                return Err(violation(
                    "formula-vs-oracle",
                    s,
                    alloc::format!("exponent {printed}, age {a}, both must vanish"),
                ));
            }
            continue;
        };
        let (comparison, difference, predicted) = if s.reduced_order == 2 {
            (Comparison::Age, printed - a, Rational::ZERO)
        } else {
            (
                Comparison::TwiceAge,
                printed - a.scale(2),
                Rational::from_integer(2 * (k as i64 - 1)),
            )
        };
        if difference != predicted {
            return Err(violation(
                "formula-vs-oracle",
                s,
                alloc::format!(
                    "exponent {printed} - {} = {difference}, predicted {predicted}",
                    comparison.as_str()
                ),
            ));
        }
        rows.push(ReconciliationRow {
            sector: s.clone(),
            exponent_paper: printed,
            age: a,
            twice_age: a.scale(2),
            comparison,
            difference,
            predicted,
        });
    }

    let pcr_paper = pcr_paper(g)?;
    let pcr_real = assemble(&sector_terms(&sectors, Grading::Real, &age), false)?;
    let pcr_complex = assemble(&sector_terms(&sectors, Grading::Complex, &age), false)?;
    let corollary = hcr_corollary(g)?;
    let totals = ReconciliationTotals {
        paper_total: pcr_paper.total(),
        first_principles_total: pcr_real.total(),
        corollary,
        corollary_gap: pcr_paper.total() as i64 - corollary.literal,
    };
    Ok(ReconciliationReport {
        g,
        rows,
        totals,
        pcr_paper,
        pcr_real,
        pcr_complex,
    })
}
