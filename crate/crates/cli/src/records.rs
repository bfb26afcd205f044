//! Serialized shapes. Rationals are always `{"num", "den"}` integer pairs.

use hypinertia_core::ages::{age_oracle, exponent_paper, weight_vector};
use hypinertia_core::assembler::{ReconciliationReport, ReconciliationRow};
use hypinertia_core::exactnum::CharacterClass;
use hypinertia_core::hyp::HypSector;
use hypinertia_core::m0n::{CoarseSpace, M0nSector};
use hypinertia_core::qpoly::QPolynomial;
use hypinertia_core::Rational;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RationalRecord {
    pub num: i64,
    pub den: i64,
}

impl From<Rational> for RationalRecord {
    fn from(r: Rational) -> Self {
        RationalRecord {
            num: r.numer(),
            den: r.denom(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabelRecord {
    pub modulus: u64,
    pub members: Vec<u64>,
    pub kind: &'static str,
}

impl From<&CharacterClass> for LabelRecord {
    fn from(c: &CharacterClass) -> Self {
        LabelRecord {
            modulus: c.modulus(),
            members: c.members().to_vec(),
            kind: c.kind().as_str(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoarseRecord {
    pub k: Option<u64>,
    pub symmetry: &'static str,
    pub dimension: u64,
}

impl From<&CoarseSpace> for CoarseRecord {
    fn from(c: &CoarseSpace) -> Self {
        CoarseRecord {
            k: c.k(),
            symmetry: c.symmetry_str(),
            dimension: c.dimension(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SectorRecord {
    pub stack: &'static str,
    pub g: Option<u64>,
    pub n: u64,
    #[serde(rename = "N")]
    pub reduced_order: u64,
    pub full_order: Option<u64>,
    pub k: Option<u64>,
    pub a: Option<u64>,
    pub label: LabelRecord,
    pub lambda: Option<i8>,
    pub coarse: CoarseRecord,
    pub age: Option<RationalRecord>,
    pub exponent_paper: Option<RationalRecord>,
}

impl SectorRecord {
    pub fn from_m0n(s: &M0nSector) -> Self {
        SectorRecord {
            stack: "m0n",
            g: None,
            n: s.n,
            reduced_order: s.reduced_order,
            full_order: None,
            k: Some(s.k),
            a: Some(s.a),
            label: (&s.label).into(),
            lambda: None,
            coarse: (&s.coarse).into(),
            age: None,
            exponent_paper: None,
        }
    }

    pub fn from_hyp(s: &HypSector) -> Self {
        SectorRecord {
            stack: "hyp",
            g: Some(s.g),
            n: 2 * s.g + 2,
            reduced_order: s.reduced_order,
            full_order: Some(s.lift.full_order),
            k: s.k(),
            a: s.a(),
            label: (&s.label).into(),
            lambda: s.lambda.map(|l| l.as_i8()),
            coarse: (&s.coarse).into(),
            age: Some(age_oracle(&weight_vector(s)).into()),
            exponent_paper: Some(exponent_paper(s).into()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TermRecord {
    pub exp: RationalRecord,
    pub coeff: u64,
}

pub fn poly_record(p: &QPolynomial) -> Vec<TermRecord> {
    p.terms()
        .map(|(e, c)| TermRecord {
            exp: e.into(),
            coeff: c,
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PoincareSectorRow {
    pub sector: SectorRecord,
    pub shift: RationalRecord,
    pub poincare: Vec<TermRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PoincareRecord {
    pub g: u64,
    pub mode: &'static str,
    pub grading: Option<&'static str>,
    pub stringy: bool,
    pub text: String,
    pub total: u64,
    pub polynomial: Vec<TermRecord>,
    pub sectors: Vec<PoincareSectorRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub sector: String,
    pub record: SectorRecord,
    pub exponent_paper: RationalRecord,
    pub age: RationalRecord,
    pub twice_age: RationalRecord,
    pub compared_against: &'static str,
    pub difference: RationalRecord,
    pub predicted: RationalRecord,
}

impl From<&ReconciliationRow> for ReportRow {
    fn from(r: &ReconciliationRow) -> Self {
        ReportRow {
            sector: r.sector.to_string(),
            record: SectorRecord::from_hyp(&r.sector),
            exponent_paper: r.exponent_paper.into(),
            age: r.age.into(),
            twice_age: r.twice_age.into(),
            compared_against: r.comparison.as_str(),
            difference: r.difference.into(),
            predicted: r.predicted.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TotalsRecord {
    pub paper_total: u64,
    pub first_principles_total: u64,
    pub corollary_literal: i64,
    pub corollary_clamped: i64,
    pub corollary_gap: i64,
    pub corollary_gap_status: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRecord {
    pub g: u64,
    pub rows: Vec<ReportRow>,
    pub totals: TotalsRecord,
    pub pcr_paper: Vec<TermRecord>,
    pub pcr_real: Vec<TermRecord>,
    pub pcr_complex: Vec<TermRecord>,
}

impl From<&ReconciliationReport> for ReportRecord {
    fn from(r: &ReconciliationReport) -> Self {
        ReportRecord {
            g: r.g,
            rows: r.rows.iter().map(ReportRow::from).collect(),
            totals: TotalsRecord {
                paper_total: r.totals.paper_total,
                first_principles_total: r.totals.first_principles_total,
                corollary_literal: r.totals.corollary.literal,
                corollary_clamped: r.totals.corollary.clamped,
                corollary_gap: r.totals.corollary_gap,
                corollary_gap_status: "informational",
            },
            pcr_paper: poly_record(&r.pcr_paper),
            pcr_real: poly_record(&r.pcr_real),
            pcr_complex: poly_record(&r.pcr_complex),
        }
    }
}

/// One genus of a full sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRecord {
    pub g: u64,
    pub sectors: Vec<SectorRecord>,
    pub pcr_paper: Vec<TermRecord>,
    pub pcr_real: Vec<TermRecord>,
    pub pcr_complex: Vec<TermRecord>,
    pub report: ReportRecord,
}
