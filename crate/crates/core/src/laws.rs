//! Exact identities the sector data must satisfy for every genus.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::ages::{age_oracle, weight_vector};
use crate::assembler::{
    pcr_first_principles, pcr_paper, pcr_paper_by_sector, reconcile_with, stringy_chow, Grading,
    Mode,
};
use crate::error::{Error, Result};
use crate::exactnum::{decompositions, phi, CharacterClass, ClassKind};
use crate::hyp::{sectors_hyp, HypSector};
use crate::rational::Rational;

/// What was checked for one genus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenusSummary {
    pub g: u64,
    pub sectors: usize,
    pub total: u64,
}

fn fail(
    law: &'static str,
    where_: &dyn core::fmt::Display,
    detail: alloc::string::String,
) -> Error {
    Error::Law {
        law,
        sector: where_.to_string(),
        detail,
    }
}

/// Runs every law for genus `g` with oracle ages.
pub fn check_genus(g: u64) -> Result<GenusSummary> {
    check_genus_with(g, crate::assembler::oracle_age)
}

/// Runs every law for genus `g`, taking ages from `age`.
///
/// Checked: zero count, age bounds and integrality, ι-pairing, class and
/// λ independence, printed-vs-oracle differences, sector counts, constant
/// term, mode-equal totals, stringy totals, and agreement of the printed
/// sum with its per-sector re-indexing.
pub fn check_genus_with<F>(g: u64, age: F) -> Result<GenusSummary>
where
    F: Fn(&HypSector) -> Rational,
{
    let sectors = sectors_hyp(g)?;
    let ages: Vec<Rational> = sectors.iter().map(&age).collect();

    for (s, &a) in sectors.iter().zip(&ages) {
        let codim = Rational::from_integer(s.codimension() as i64);
        if a.is_negative() || a > codim {
            return Err(fail(
                "age-bounds",
                s,
                format!("age {a} outside [0, {codim}]"),
            ));
        }
        if !a.scale(s.reduced_order as i64).is_integer() {
            return Err(fail(
                "age-integrality",
                s,
                format!("{} * {a} is not an integer", s.reduced_order),
            ));
        }
        if s.is_twisted() {
            for &u in s.label.members() {
                let mut alt = s.clone();
                alt.label = CharacterClass::of(s.label.modulus(), u, ClassKind::Full)?;
                let other = age_oracle(&weight_vector(&alt));
                if other != a {
                    return Err(fail(
                        "class-independence",
                        s,
                        format!("member {u} has age {other}, sector age {a}"),
                    ));
                }
            }
        }
    }

    // λ-independence: sectors differing only in λ share an age
    for (i, s) in sectors.iter().enumerate() {
        if s.lambda.is_none() {
            continue;
        }
        for (j, t) in sectors.iter().enumerate().skip(i + 1) {
            if t.reduced_order == s.reduced_order && t.label == s.label && ages[i] != ages[j] {
                return Err(fail(
                    "lambda-independence",
                    s,
                    format!("age {} vs {} for the other sign", ages[i], ages[j]),
                ));
            }
        }
    }

    // zero count, ι-pairing and printed-vs-oracle
    let report = reconcile_with(g, &age)?;

    let n = 2 * g + 2;
    for order in 3..=n {
        let count = sectors.iter().filter(|s| s.reduced_order == order).count() as u64;
        let expected = match decompositions(n, order).first() {
            None => 0,
            Some((_, 1)) => 2 * phi(order),
            Some(_) => phi(order),
        };
        if count != expected {
            return Err(fail(
                "sector-count",
                &format_args!("g={g} N={order}"),
                format!("{count} sectors, expected {expected}"),
            ));
        }
    }

    let paper = pcr_paper(g)?;
    let real = pcr_first_principles(g, Grading::Real)?;
    let complex = pcr_first_principles(g, Grading::Complex)?;
    let here = format_args!("g={g}").to_string();
    for (name, p) in [
        ("paper", &paper),
        ("real", &real),
        ("complex", &complex),
        ("report", &report.pcr_real),
    ] {
        if p.constant_term() != 2 {
            return Err(fail(
                "constant-term",
                &here,
                format!("{name} polynomial has constant term {}", p.constant_term()),
            ));
        }
    }
    if paper.total() != real.total() || real.total() != complex.total() {
        return Err(fail(
            "mode-equal-totals",
            &here,
            format!(
                "paper {} / real {} / complex {}",
                paper.total(),
                real.total(),
                complex.total()
            ),
        ));
    }
    for mode in [Mode::Paper, Mode::FirstPrinciples] {
        let t = stringy_chow(g, mode, Grading::Complex)?.total();
        if t != sectors.len() as u64 {
            return Err(fail(
                "stringy-total",
                &here,
                format!("{mode:?} stringy total {t}, {} sectors", sectors.len()),
            ));
        }
    }
    if pcr_paper_by_sector(g)? != paper {
        return Err(fail(
            "index-bookkeeping",
            &here,
            "sum over units differs from sum over sector classes".to_string(),
        ));
    }

    Ok(GenusSummary {
        g,
        sectors: sectors.len(),
        total: paper.total(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_genera_pass() {
        for g in 2..=12 {
            let s = check_genus(g).unwrap();
            assert_eq!(s.g, g);
        }
        assert_eq!(check_genus(2).unwrap().total, 23);
        assert_eq!(check_genus(3).unwrap().sectors, 28);
    }

    #[test]
    fn tampered_age_names_sector() {
        let err = check_genus_with(4, |s| {
            let a = crate::assembler::oracle_age(s);
            if s.reduced_order == 9 {
                a + Rational::new(1, 9)
            } else {
                a
            }
        })
        .unwrap_err();
        let text = err.to_string();
        assert!(text.contains("N=9"), "{text}");
    }
}
