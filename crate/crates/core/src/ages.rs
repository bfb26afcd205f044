//! Degree-shifting numbers, computed two ways.
//!
//! The printed route evaluates the closed exponents `a_g(i, N)` and
//! `b_g(i, N)` (and the `N = 2` exponents) literally. The first-principles
//! route acts the lift on the cotangent basis `X^j (dX/Y)^2`,
//! `j = 0..=2g-2`, and takes the age of the dual (tangent) representation.

use alloc::vec::Vec;

use crate::hyp::{HypFamily, HypSector};
use crate::rational::Rational;

/// Cotangent weights: entry `j` is `w` where `X^j (dX/Y)^2` is multiplied
/// by `ζ_N^w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    pub modulus: u64,
    pub residues: Vec<u64>,
}

impl WeightVector {
    pub fn zero_count(&self) -> usize {
        self.residues.iter().filter(|&&w| w == 0).count()
    }
}

/// Weights of the sector's automorphism on the cotangent space of `H_g`.
///
/// With `i` the label reduced mod `N`: on `y^2 = ∏(x^N - α)` the basis
/// element `X^j (dX/Y)^2` picks up `ζ^{i(j+2)}`; on `y^2 = x ∏(x^N - α)`
/// the factor `Y^2 -> ζ^i Y^2` leaves `ζ^{i(j+1)}`.
pub fn weight_vector(sector: &HypSector) -> WeightVector {
    let dim = 2 * sector.g - 1;
    let modulus = sector.reduced_order;
    let residues = match sector.family {
        HypFamily::Untwisted | HypFamily::Tau => alloc::vec![0; dim as usize],
        HypFamily::Twisted { a, .. } => {
            let i = sector.x_exponent();
            let offset = if a == 0 { 2 } else { 1 };
            (0..dim).map(|j| (i * (j + offset)) % modulus).collect()
        }
    };
    WeightVector { modulus, residues }
}

/// Age of the tangent representation: each nonzero cotangent weight `w`
/// contributes `1 - w/N`.
pub fn age_oracle(w: &WeightVector) -> Rational {
    let n = w.modulus;
    let numer: u64 = w.residues.iter().filter(|&&r| r != 0).map(|&r| n - r).sum();
    Rational::new(numer as i64, n as i64)
}

fn printed_exponent(g: u64, i: u64, order: u64, offset: u64) -> Rational {
    let dim = 2 * g - 1;
    // Σ {x/N} = (Σ x mod N) / N
    let residues: u64 = (1..=dim).map(|j| (i * (j + offset)) % order).sum();
    (Rational::from_integer(dim as i64) - Rational::new(residues as i64, order as i64)).scale(2)
}

/// `a_g(i, N) = 2(2g - 1 - Σ_{j=1}^{2g-1} {i(j+1)/N})`.
pub fn a_exponent(g: u64, i: u64, order: u64) -> Rational {
    printed_exponent(g, i, order, 1)
}

/// `b_g(i, N) = 2(2g - 1 - Σ_{j=1}^{2g-1} {ij/N})`.
pub fn b_exponent(g: u64, i: u64, order: u64) -> Rational {
    printed_exponent(g, i, order, 0)
}

/// The exponent the closed formula attaches to this sector.
///
/// The untwisted sector and `τ` both sit in the constant term, so they
/// report `0`.
pub fn exponent_paper(sector: &HypSector) -> Rational {
    let g = sector.g;
    match sector.family {
        HypFamily::Untwisted | HypFamily::Tau => Rational::ZERO,
        HypFamily::Twisted { k, .. } if sector.reduced_order == 2 => {
            if k == g + 1 {
                Rational::new(g as i64 - 1, 2)
            } else {
                Rational::new(g as i64, 2)
            }
        }
        HypFamily::Twisted { a: 0, .. } => a_exponent(g, sector.x_exponent(), sector.reduced_order),
        HypFamily::Twisted { .. } => b_exponent(g, sector.x_exponent(), sector.reduced_order),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::CharacterClass;
    use crate::hyp::{sectors_hyp, Sign};

    fn find(g: u64, order: u64, modulus: u64, rep: u64, lambda: Option<Sign>) -> HypSector {
        sectors_hyp(g)
            .unwrap()
            .into_iter()
            .find(|s| {
                s.reduced_order == order
                    && s.label.modulus() == modulus
                    && s.label.contains(rep)
                    && (lambda.is_none() || s.lambda == lambda)
            })
            .unwrap()
    }

    #[test]
    fn weight_examples() {
        let s = find(2, 3, 3, 1, Some(Sign::Plus));
        assert_eq!(weight_vector(&s).residues, [2, 0, 1]);
        let s = find(2, 5, 5, 1, None);
        assert_eq!(weight_vector(&s).residues, [1, 2, 3]);
        let tau = &sectors_hyp(2).unwrap()[1];
        assert_eq!(weight_vector(tau).residues, [0, 0, 0]);
    }

    #[test]
    fn oracle_examples() {
        let w = |m, r: &[u64]| WeightVector {
            modulus: m,
            residues: r.to_vec(),
        };
        assert_eq!(age_oracle(&w(5, &[1, 2, 3])), Rational::new(9, 5));
        assert_eq!(age_oracle(&w(3, &[2, 0, 1])), Rational::ONE);
        assert_eq!(age_oracle(&w(7, &[0, 0, 0, 0])), Rational::ZERO);
    }

    #[test]
    fn printed_examples() {
        assert_eq!(
            exponent_paper(&find(2, 3, 3, 1, Some(Sign::Plus))),
            Rational::from(4)
        );
        assert_eq!(
            exponent_paper(&find(2, 5, 5, 1, None)),
            Rational::new(18, 5)
        );
        assert_eq!(exponent_paper(&find(3, 6, 12, 1, None)), Rational::from(5));
        let k3 = sectors_hyp(2)
            .unwrap()
            .into_iter()
            .find(|s| s.reduced_order == 2 && s.k() == Some(3))
            .unwrap();
        assert_eq!(exponent_paper(&k3), Rational::new(1, 2));
        assert_eq!(exponent_paper(&sectors_hyp(2).unwrap()[1]), Rational::ZERO);
    }

    #[test]
    fn printed_exponent_matches_fractional_parts() {
        use crate::exactnum::frac;
        for g in 2..12u64 {
            for order in 3..(2 * g + 3) {
                for i in crate::exactnum::units(order) {
                    let lit = |offset: u64| {
                        let s: Rational = (1..2 * g)
                            .map(|j| frac(Rational::new((i * (j + offset)) as i64, order as i64)))
                            .sum();
                        (Rational::from_integer(2 * g as i64 - 1) - s).scale(2)
                    };
                    assert_eq!(a_exponent(g, i, order), lit(1));
                    assert_eq!(b_exponent(g, i, order), lit(0));
                }
            }
        }
    }

    #[test]
    fn genus_two_ages() {
        let ages: Vec<Rational> = sectors_hyp(2)
            .unwrap()
            .iter()
            .map(|s| age_oracle(&weight_vector(s)))
            .collect();
        let r = Rational::new;
        let expected = [
            r(0, 1),
            r(0, 1),
            r(1, 2),
            r(1, 1),
            r(1, 1),
            r(1, 1),
            r(3, 2),
            r(3, 2),
            r(9, 5),
            r(8, 5),
            r(7, 5),
            r(6, 5),
            r(9, 5),
            r(7, 5),
            r(8, 5),
            r(6, 5),
            r(3, 2),
            r(3, 2),
        ];
        assert_eq!(ages, expected);
    }

    #[test]
    fn lambda_and_lift_independence() {
        for g in 2..30 {
            let secs = sectors_hyp(g).unwrap();
            for s in secs.iter().filter(|s| s.is_twisted()) {
                let age = age_oracle(&weight_vector(s));
                for &u in s.label.members() {
                    let mut alt = s.clone();
                    alt.label =
                        CharacterClass::of(s.label.modulus(), u, crate::exactnum::ClassKind::Full)
                            .unwrap();
                    assert_eq!(age_oracle(&weight_vector(&alt)), age, "{s} member {u}");
                }
            }
        }
    }
}
