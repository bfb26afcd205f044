//! Polynomials in `q` with nonnegative rational exponents and nonnegative
//! integer coefficients.
//!
//! The canonical text form lists terms in ascending exponent order,
//! `c*q^(e)` for `e > 0` and the bare coefficient for the constant term,
//! joined by `" + "`. The zero polynomial renders as `0`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    terms: BTreeMap<Rational, u64>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial::default()
    }

    pub fn one() -> Self {
        QPolynomial::constant(1)
    }

    pub fn constant(c: u64) -> Self {
        let mut p = QPolynomial::zero();
        p.add_term(Rational::ZERO, c);
        p
    }

    /// `coeff · q^exp`.
    pub fn monomial(exp: Rational, coeff: u64) -> Result<Self> {
        if exp.is_negative() {
            return Err(Error::NegativeShift(exp));
        }
        let mut p = QPolynomial::zero();
        p.add_term(exp, coeff);
        Ok(p)
    }

    fn add_term(&mut self, exp: Rational, coeff: u64) {
        if coeff == 0 {
            return;
        }
        *self.terms.entry(exp).or_insert(0) += coeff;
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (Rational, u64)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, *c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: Rational) -> u64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn constant_term(&self) -> u64 {
        self.coeff(Rational::ZERO)
    }

    pub fn add(&self, other: &QPolynomial) -> QPolynomial {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &QPolynomial) {
        for (e, c) in other.terms() {
            self.add_term(e, c);
        }
    }

    pub fn mul(&self, other: &QPolynomial) -> QPolynomial {
        let mut out = QPolynomial::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// `q^e · self`.
    pub fn shift(&self, e: Rational) -> Result<QPolynomial> {
        if e.is_negative() {
            return Err(Error::NegativeShift(e));
        }
        Ok(QPolynomial {
            terms: self.terms.iter().map(|(x, c)| (*x + e, *c)).collect(),
        })
    }

    /// Multiplies every coefficient by `k`.
    pub fn scale(&self, k: u64) -> QPolynomial {
        if k == 0 {
            return QPolynomial::zero();
        }
        QPolynomial {
            terms: self.terms.iter().map(|(x, c)| (*x, c * k)).collect(),
        }
    }

    /// Value at `q = 1`.
    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn max_exponent(&self) -> Option<Rational> {
        self.terms.keys().next_back().copied()
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            if e.is_zero() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*q^({e})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse polynomial term `{0}`")]
pub struct ParsePolynomialError(pub String);

/// Accepts the canonical form; terms may appear in any order and repeat.
impl FromStr for QPolynomial {
    type Err = ParsePolynomialError;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        let s = s.trim();
        let mut out = QPolynomial::zero();
        if s == "0" {
            return Ok(out);
        }
        for term in s.split('+') {
            let term = term.trim();
            let bad = || ParsePolynomialError(String::from(term));
            let (coeff, exp) = match term.split_once("*q^") {
                Some((c, e)) => {
                    let e = e
                        .strip_prefix('(')
                        .and_then(|e| e.strip_suffix(')'))
                        .ok_or_else(bad)?;
                    (c, e.parse::<Rational>().map_err(|_| bad())?)
                }
                None => (term, Rational::ZERO),
            };
            let coeff: u64 = coeff.trim().parse().map_err(|_| bad())?;
            if exp.is_negative() {
                return Err(bad());
            }
            out.add_term(exp, coeff);
        }
        Ok(out)
    }
}

/// Poincaré polynomial of `M_{0,k+2}/S_k`: `1 + q + … + q^{k-1}`.
pub fn p0_two_fixed(k: u64) -> QPolynomial {
    assert!(k >= 1);
    let mut p = QPolynomial::zero();
    for i in 0..k as i64 {
        p.add_term(Rational::from_integer(i), 1);
    }
    p
}

/// Poincaré polynomial of `M_{0,k+2}/(S_k × S_2)`.
pub fn p0_swap(k: u64) -> QPolynomial {
    assert!(k >= 1);
    if k == 1 {
        return QPolynomial::one();
    }
    let mut p = QPolynomial::zero();
    for i in 0..=((k - 2) / 4) as i64 {
        p.add_term(Rational::from_integer(i), 1);
        p.add_term(Rational::from_integer(i + 1), 1);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec::Vec;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn poly(s: &str) -> QPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn shift_mul_add_examples() {
        assert_eq!(
            poly("1 + 1*q^(1)").shift(r(1, 2)).unwrap(),
            poly("1*q^(1/2) + 1*q^(3/2)")
        );
        assert_eq!(poly("1*q^(1/2)").mul(&poly("1*q^(1/3)")), poly("1*q^(5/6)"));
        let p = poly("3 + 2*q^(7/5)");
        assert_eq!(p.add(&QPolynomial::zero()), p);
        assert_eq!(p.shift(r(-1, 2)), Err(Error::NegativeShift(r(-1, 2))));
    }

    #[test]
    fn totals() {
        assert_eq!(poly("1 + 2*q^(1) + 1*q^(2)").total(), 4);
        assert_eq!(QPolynomial::zero().total(), 0);
        assert_eq!(poly("1*q^(1/2) + 1*q^(3/2)").total(), 2);
    }

    #[test]
    fn generators() {
        assert_eq!(p0_two_fixed(3), poly("1 + 1*q^(1) + 1*q^(2)"));
        assert_eq!(p0_two_fixed(1), QPolynomial::one());
        assert_eq!(
            p0_two_fixed(5),
            poly("1 + 1*q^(1) + 1*q^(2) + 1*q^(3) + 1*q^(4)")
        );
        assert_eq!(p0_swap(1), QPolynomial::one());
        assert_eq!(p0_swap(2), poly("1 + 1*q^(1)"));
        assert_eq!(p0_swap(6), poly("1 + 2*q^(1) + 1*q^(2)"));
    }

    #[test]
    fn canonical_text() {
        let p = poly("2*q^(12/5) + 2 + 1*q^(1/2)");
        assert_eq!(p.to_string(), "2 + 1*q^(1/2) + 2*q^(12/5)");
        assert_eq!(QPolynomial::zero().to_string(), "0");
        assert!("2*q^(-1)".parse::<QPolynomial>().is_err());
        assert!("2*q^1".parse::<QPolynomial>().is_err());
    }

    #[test]
    fn generator_totals() {
        for k in 1..200u64 {
            assert_eq!(p0_two_fixed(k).total(), k);
            let expected = if k == 1 { 1 } else { 2 * ((k - 2) / 4 + 1) };
            assert_eq!(p0_swap(k).total(), expected);
        }
    }

    fn arb_poly() -> impl Strategy<Value = QPolynomial> {
        proptest::collection::vec((0i64..40, 1i64..7, 0u64..5), 0..6).prop_map(|ts| {
            let mut p = QPolynomial::zero();
            for (n, d, c) in ts {
                p.add_term(Rational::new(n, d), c);
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&QPolynomial::one()), a.clone());
            prop_assert_eq!(a.add(&b).total(), a.total() + b.total());
            prop_assert_eq!(a.mul(&b).total(), a.total() * b.total());
        }

        #[test]
        fn shift_preserves_total(a in arb_poly(), n in 0i64..30, d in 1i64..9) {
            let s = a.shift(Rational::new(n, d)).unwrap();
            prop_assert_eq!(s.total(), a.total());
            prop_assert_eq!(a.shift(Rational::ZERO).unwrap(), a.clone());
            prop_assert!(s.terms().all(|(_, c)| c > 0));
        }

        #[test]
        fn text_round_trip(a in arb_poly()) {
            let text = a.to_string();
            prop_assert_eq!(text.parse::<QPolynomial>().unwrap(), a.clone());
            let exps: Vec<Rational> = a.terms().map(|(e, _)| e).collect();
            prop_assert!(exps.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
