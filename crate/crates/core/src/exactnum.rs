//! Unit groups modulo `M` and the identifications used to label sectors.
//!
//! A character of `Z/N` is recorded by its integer exponent `i`
//! (`χ(ζ_N) = ζ_N^i`), so every label here is a residue.

use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Euler's totient.
pub fn phi(m: u64) -> u64 {
    assert!(m >= 1, "phi is defined for m >= 1");
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Residues in `[1, m]` coprime to `m`; the trivial group `m = 1` yields `[0]`.
pub fn units(m: u64) -> Vec<u64> {
    assert!(m >= 1, "units is defined for m >= 1");
    if m == 1 {
        return alloc::vec![0];
    }
    (1..m).filter(|u| u.gcd(&m) == 1).collect()
}

/// `x - floor(x)`.
pub fn frac(x: Rational) -> Rational {
    x.frac()
}

/// Which identification was applied to the units.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassKind {
    /// No identification: each unit is its own class.
    Full,
    /// `u ~ -u`.
    Inv,
    /// `u ~ u·(M/2 - 1)`, i.e. `ζ ~ -ζ^{-1}`; only for `4 | M`.
    Twist,
}

impl ClassKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ClassKind::Full => "FULL",
            ClassKind::Inv => "INV",
            ClassKind::Twist => "TWIST",
        }
    }

    fn partner(&self, u: u64, m: u64) -> u64 {
        match self {
            ClassKind::Full => u,
            ClassKind::Inv => (m - u) % m,
            ClassKind::Twist => (u * (m / 2 - 1)) % m,
        }
    }
}

/// A unit, or an orbit of units, modulo `modulus`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharacterClass {
    modulus: u64,
    members: Vec<u64>,
    kind: ClassKind,
}

impl CharacterClass {
    /// The class of `u` under `kind`.
    pub fn of(modulus: u64, u: u64, kind: ClassKind) -> Result<Self> {
        check_kind(modulus, kind)?;
        let u = u % modulus;
        if u.gcd(&modulus) != 1 {
            return Err(Error::Inconsistent(alloc::format!(
                "{u} is not a unit modulo {modulus}"
            )));
        }
        let mut members = alloc::vec![u, kind.partner(u, modulus)];
        members.sort_unstable();
        members.dedup();
        Ok(CharacterClass {
            modulus,
            members,
            kind,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn kind(&self) -> ClassKind {
        self.kind
    }

    /// Smallest member.
    pub fn representative(&self) -> u64 {
        self.members[0]
    }

    pub fn contains(&self, u: u64) -> bool {
        self.members.binary_search(&(u % self.modulus)).is_ok()
    }

    /// Image under character inversion `u -> -u`.
    pub fn inverse(&self) -> CharacterClass {
        let m = self.modulus;
        let mut members: Vec<u64> = self.members.iter().map(|&u| (m - u) % m).collect();
        members.sort_unstable();
        CharacterClass {
            modulus: m,
            members,
            kind: self.kind,
        }
    }
}

impl fmt::Display for CharacterClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (idx, u) in self.members.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{u}")?;
        }
        write!(f, "}} mod {}", self.modulus)
    }
}

fn check_kind(modulus: u64, kind: ClassKind) -> Result<()> {
    if modulus == 0 {
        return Err(Error::ZeroModulus);
    }
    if kind == ClassKind::Twist && !modulus.is_multiple_of(4) {
        return Err(Error::TwistModulus(modulus));
    }
    Ok(())
}

/// Orbits of `units(m)` under `kind`, ordered by smallest member.
pub fn unit_classes(m: u64, kind: ClassKind) -> Result<Vec<CharacterClass>> {
    check_kind(m, kind)?;
    let mut out: Vec<CharacterClass> = Vec::new();
    let mut seen = alloc::vec![false; m as usize];
    for u in units(m) {
        if seen[u as usize] {
            continue;
        }
        let c = CharacterClass::of(m, u, kind)?;
        for &v in c.members() {
            seen[v as usize] = true;
        }
        out.push(c);
    }
    Ok(out)
}

/// All `(k, a)` with `n = k·N + a`, `k >= 1`, `a ∈ {0, 1, 2}`, ascending in `a`.
pub fn decompositions(n: u64, order: u64) -> Vec<(u64, u64)> {
    assert!(order >= 2, "reduced order must be at least 2");
    (0..=2u64)
        .filter(|&a| n >= a + order && (n - a).is_multiple_of(order))
        .map(|a| ((n - a) / order, a))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn members(classes: &[CharacterClass]) -> Vec<Vec<u64>> {
        classes.iter().map(|c| c.members().to_vec()).collect()
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(1), 1);
        assert_eq!(phi(5), 4);
        assert_eq!(phi(12), 4);
    }

    #[test]
    fn units_examples() {
        assert_eq!(units(4), [1, 3]);
        assert_eq!(units(5), [1, 2, 3, 4]);
        assert_eq!(units(1), [0]);
    }

    #[test]
    fn unit_class_examples() {
        let c = |m, k| members(&unit_classes(m, k).unwrap());
        assert_eq!(c(4, ClassKind::Inv), [[1, 3]]);
        assert_eq!(c(4, ClassKind::Twist), [[1], [3]]);
        assert_eq!(c(8, ClassKind::Twist), [[1, 3], [5, 7]]);
        assert_eq!(c(12, ClassKind::Twist), [[1, 5], [7, 11]]);
        assert_eq!(c(3, ClassKind::Inv), [[1, 2]]);
    }

    #[test]
    fn twist_rejects_bad_modulus() {
        assert_eq!(
            unit_classes(6, ClassKind::Twist),
            Err(Error::TwistModulus(6))
        );
        assert!(unit_classes(5, ClassKind::Twist).is_err());
    }

    #[test]
    fn decomposition_examples() {
        assert_eq!(decompositions(6, 3), [(2, 0)]);
        assert_eq!(decompositions(6, 2), [(3, 0), (2, 2)]);
        assert!(decompositions(6, 7).is_empty());
        assert_eq!(decompositions(6, 5), [(1, 1)]);
        assert_eq!(decompositions(6, 6), [(1, 0)]);
    }

    #[test]
    fn inverse_class() {
        let c = CharacterClass::of(8, 1, ClassKind::Twist).unwrap();
        assert_eq!(c.inverse().members(), [5, 7]);
        let f = CharacterClass::of(5, 1, ClassKind::Full).unwrap();
        assert_eq!(f.inverse().members(), [4]);
    }

    proptest! {
        #[test]
        fn classes_partition_units(m in 1u64..400) {
            for kind in [ClassKind::Full, ClassKind::Inv, ClassKind::Twist] {
                if kind == ClassKind::Twist && m % 4 != 0 {
                    continue;
                }
                let classes = unit_classes(m, kind).unwrap();
                let mut all: Vec<u64> = classes.iter().flat_map(|c| c.members().to_vec()).collect();
                all.sort_unstable();
                prop_assert_eq!(&all, &units(m));
                for c in &classes {
                    prop_assert!(c.members().len() <= 2);
                    prop_assert_eq!(c.representative(), *c.members().iter().min().unwrap());
                }
                if kind == ClassKind::Full {
                    prop_assert_eq!(classes.len() as u64, phi(m));
                }
                if kind == ClassKind::Inv && m > 2 {
                    prop_assert_eq!(classes.len() as u64, phi(m) / 2);
                }
            }
        }

        #[test]
        fn twist_is_involution(q in 1u64..100) {
            let m = 4 * q;
            for u in units(m) {
                let once = ClassKind::Twist.partner(u, m);
                prop_assert_eq!(ClassKind::Twist.partner(once, m), u);
            }
        }

        #[test]
        fn frac_of_negation(n in -500i64..500, d in 1i64..60) {
            let x = Rational::new(n, d);
            let s = frac(x) + frac(-x);
            prop_assert!(s == Rational::ZERO || s == Rational::ONE);
            prop_assert_eq!(s.is_zero(), x.is_integer());
            prop_assert!(frac(x) >= Rational::ZERO && frac(x) < Rational::ONE);
        }

        #[test]
        fn decompositions_are_exact(n in 3u64..300, order in 2u64..300) {
            let ds = decompositions(n, order);
            if order > 2 {
                prop_assert!(ds.len() <= 1);
            }
            for (k, a) in ds {
                prop_assert!(k >= 1 && a <= 2);
                prop_assert_eq!(n, k * order + a);
            }
        }

        #[test]
        fn phi_matches_count(m in 1u64..500) {
            let brute = (1..=m).filter(|u| u.gcd(&m) == 1).count() as u64;
            prop_assert_eq!(phi(m), brute);
        }
    }
}
