//! Twisted sectors of the moduli stack `H_g` of hyperelliptic curves.
//!
//! Sectors are indexed by the order `N` of the automorphism induced on the
//! quotient line. For `N >= 2`, `2g + 2 = kN + a` as for `[M_{0,n}/S_n]`,
//! and each sector of the genus-zero stack is covered twice. `N = 1`
//! carries the untwisted sector and the hyperelliptic involution.
//!
//! Each sector also records an explicit lift of the automorphism to the
//! normal forms
//!
//! ```text
//! a = 0:      y^2 = ∏ (x^N - α_m),    x -> ζ_N^i x,  y -> ±y
//! a = 1, 2:   y^2 = x ∏ (x^N - α_m),  x -> ζ_N^i x,  y -> ±ζ_{2N}^i y
//! ```
//!
//! stored with both multipliers as powers of `ζ_{2N}`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exactnum::{decompositions, unit_classes, CharacterClass, ClassKind};
use crate::m0n::{CoarseSpace, Symmetry};

/// The sign `λ` distinguishing the two lifts that fix, or swap in pairs,
/// the four points over the branch points of the quotient map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i8(&self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum YClass {
    /// `y -> ±y`
    PlusMinusOne,
    /// `y -> ±ζ_{2N}^i y`
    PlusMinusZeta,
}

impl YClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            YClass::PlusMinusOne => "PLUS_MINUS_ONE",
            YClass::PlusMinusZeta => "PLUS_MINUS_ZETA",
        }
    }
}

/// `x -> ζ_N^{x_exp} x`, `y -> ζ_{2N}^{y_exp} y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LiftAction {
    pub reduced_order: u64,
    pub x_exp: u64,
    pub y_exp: u64,
    pub y_class: YClass,
    pub full_order: u64,
}

impl LiftAction {
    pub fn new(reduced_order: u64, x_exp: u64, y_exp: u64, y_class: YClass) -> Self {
        let m = 2 * reduced_order;
        let x_exp = x_exp % reduced_order;
        let y_exp = y_exp % m;
        // order of (ζ_{2N}^{2 x_exp}, ζ_{2N}^{y_exp}) in μ_{2N} × μ_{2N}
        let full_order = m / (2 * x_exp).gcd(&y_exp).gcd(&m);
        LiftAction {
            reduced_order,
            x_exp,
            y_exp,
            y_class,
            full_order,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HypFamily {
    Untwisted,
    /// The hyperelliptic involution.
    Tau,
    Twisted {
        k: u64,
        a: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypSector {
    pub g: u64,
    pub reduced_order: u64,
    pub family: HypFamily,
    pub label: CharacterClass,
    pub lambda: Option<Sign>,
    pub coarse: CoarseSpace,
    pub lift: LiftAction,
}

impl HypSector {
    pub fn k(&self) -> Option<u64> {
        match self.family {
            HypFamily::Twisted { k, .. } => Some(k),
            _ => None,
        }
    }

    pub fn a(&self) -> Option<u64> {
        match self.family {
            HypFamily::Twisted { a, .. } => Some(a),
            _ => None,
        }
    }

    pub fn is_twisted(&self) -> bool {
        matches!(self.family, HypFamily::Twisted { .. })
    }

    /// `dim H_g - dim coarse`.
    pub fn codimension(&self) -> u64 {
        (2 * self.g - 1) - self.coarse.dimension()
    }

    /// Label representative reduced to a residue mod `N`: the exponent of
    /// the induced action `x -> ζ_N^i x`.
    pub fn x_exponent(&self) -> u64 {
        self.label.representative() % self.reduced_order
    }

    /// Sector in the `A_n` families of the closed formula (`N > 2`).
    pub fn is_a_family(&self) -> bool {
        self.is_twisted() && self.reduced_order > 2
    }
}

impl fmt::Display for HypSector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            HypFamily::Untwisted => write!(f, "g={} untwisted", self.g),
            HypFamily::Tau => write!(f, "g={} tau", self.g),
            HypFamily::Twisted { k, a } => {
                write!(
                    f,
                    "g={} N={} k={} a={} label={}",
                    self.g, self.reduced_order, k, a, self.label
                )?;
                if let Some(l) = self.lambda {
                    write!(f, " lambda={:+}", l.as_i8())?;
                }
                Ok(())
            }
        }
    }
}

fn even_lift_exponent(i: u64, order: u64) -> u64 {
    // the order-N lift: y -> ±ζ_{2N}^i y with the sign making the exponent even
    if i.is_multiple_of(2) {
        i
    } else {
        i + order
    }
}

/// All sectors of `H_g`: untwisted, tau, then twisted sectors ordered by
/// `(N, a, label modulus, label, λ)`.
pub fn sectors_hyp(g: u64) -> Result<Vec<HypSector>> {
    if g < 2 {
        return Err(Error::Genus(g as u32));
    }
    let n = 2 * g + 2;
    let ambient = CoarseSpace::Ambient {
        dimension: 2 * g - 1,
    };
    let mut out = alloc::vec![
        HypSector {
            g,
            reduced_order: 1,
            family: HypFamily::Untwisted,
            label: CharacterClass::of(1, 0, ClassKind::Full)?,
            lambda: None,
            coarse: ambient,
            lift: LiftAction::new(1, 0, 0, YClass::PlusMinusOne),
        },
        HypSector {
            g,
            reduced_order: 1,
            family: HypFamily::Tau,
            label: CharacterClass::of(2, 1, ClassKind::Full)?,
            lambda: None,
            coarse: ambient,
            lift: LiftAction::new(1, 0, 1, YClass::PlusMinusOne),
        },
    ];

    for order in 2..=n {
        for (k, a) in decompositions(n, order) {
            let symmetry = if order == 2 {
                if g.is_multiple_of(2) {
                    Symmetry::TwoFixed
                } else {
                    Symmetry::TwoSwapped
                }
            } else if a == 1 {
                Symmetry::TwoFixed
            } else {
                Symmetry::TwoSwapped
            };
            let coarse = CoarseSpace::stratum(k, symmetry);
            let family = HypFamily::Twisted { k, a };
            let mut push = |label: CharacterClass, lambda: Option<Sign>, lift: LiftAction| {
                out.push(HypSector {
                    g,
                    reduced_order: order,
                    family,
                    label,
                    lambda,
                    coarse,
                    lift,
                });
            };
            let m2 = 2 * order;
            match a {
                0 => {
                    let zeta = YClass::PlusMinusOne;
                    if k % 2 == 0 {
                        for c in unit_classes(order, ClassKind::Inv)? {
                            let i = c.representative();
                            push(
                                c.clone(),
                                Some(Sign::Plus),
                                LiftAction::new(order, i, 0, zeta),
                            );
                            push(c, Some(Sign::Minus), LiftAction::new(order, i, order, zeta));
                        }
                    } else {
                        for c in unit_classes(order, ClassKind::Full)? {
                            let i = c.representative();
                            push(c, None, LiftAction::new(order, i, 0, zeta));
                        }
                    }
                }
                1 => {
                    let zeta = YClass::PlusMinusZeta;
                    for c in unit_classes(order, ClassKind::Full)? {
                        let i = c.representative();
                        let lift = LiftAction::new(order, i, even_lift_exponent(i, order), zeta);
                        push(c, None, lift);
                    }
                    for c in unit_classes(m2, ClassKind::Full)? {
                        let u = c.representative();
                        push(c, None, LiftAction::new(order, u, u, zeta));
                    }
                }
                2 => {
                    let zeta = YClass::PlusMinusZeta;
                    if k % 2 == 0 {
                        if order % 2 == 1 {
                            for c in unit_classes(order, ClassKind::Inv)? {
                                let i = c.representative();
                                let lift =
                                    LiftAction::new(order, i, even_lift_exponent(i, order), zeta);
                                push(c, None, lift);
                            }
                        }
                        for c in unit_classes(m2, ClassKind::Inv)? {
                            let u = c.representative();
                            push(c, None, LiftAction::new(order, u, u, zeta));
                        }
                    } else {
                        if order % 2 != 0 {
                            return Err(Error::Inconsistent(format!(
                                "a=2 with k={k} odd forces N even, got N={order}"
                            )));
                        }
                        for c in unit_classes(m2, ClassKind::Twist)? {
                            let u = c.representative();
                            push(c, None, LiftAction::new(order, u, u, zeta));
                        }
                    }
                }
                _ => unreachable!("decompositions yields a in 0..=2"),
            }
        }
    }
    Ok(out)
}

/// Index in `all` of the sector obtained by inverting the automorphism.
///
/// The label class is mapped by `u -> -u`; `λ` is kept.
pub fn iota_index(sector: &HypSector, all: &[HypSector]) -> Result<usize> {
    let target = sector.label.inverse();
    all.iter()
        .position(|s| {
            s.reduced_order == sector.reduced_order
                && s.family == sector.family
                && s.coarse == sector.coarse
                && s.lambda == sector.lambda
                && s.label.modulus() == target.modulus()
                && s.label.kind() == target.kind()
                && s.label.contains(target.representative())
        })
        .ok_or_else(|| Error::Inconsistent(format!("no inverse sector for {sector}")))
}

pub fn iota<'a>(sector: &HypSector, all: &'a [HypSector]) -> Result<&'a HypSector> {
    iota_index(sector, all).map(|i| &all[i])
}
