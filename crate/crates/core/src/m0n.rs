//! Twisted sectors of `[M_{0,n}/S_n]`.
//!
//! An automorphism of order `N` of a pointed rational curve fixes two points
//! and permutes the markings in `k` free orbits, with `a ∈ {0,1,2}` of the
//! fixed points marked, so `n = kN + a`. The sector's coarse space is
//! `M_{0,k+2}` modulo `S_k` (one fixed point marked) or `S_k × S_2`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{decompositions, unit_classes, CharacterClass, ClassKind};
use crate::qpoly::{p0_swap, p0_two_fixed, QPolynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symmetry {
    /// Quotient by `S_k`; the two branch points stay ordered.
    TwoFixed,
    /// Quotient by `S_k × S_2`.
    TwoSwapped,
}

impl Symmetry {
    pub fn as_str(&self) -> &'static str {
        match self {
            Symmetry::TwoFixed => "TWO_FIXED",
            Symmetry::TwoSwapped => "TWO_SWAPPED",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoarseSpace {
    /// `M_{0,k+2}/S_k` or `M_{0,k+2}/(S_k × S_2)`.
    Stratum { k: u64, symmetry: Symmetry },
    /// The whole coarse space of `H_g`, carried by the untwisted and
    /// hyperelliptic-involution sectors.
    Ambient { dimension: u64 },
}

impl CoarseSpace {
    pub fn stratum(k: u64, symmetry: Symmetry) -> Self {
        CoarseSpace::Stratum { k, symmetry }
    }

    pub fn dimension(&self) -> u64 {
        match *self {
            CoarseSpace::Stratum { k, .. } => k - 1,
            CoarseSpace::Ambient { dimension } => dimension,
        }
    }

    pub fn k(&self) -> Option<u64> {
        match *self {
            CoarseSpace::Stratum { k, .. } => Some(k),
            CoarseSpace::Ambient { .. } => None,
        }
    }

    pub fn symmetry_str(&self) -> &'static str {
        match self {
            CoarseSpace::Stratum { symmetry, .. } => symmetry.as_str(),
            CoarseSpace::Ambient { .. } => "AMBIENT",
        }
    }

    /// Rational Poincaré polynomial of the coarse space. The ambient space
    /// has trivial rational cohomology.
    pub fn poincare(&self) -> QPolynomial {
        match *self {
            CoarseSpace::Stratum {
                k,
                symmetry: Symmetry::TwoFixed,
            } => p0_two_fixed(k),
            CoarseSpace::Stratum {
                k,
                symmetry: Symmetry::TwoSwapped,
            } => p0_swap(k),
            CoarseSpace::Ambient { .. } => QPolynomial::one(),
        }
    }
}

impl fmt::Display for CoarseSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CoarseSpace::Stratum {
                k,
                symmetry: Symmetry::TwoFixed,
            } => write!(f, "M_0,{}/S_{}", k + 2, k),
            CoarseSpace::Stratum {
                k,
                symmetry: Symmetry::TwoSwapped,
            } => write!(f, "M_0,{}/S_{}xS_2", k + 2, k),
            CoarseSpace::Ambient { dimension } => write!(f, "H_g (dim {dimension})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct M0nSector {
    pub n: u64,
    pub reduced_order: u64,
    pub k: u64,
    pub a: u64,
    pub label: CharacterClass,
    pub coarse: CoarseSpace,
}

/// Twisted sectors ordered by `(N, a, label)`.
pub fn sectors_m0n(n: u64) -> Result<Vec<M0nSector>> {
    if n < 3 {
        return Err(Error::PointCount(n as u32));
    }
    let mut out = Vec::new();
    for order in 2..=n {
        for (k, a) in decompositions(n, order) {
            let (kind, symmetry) = if a == 1 {
                (ClassKind::Full, Symmetry::TwoFixed)
            } else if order == 2 {
                // n even, N = 2: the involution label is -1 ∈ μ_2^*.
                (ClassKind::Full, Symmetry::TwoSwapped)
            } else {
                (ClassKind::Inv, Symmetry::TwoSwapped)
            };
            for label in unit_classes(order, kind)? {
                out.push(M0nSector {
                    n,
                    reduced_order: order,
                    k,
                    a,
                    label,
                    coarse: CoarseSpace::stratum(k, symmetry),
                });
            }
        }
    }
    Ok(out)
}

/// `1 + Σ` coarse Poincaré polynomials of the twisted sectors, unshifted.
///
/// The untwisted summand is fixed to `1`; this is a diagnostic aggregate.
pub fn inertia_poincare_m0n(n: u64) -> Result<QPolynomial> {
    let mut p = QPolynomial::one();
    for s in sectors_m0n(n)? {
        p.add_assign(&s.coarse.poincare());
    }
    Ok(p)
}
