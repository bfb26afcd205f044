use alloc::string::String;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("twisted identification not involutive for this modulus ({0})")]
    TwistModulus(u64),
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("negative shift {0}")]
    NegativeShift(Rational),
    #[error("[M_0,n/S_n] needs n >= 3, got {0}")]
    PointCount(u32),
    #[error("hyperelliptic moduli need g >= 2, got {0}")]
    Genus(u32),
    #[error("{law} violated at {sector}: {detail}")]
    Law {
        law: &'static str,
        sector: String,
        detail: String,
    },
    #[error("internal consistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = core::result::Result<T, Error>;
