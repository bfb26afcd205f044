//! Twisted sectors and orbifold cohomology of the moduli stack `H_g` of
//! smooth hyperelliptic curves, in exact arithmetic.
//!
//! * [`exactnum`]: totients, unit groups and their character identifications
//! * [`qpoly`]: polynomials in `q` with rational exponents
//! * [`m0n`]: twisted sectors of `[M_{0,n}/S_n]`
//! * [`hyp`]: twisted sectors of `H_g` with explicit lifts
//! * [`ages`]: printed exponents and first-principles ages
//! * [`assembler`]: Poincaré and stringy Chow polynomials, reconciliation
//! * [`laws`]: identities checked by the `verify` sweep
//!
//! The crate is `no_std` and needs only `alloc`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod ages;
pub mod assembler;
pub mod error;
pub mod exactnum;
pub mod hyp;
pub mod laws;
pub mod m0n;
pub mod qpoly;
pub mod rational;

pub use error::{Error, Result};
pub use rational::Rational;
