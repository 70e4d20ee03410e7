//! Exact machinery for equal sums of like powers.
//!
//! Everything here is exact: scalars are [`Rational`]s over arbitrary-precision
//! integers, symbolic identities are checked by full expansion with
//! [`MultiPoly`], and solution pairs are compared through [`canonicalize`].
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod error;
pub mod rational;
pub mod ring;
pub mod poly;
pub mod pair;
pub mod families;
pub mod elliptic;
pub mod oracle;

pub use error::{Error, Result};
pub use pair::{canonicalize, power_sum_residual, verify_pair, DegreeClass, PowerSumPair, VerifyReport};
pub use poly::MultiPoly;
pub use rational::Rational;
pub use ring::Ring;
