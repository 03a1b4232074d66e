//! Exact arithmetic for Bernoulli-number 2-adic congruences and the
//! existence of stable almost complex structures on `(4k−1)`-connected
//! `8k`-manifolds.
//!
//! The integer layer ([`exact_arith`] and the two Bernoulli algorithms) is
//! generic over any exact integer scalar; everything else works on the
//! [`Int`] and [`Rational`] aliases below.

pub mod bernoulli;
pub mod congruence;
pub mod error;
pub mod exact_arith;
pub mod fillability;

/// Arbitrary-precision signed integer.
pub type Int = num_bigint::BigInt;

/// Arbitrary-precision fraction in lowest terms with positive denominator.
pub type Rational = num_rational::Ratio<Int>;

pub use error::{Error, Result};
pub use exact_arith::Valuation;
