//! Exact integer and rational helpers: normalized fractions, p-adic
//! valuations and binomial coefficients.
//!
//! Everything here is generic over an exact integer scalar (`i64`, `i128`,
//! [`BigInt`]); fixed-width types are only sound while values fit.

use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed};

use crate::error::{Error, Result};

/// Exact signed integer scalar usable by the generic routines.
pub trait ExactInt: Integer + Signed + Clone + FromPrimitive + fmt::Debug + fmt::Display {}

impl<T> ExactInt for T where T: Integer + Signed + Clone + FromPrimitive + fmt::Debug + fmt::Display {}

/// A p-adic valuation extended by `+∞` (the valuation of zero).
///
/// `Finite(_) < Infinite` under the derived ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn is_infinite(self) -> bool {
        matches!(self, Valuation::Infinite)
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    /// `self ≥ bound`; `+∞` clears every bound.
    pub fn is_at_least(self, bound: i64) -> bool {
        self >= Valuation::Finite(bound)
    }

    /// Shift by a finite amount.
    pub fn shifted(self, by: i64) -> Valuation {
        self + Valuation::Finite(by)
    }
}

impl Add for Valuation {
    type Output = Valuation;

    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("+inf"),
        }
    }
}

/// Build `num/den` in lowest terms with a positive denominator.
pub fn rational_make<T: ExactInt>(num: T, den: T) -> Result<Ratio<T>> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Ratio::new(num, den))
}

/// Lowest-terms numerator; carries the sign.
pub fn numerator_of<T: Clone + Integer>(r: &Ratio<T>) -> T {
    r.numer().clone()
}

/// Lowest-terms denominator; always positive.
pub fn denominator_of<T: Clone + Integer>(r: &Ratio<T>) -> T {
    r.denom().clone()
}

/// Trial-division primality test. Only meant for the tiny primes that show
/// up as valuation bases and von Staudt–Clausen candidates.
pub fn is_small_prime<T: ExactInt>(p: &T) -> bool {
    let two = T::from_u8(2).unwrap();
    if *p < two {
        return false;
    }
    let mut d = two;
    while d.clone() * d.clone() <= *p {
        if p.is_multiple_of(&d) {
            return false;
        }
        d = d + T::one();
    }
    true
}

fn require_prime<T: ExactInt>(p: &T) -> Result<()> {
    if is_small_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p.to_string()))
    }
}

// Caller guarantees `n != 0` and `p >= 2`.
fn count_factor<T: ExactInt>(p: &T, n: &T) -> i64 {
    let mut m = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        m = q;
        v += 1;
    }
}

/// p-adic valuation of an integer.
pub fn ord_p_int<T: ExactInt>(p: &T, n: &T) -> Result<Valuation> {
    require_prime(p)?;
    if n.is_zero() {
        return Ok(Valuation::Infinite);
    }
    Ok(Valuation::Finite(count_factor(p, n)))
}

/// p-adic valuation of a rational: `ord_p(Num) − ord_p(Denom)`, `+∞` at zero.
pub fn ord_p<T: ExactInt>(p: &T, r: &Ratio<T>) -> Result<Valuation> {
    require_prime(p)?;
    if r.numer().is_zero() {
        return Ok(Valuation::Infinite);
    }
    Ok(Valuation::Finite(count_factor(p, r.numer()) - count_factor(p, r.denom())))
}

/// 2-adic valuation of a big integer via its trailing zero bits.
pub fn ord2_int(n: &BigInt) -> Valuation {
    match n.trailing_zeros() {
        Some(v) => Valuation::Finite(v as i64),
        None => Valuation::Infinite,
    }
}

/// 2-adic valuation of a big rational.
pub fn ord2(r: &Ratio<BigInt>) -> Valuation {
    match (r.numer().trailing_zeros(), r.denom().trailing_zeros()) {
        (Some(a), Some(b)) => Valuation::Finite(a as i64 - b as i64),
        _ => Valuation::Infinite,
    }
}

/// 2-adic valuation of a nonzero machine integer.
pub fn ord2_u64(n: u64) -> Option<u32> {
    (n != 0).then(|| n.trailing_zeros())
}

/// Exact binomial coefficient `C(n, s)`; zero when `s > n`.
pub fn binomial<T: ExactInt>(n: u64, s: u64) -> T {
    if s > n {
        return T::zero();
    }
    let s = s.min(n - s);
    let mut acc = T::one();
    for i in 0..s {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = acc * T::from_u64(n - i).unwrap() / T::from_u64(i + 1).unwrap();
    }
    acc
}
