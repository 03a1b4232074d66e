//! Bernoulli numbers in both index conventions.
//!
//! Number-theoretic `𝔅_n` comes from `t/(e^t − 1) = Σ 𝔅_n tⁿ/n!`; the
//! topologist's `B_k = (−1)^{k+1} 𝔅_{2k}` is always positive. Values come
//! from the tangent-number scheme and can be cross-checked against the
//! Akiyama–Tanigawa transform.

pub mod akiyama_tanigawa;
mod table;
pub mod tangent;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::{denominator_of, is_small_prime, numerator_of};
use crate::{Int, Rational};

pub use table::{global, BernoulliTable};

/// Number-theoretic index `n` of `𝔅_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NtIndex(u32);

impl NtIndex {
    pub fn new(n: u32) -> Self {
        NtIndex(n)
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

/// Topologist's index `k ≥ 1` of `B_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TopIndex(u32);

impl TopIndex {
    pub fn new(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::Precondition("topological Bernoulli index must be >= 1".into()));
        }
        Ok(TopIndex(k))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn apply(self, r: Rational) -> Rational {
        match self {
            Sign::Plus => r,
            Sign::Minus => -r,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BernoulliIndex {
    Nt(NtIndex),
    Top(TopIndex),
}

/// A Bernoulli number together with the convention its index refers to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliValue {
    pub index: BernoulliIndex,
    pub value: Rational,
}

impl BernoulliValue {
    pub fn of_nt(n: NtIndex) -> Self {
        BernoulliValue { index: BernoulliIndex::Nt(n), value: bernoulli_nt(n) }
    }

    pub fn of_top(k: TopIndex) -> Self {
        BernoulliValue { index: BernoulliIndex::Top(k), value: bernoulli_top(k) }
    }

    /// The same number re-expressed in the number-theoretic convention.
    pub fn to_nt(&self) -> BernoulliValue {
        match self.index {
            BernoulliIndex::Nt(_) => self.clone(),
            BernoulliIndex::Top(k) => {
                let (n, sign) = index_bridge(k);
                BernoulliValue { index: BernoulliIndex::Nt(n), value: sign.apply(self.value.clone()) }
            }
        }
    }
}

/// `𝔅_n`; `𝔅_1 = −1/2`, zero for odd `n > 1`.
pub fn bernoulli_nt(n: NtIndex) -> Rational {
    global().nt(n.0 as usize)
}

/// `B_k = (−1)^{k+1} 𝔅_{2k}`.
pub fn bernoulli_top(k: TopIndex) -> Rational {
    let (n, sign) = index_bridge(k);
    sign.apply(bernoulli_nt(n))
}

/// `k ↦ (2k, (−1)^{k+1})`.
pub fn index_bridge(k: TopIndex) -> (NtIndex, Sign) {
    let sign = if k.0 % 2 == 1 { Sign::Plus } else { Sign::Minus };
    (NtIndex(2 * k.0), sign)
}

/// Primes `p` with `(p − 1) | n`, ascending.
pub fn vsc_primes(n: NtIndex) -> Result<Vec<u64>> {
    let n = n.0 as u64;
    if n == 0 || n % 2 == 1 {
        return Err(Error::Precondition(format!(
            "von Staudt-Clausen denominator needs even n >= 2, got {n}"
        )));
    }
    let mut divisors = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            divisors.push(d);
            if d != n / d {
                divisors.push(n / d);
            }
        }
        d += 1;
    }
    let mut primes: Vec<u64> = divisors
        .into_iter()
        .map(|d| d + 1)
        .filter(|p| is_small_prime(&(*p as i64)))
        .collect();
    primes.sort_unstable();
    Ok(primes)
}

/// `∏_{(p−1) | n} p` for even `n ≥ 2`.
pub fn vsc_denominator(n: NtIndex) -> Result<Int> {
    Ok(vsc_primes(n)?.into_iter().map(BigInt::from).product())
}

/// Lowest-terms parts of `B_k = N_k / D_k` and the odd part `D'_k = D_k / 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumDenParts {
    pub numerator: Int,
    pub denominator: Int,
    pub odd_denominator: Int,
}

pub fn num_den_parts(k: TopIndex) -> Result<NumDenParts> {
    let b = bernoulli_top(k);
    let numerator = numerator_of(&b);
    let denominator = denominator_of(&b);
    let two = BigInt::from(2);
    let (odd_denominator, rem) = denominator.div_rem(&two);
    if numerator.is_even() || !numerator.is_positive() {
        return Err(Error::Internal(format!("N_{} = {numerator} is not a positive odd integer", k.0)));
    }
    if !rem.is_zero() || odd_denominator.is_even() {
        return Err(Error::Internal(format!("D_{} = {denominator} is not twice an odd integer", k.0)));
    }
    Ok(NumDenParts { numerator, denominator, odd_denominator })
}

/// First even index where the two algorithms or the denominator law disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub n: u32,
    pub primary: Rational,
    pub oracle: Rational,
    pub vsc_denominator: Int,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelfCheckReport {
    pub n_max: u32,
    pub checked: usize,
    pub first_discrepancy: Option<Discrepancy>,
}

impl SelfCheckReport {
    pub fn passed(&self) -> bool {
        self.first_discrepancy.is_none()
    }
}

/// Compare both algorithms and the von Staudt–Clausen denominator for every
/// even `2 ≤ n ≤ n_max`. Runs on fresh computations, bypassing the cache.
pub fn self_check(n_max: NtIndex) -> Result<SelfCheckReport> {
    let n_max = n_max.0;
    if n_max % 2 == 1 {
        return Err(Error::Precondition(format!("self-check bound must be even, got {n_max}")));
    }
    let primary = tangent::even_bernoulli::<BigInt>(n_max as usize / 2);
    let oracle = akiyama_tanigawa::bernoulli_upto::<BigInt>(n_max as usize);
    let mut checked = 0;
    for n in (2..=n_max).step_by(2) {
        checked += 1;
        let p = &primary[n as usize / 2];
        let o = &oracle[n as usize];
        let vsc = vsc_denominator(NtIndex(n))?;
        if p != o || *p.denom() != vsc {
            return Ok(SelfCheckReport {
                n_max,
                checked,
                first_discrepancy: Some(Discrepancy {
                    n,
                    primary: p.clone(),
                    oracle: o.clone(),
                    vsc_denominator: vsc,
                }),
            });
        }
    }
    Ok(SelfCheckReport { n_max, checked, first_discrepancy: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{ord2_int, Valuation};

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn top(k: u32) -> Rational {
        bernoulli_top(TopIndex::new(k).unwrap())
    }

    fn nt(n: u32) -> Rational {
        bernoulli_nt(NtIndex::new(n))
    }

    #[test]
    fn nt_examples() {
        assert_eq!(nt(0), q(1, 1));
        assert_eq!(nt(1), q(-1, 2));
        assert_eq!(nt(2), q(1, 6));
        assert_eq!(nt(3), Rational::zero());
        assert_eq!(nt(12), q(-691, 2730));
    }

    // Series oracle for the low coefficients: with e^t − 1 = Σ_{i≥1} tⁱ/i!,
    // the product (Σ 𝔅_n tⁿ/n!)(Σ tⁱ/i!) must equal t, so for m ≥ 1
    // Σ_{n<m} 𝔅_n / (n! (m−n)!) = [m = 1].
    #[test]
    fn generating_function_coefficients() {
        let fact = |m: u32| -> BigInt { (1..=m).map(BigInt::from).product() };
        for m in 1..=12u32 {
            let sum: Rational = (0..m)
                .map(|n| nt(n) / Rational::from_integer(fact(n) * fact(m - n)))
                .sum();
            let expect = if m == 1 { q(1, 1) } else { Rational::zero() };
            assert_eq!(sum, expect, "coefficient of t^{m}");
        }
    }

    #[test]
    fn top_examples() {
        assert_eq!(top(5), q(5, 66));
        assert_eq!(top(6), q(691, 2730));
        assert_eq!(top(8), q(3617, 510));
        assert!(TopIndex::new(0).is_err());
    }

    #[test]
    fn bridge() {
        let k = |k| TopIndex::new(k).unwrap();
        assert_eq!(index_bridge(k(1)), (NtIndex::new(2), Sign::Plus));
        assert_eq!(index_bridge(k(2)), (NtIndex::new(4), Sign::Minus));
        let (n, sign) = index_bridge(k(6));
        assert_eq!((n, sign), (NtIndex::new(12), Sign::Minus));
        assert_eq!(sign.apply(bernoulli_nt(n)), top(6));
        let v = BernoulliValue::of_top(k(6)).to_nt();
        assert_eq!(v, BernoulliValue::of_nt(NtIndex::new(12)));
    }

    #[test]
    fn vsc_examples() {
        let v = |n| vsc_denominator(NtIndex::new(n)).unwrap();
        assert_eq!(v(2), BigInt::from(6));
        assert_eq!(v(12), BigInt::from(2730));
        assert_eq!(v(16), BigInt::from(510));
        assert_eq!(vsc_primes(NtIndex::new(12)).unwrap(), vec![2, 3, 5, 7, 13]);
        assert!(vsc_denominator(NtIndex::new(0)).is_err());
        assert!(vsc_denominator(NtIndex::new(7)).is_err());
    }

    #[test]
    fn parts_examples() {
        let p = |k, a: i64, b: i64, c: i64| {
            let parts = num_den_parts(TopIndex::new(k).unwrap()).unwrap();
            assert_eq!(
                (parts.numerator, parts.denominator, parts.odd_denominator),
                (a.into(), b.into(), c.into())
            );
        };
        p(1, 1, 6, 3);
        p(6, 691, 2730, 1365);
        p(8, 3617, 510, 255);
    }

    #[test]
    fn self_check_examples() {
        let r = self_check(NtIndex::new(16)).unwrap();
        assert!(r.passed());
        assert_eq!(r.checked, 8);
        let r = self_check(NtIndex::new(0)).unwrap();
        assert!(r.passed());
        assert_eq!(r.checked, 0);
        assert!(self_check(NtIndex::new(200)).unwrap().passed());
        assert!(self_check(NtIndex::new(5)).is_err());
    }

    #[test]
    fn even_index_laws_to_1000() {
        for n in (2..=1000u32).step_by(2) {
            let b = nt(n);
            assert_eq!(*b.denom(), vsc_denominator(NtIndex::new(n)).unwrap(), "n = {n}");
            assert_eq!(ord2_int(b.denom()), Valuation::Finite(1));
            assert_eq!(b.is_positive(), (n / 2) % 2 == 1, "sign of B_{n}");
        }
    }

    #[test]
    fn top_laws_to_500() {
        for k in 1..=500u32 {
            let idx = TopIndex::new(k).unwrap();
            let b = bernoulli_top(idx);
            assert!(b.is_positive());
            let sign = if k % 2 == 1 { 1 } else { -1 };
            assert_eq!(b, nt(2 * k) * BigInt::from(sign));
            let parts = num_den_parts(idx).unwrap();
            assert!(parts.numerator.is_odd() && parts.odd_denominator.is_odd());
            assert_eq!(parts.denominator, parts.odd_denominator * 2);
        }
    }
}
