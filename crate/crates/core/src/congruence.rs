//! 2-adic congruences for Bernoulli numbers: Carlitz finite differences,
//! the reciprocal-difference valuation, and the `2^{j+3}` divisibility of
//! `(B_{2k} − B_k)/(B_{2k} B_k)` for even `k = 2^j c`.
//!
//! Divisibility of a lowest-terms numerator is checked as a 2-adic valuation
//! of the exact value, after asserting the denominator is odd.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use crate::bernoulli::{bernoulli_nt, bernoulli_top, num_den_parts, NtIndex, TopIndex};
use crate::error::{Error, Result};
use crate::exact_arith::{binomial, ord2, ord2_int, ord2_u64, Valuation};
use crate::{Int, Rational};

/// Outcome of one congruence instance: `observed_ord ≥ bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceReport {
    pub instance: String,
    pub observed_ord: Valuation,
    pub bound: i64,
    pub holds: bool,
    pub witness: Rational,
}

impl CongruenceReport {
    pub fn new(instance: impl Into<String>, witness: Rational, bound: i64) -> Self {
        let observed_ord = ord2(&witness);
        CongruenceReport {
            instance: instance.into(),
            observed_ord,
            bound,
            holds: observed_ord.is_at_least(bound),
            witness,
        }
    }
}

/// Parameters of a Carlitz difference `Σ_{s=0}^{r} (−1)^s C(r,s) 𝔅_{n+sw}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CarlitzParams {
    n: u32,
    w: u32,
    r: u32,
}

impl CarlitzParams {
    pub fn new(n: u32, w: u32, r: u32) -> Result<Self> {
        if n < 2 || n % 2 == 1 {
            return Err(Error::Precondition(format!("Carlitz n must be even and >= 2, got {n}")));
        }
        if w < 2 || w % 2 == 1 {
            return Err(Error::Precondition(format!("Carlitz w must be even and >= 2, got {w}")));
        }
        if r < 1 {
            return Err(Error::Precondition("Carlitz r must be >= 1".into()));
        }
        Ok(CarlitzParams { n, w, r })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn w(&self) -> u32 {
        self.w
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// `e = 1 + ord_2(w)`.
    pub fn e(&self) -> i64 {
        1 + ord2_u64(self.w as u64).unwrap() as i64
    }

    /// `l = ⌊log₂ r⌋`.
    pub fn l(&self) -> i64 {
        self.r.ilog2() as i64
    }

    /// `r'` with `2^{r'} ≤ 2r < 2^{r'+1}`.
    pub fn r_prime(&self) -> i64 {
        (2 * self.r as u64).ilog2() as i64
    }

    /// `λ = min(r − 1, r − l + 2)`.
    pub fn lambda(&self) -> i64 {
        let r = self.r as i64;
        (r - 1).min(r - self.l() + 2)
    }

    /// `λ' = min(r − 1, r − r' + 3)`, the same quantity written with `r'`.
    pub fn lambda_alt(&self) -> i64 {
        let r = self.r as i64;
        (r - 1).min(r - self.r_prime() + 3)
    }
}

/// Exact value of the iterated finite difference.
pub fn finite_difference(p: CarlitzParams) -> Rational {
    (0..=p.r)
        .map(|s| {
            let c: BigInt = binomial(p.r as u64, s as u64);
            let term = bernoulli_nt(NtIndex::new(p.n + s * p.w)) * c;
            if s % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

fn checked_lambda(p: CarlitzParams) -> Result<i64> {
    let (lambda, alt) = (p.lambda(), p.lambda_alt());
    if lambda != alt {
        return Err(Error::Internal(format!(
            "lambda formulas disagree at r = {}: {lambda} vs {alt}",
            p.r
        )));
    }
    Ok(lambda)
}

/// `min(n − 2, r·e + λ − 1)`.
pub fn carlitz_bound(p: CarlitzParams) -> Result<i64> {
    let lambda = checked_lambda(p)?;
    Ok((p.n as i64 - 2).min(p.r as i64 * p.e() + lambda - 1))
}

/// Both readings of the Carlitz congruence for one parameter triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CarlitzReport {
    pub params: CarlitzParams,
    pub lambda: i64,
    /// `ord_2(Σ) ≥ min(n − 2, re + λ − 1)`.
    pub reduced: CongruenceReport,
    /// `ord_2(2Σ) ≥ min(n − 1, re + λ)`.
    pub doubled: CongruenceReport,
}

impl CarlitzReport {
    pub fn holds(&self) -> bool {
        self.reduced.holds && self.doubled.holds
    }
}

pub fn check_carlitz(p: CarlitzParams) -> Result<CarlitzReport> {
    let lambda = checked_lambda(p)?;
    let bound = carlitz_bound(p)?;
    let diff = finite_difference(p);
    let instance = format!("carlitz(n={},w={},r={})", p.n, p.w, p.r);
    let theorem_bound = (p.n as i64 - 1).min(p.r as i64 * p.e() + lambda);
    let doubled = CongruenceReport::new(
        format!("{instance} factor-2 form"),
        diff.clone() * BigInt::from(2),
        theorem_bound,
    );
    Ok(CarlitzReport {
        params: p,
        lambda,
        reduced: CongruenceReport::new(instance, diff, bound),
        doubled,
    })
}

/// Checks for `ord_2(1/𝔅_n − 1/𝔅_m) = 2 + ord_2(𝔅_n − 𝔅_m) ≥ min(n, 2 + ord_2(m − n))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropA4Report {
    pub n: u32,
    pub m: u32,
    /// observed = ord_2 of the reciprocal difference, bound = min(n, 2 + ord_2(m − n)).
    pub reciprocal: CongruenceReport,
    pub difference: Rational,
    /// `2 + ord_2(𝔅_n − 𝔅_m)`.
    pub shifted_ord: Valuation,
    pub equality: bool,
    pub shifted_holds: bool,
    /// `ord_2(Denom(𝔅_n 𝔅_m))`, expected to be exactly 2.
    pub product_denominator_ord: Valuation,
}

impl PropA4Report {
    pub fn holds(&self) -> bool {
        self.equality
            && self.reciprocal.holds
            && self.shifted_holds
            && self.product_denominator_ord == Valuation::Finite(2)
    }
}

pub fn check_prop_a4(n: u32, m: u32) -> Result<PropA4Report> {
    if n < 2 || n % 2 == 1 || m % 2 == 1 || m <= n {
        return Err(Error::Precondition(format!(
            "need even m > n >= 2, got n = {n}, m = {m}"
        )));
    }
    let bn = bernoulli_nt(NtIndex::new(n));
    let bm = bernoulli_nt(NtIndex::new(m));
    let reciprocal_diff = bn.recip() - bm.recip();
    let difference = bn.clone() - bm.clone();
    let shifted_ord = ord2(&difference).shifted(2);
    let gap = ord2_u64((m - n) as u64).unwrap() as i64;
    let bound = (n as i64).min(2 + gap);
    let reciprocal = CongruenceReport::new(format!("prop-a4(n={n},m={m})"), reciprocal_diff, bound);
    Ok(PropA4Report {
        n,
        m,
        equality: reciprocal.observed_ord == shifted_ord,
        shifted_holds: shifted_ord.is_at_least(bound),
        product_denominator_ord: ord2_int((bn * bm).denom()),
        reciprocal,
        difference,
        shifted_ord,
    })
}

/// `(B_{2k} − B_k)/(B_{2k} B_k) = 1/B_k − 1/B_{2k}` for the topologist's `B`.
pub fn reciprocal_difference(k: u32) -> Result<Rational> {
    let bk = bernoulli_top(TopIndex::new(k)?);
    let b2k = bernoulli_top(TopIndex::new(2 * k)?);
    Ok(bk.recip() - b2k.recip())
}

/// `D_k N_{2k} − D_{2k} N_k`, the numerator of the reciprocal difference
/// before reduction to lowest terms.
pub fn unreduced_difference_numerator(k: u32) -> Result<Int> {
    let a = num_den_parts(TopIndex::new(k)?)?;
    let b = num_den_parts(TopIndex::new(2 * k)?)?;
    Ok(a.denominator * b.numerator - b.denominator * a.numerator)
}

/// `2^{j+3}` divides `Num((B_{2k} − B_k)/(B_{2k} B_k))`, with `j = ord_2(k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremA1Report {
    pub k: u32,
    pub j: u32,
    /// observed = route (a), bound = j + 3.
    pub report: CongruenceReport,
    /// ord_2 of the lowest-terms numerator.
    pub route_numerator: Valuation,
    /// `2 + ord_2(𝔅_{2k} − 𝔅_{4k})`.
    pub route_signed: Valuation,
    /// The valuation beats `j + 3` strictly. Informative only.
    pub strict: bool,
}

impl TheoremA1Report {
    pub fn holds(&self) -> bool {
        self.report.holds
    }
}

pub fn check_theorem_a1(k: u32) -> Result<TheoremA1Report> {
    if k < 2 || k % 2 == 1 {
        return Err(Error::Precondition(format!("k must be even and >= 2, got {k}")));
    }
    let j = k.trailing_zeros();
    let value = reciprocal_difference(k)?;
    if value.denom().is_even() {
        return Err(Error::Internal(format!("Denom of reciprocal difference at k = {k} is even")));
    }
    let route_numerator = ord2_int(value.numer());

    let b2k = bernoulli_nt(NtIndex::new(2 * k));
    let b4k = bernoulli_nt(NtIndex::new(4 * k));
    if b2k.is_positive() != b4k.is_positive() {
        return Err(Error::Internal(format!("B_{} and B_{} differ in sign", 2 * k, 4 * k)));
    }
    let route_signed = ord2(&(b2k - b4k)).shifted(2);
    if route_numerator != route_signed {
        return Err(Error::Internal(format!(
            "valuation routes disagree at k = {k}: numerator {route_numerator}, signed {route_signed}"
        )));
    }
    let bound = j as i64 + 3;
    let report = CongruenceReport::new(format!("thm-a1(k={k})"), value, bound);
    Ok(TheoremA1Report {
        k,
        j,
        strict: report.observed_ord > Valuation::Finite(bound),
        report,
        route_numerator,
        route_signed,
    })
}
