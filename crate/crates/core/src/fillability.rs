//! Stable almost complex structures on `(4k−1)`-connected `8k`-manifolds.
//!
//! Two decision procedures are implemented side by side: the original
//! condition phrased through Bernoulli numbers (`yang_condition`) and the
//! simplified one that only looks at `k`, the parity of `σ` and the image
//! flag (`yang_plus_condition`). [`decide_admissibility`] runs both and
//! records whether they agree.
//!
//! "`x ≡ 0 mod 2`" for a rational `x` means `ord_2(x) ≥ 1`; zero passes.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::bernoulli::{bernoulli_top, num_den_parts, TopIndex};
use crate::error::{Error, Result};
use crate::exact_arith::{ord2, ord2_int, Valuation};
use crate::{Int, Rational};

/// The invariants the decision depends on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifoldInvariants {
    /// The manifold has dimension `8k`.
    pub k: u32,
    /// Signature `σ_Y`.
    pub sigma: Int,
    /// `τ_Y² = ⟨(τ_{Y*})², [Y]⟩`; may be negative.
    pub tau_sq: Int,
    /// `im(τ_{Y*}) ⊆ F_*(π_{4k}(BU))`, supplied by the caller.
    pub tau_in_image: bool,
}

impl ManifoldInvariants {
    pub fn new(k: u32, sigma: impl Into<Int>, tau_sq: impl Into<Int>, tau_in_image: bool) -> Self {
        ManifoldInvariants { k, sigma: sigma.into(), tau_sq: tau_sq.into(), tau_in_image }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    KZero,
    /// For odd `k` the image condition is automatic.
    OddKRequiresImage,
    /// For `k > 2` the intersection form is even.
    OddTauSquare,
    /// Even `k` with `τ` in the image forces `8 | τ²`.
    TauSquareNotDivisibleBy8,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Violation::KZero => "k must be >= 1",
            Violation::OddKRequiresImage => "k odd forces tau_in_image",
            Violation::OddTauSquare => "k > 2 forces tau^2 even",
            Violation::TauSquareNotDivisibleBy8 => "k even with tau in image forces 8 | tau^2",
        })
    }
}

pub fn validate_invariants(inv: &ManifoldInvariants) -> std::result::Result<(), Vec<Violation>> {
    let mut violations = Vec::new();
    if inv.k == 0 {
        violations.push(Violation::KZero);
    }
    if inv.k % 2 == 1 && !inv.tau_in_image {
        violations.push(Violation::OddKRequiresImage);
    }
    if inv.k > 2 && inv.tau_sq.is_odd() {
        violations.push(Violation::OddTauSquare);
    }
    if inv.k >= 2 && inv.k % 2 == 0 && inv.tau_in_image && !inv.tau_sq.is_multiple_of(&BigInt::from(8)) {
        violations.push(Violation::TauSquareNotDivisibleBy8);
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

fn require_valid(inv: &ManifoldInvariants) -> Result<()> {
    validate_invariants(inv)
        .map_err(|v| Error::InvalidInvariants(v.iter().map(ToString::to_string).collect()))
}

/// `a_k = (3 − (−1)^k)/2`.
pub fn a_coeff(k: u32) -> Result<u32> {
    match k {
        0 => Err(Error::Precondition("a_k needs k >= 1".into())),
        k if k % 2 == 1 => Ok(2),
        _ => Ok(1),
    }
}

fn pow2(e: i64) -> Rational {
    let p = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

fn pow2_int(e: u32) -> Int {
    BigInt::one() << e
}

fn top(k: u32) -> Result<Rational> {
    Ok(bernoulli_top(TopIndex::new(k)?))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AhatValue {
    pub value: Rational,
    pub is_integer: bool,
}

/// Wall's closed formula for `Â_{2k}` in terms of `σ` and `τ²`.
pub fn ahat_wall(k: u32, sigma: &Int, tau_sq: &Int) -> Result<Rational> {
    let a = a_coeff(k)? as i64;
    let bk = top(k)?;
    let k2 = BigInt::from(k) * BigInt::from(k);
    let m = pow2_int(2 * k) - 1u32;
    let tau_term = Rational::from_integer(BigInt::from(a * a) * pow2_int(4 * k - 4) * &m * &m * tau_sq)
        * &bk
        * &bk;
    let numerator = tau_term - Rational::from_integer(&k2 * sigma);
    let denominator = pow2_int(4 * k + 1) * k2 * (pow2_int(4 * k - 1) - 1u32);
    Ok(numerator / Rational::from_integer(denominator))
}

/// The same quantity after substituting `B_k = N_k / (2 D'_k)` and `k = 2^j c`.
pub fn ahat_rewritten(k: u32, sigma: &Int, tau_sq: &Int) -> Result<Rational> {
    let a = a_coeff(k)? as i64;
    let parts = num_den_parts(TopIndex::new(k)?)?;
    let j = k.trailing_zeros() as i64;
    let c = BigInt::from(k >> j);
    let m = pow2_int(2 * k) - 1u32;
    let n2 = &parts.numerator * &parts.numerator;
    let d2 = &parts.odd_denominator * &parts.odd_denominator;
    let tau_term = pow2(4 * k as i64 - 6 - 2 * j)
        * Rational::from_integer(BigInt::from(a * a) * n2 * &m * &m * tau_sq);
    let numerator = tau_term - Rational::from_integer(&d2 * &c * &c * sigma);
    let denominator = pow2_int(4 * k + 1) * &c * &c * d2 * (pow2_int(4 * k - 1) - 1u32);
    Ok(numerator / Rational::from_integer(denominator))
}

/// `Â_{2k}` evaluated through both forms, which must agree.
pub fn ahat(k: u32, sigma: &Int, tau_sq: &Int) -> Result<AhatValue> {
    let value = ahat_wall(k, sigma, tau_sq)?;
    let rewritten = ahat_rewritten(k, sigma, tau_sq)?;
    if value != rewritten {
        return Err(Error::Internal(format!(
            "A-hat forms disagree at k = {k}: {value} vs {rewritten}"
        )));
    }
    Ok(AhatValue { is_integer: value.is_integer(), value })
}

/// `4k − 3 − 2j` with `j = ord_2(k)`, for `k ≥ 3`.
pub fn forced_sigma_valuation(k: u32) -> Result<i64> {
    if k < 3 {
        return Err(Error::Precondition(format!(
            "forced signature divisibility is only established for k >= 3, got {k}"
        )));
    }
    Ok(4 * k as i64 - 3 - 2 * k.trailing_zeros() as i64)
}

/// Intermediate quantities of the Bernoulli-number condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YangAudit {
    /// `(B_{2k} ± B_k)/(B_{2k} B_k)`; `+` for odd `k`, `−` for even.
    pub bernoulli_term: Rational,
    /// The term times `σ/2^{4k−2}` (odd `k`) or `4kσ/2^{4k}` (even `k`).
    pub value: Rational,
    pub value_ord: Valuation,
    pub value_is_integer: bool,
    /// Even `k` additionally needs the image condition.
    pub image_condition: Option<bool>,
}

pub fn yang_condition(inv: &ManifoldInvariants) -> Result<(bool, YangAudit)> {
    require_valid(inv)?;
    let k = inv.k;
    let bk = top(k)?;
    let b2k = top(2 * k)?;
    let sigma = Rational::from_integer(inv.sigma.clone());
    let (bernoulli_term, value, image_condition) = if k % 2 == 1 {
        let term = bk.recip() + b2k.recip();
        let value = &term * sigma / Rational::from_integer(pow2_int(4 * k - 2));
        (term, value, None)
    } else {
        let term = bk.recip() - b2k.recip();
        let value = &term * sigma * BigInt::from(4 * k) / Rational::from_integer(pow2_int(4 * k));
        (term, value, Some(inv.tau_in_image))
    };
    let value_ord = ord2(&value);
    let verdict = image_condition.unwrap_or(true) && value_ord.is_at_least(1);
    Ok((
        verdict,
        YangAudit {
            bernoulli_term,
            value_is_integer: value.is_integer(),
            value,
            value_ord,
            image_condition,
        },
    ))
}

pub fn yang_plus_condition(inv: &ManifoldInvariants) -> Result<bool> {
    require_valid(inv)?;
    Ok(match inv.k {
        1 => inv.sigma.is_even(),
        k if k % 2 == 1 => true,
        _ => inv.tau_in_image,
    })
}

/// `D_k N_{2k} + D_{2k} N_k = 2(D'_k N_{2k} + D'_{2k} N_k)` for odd `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumeratorIdentity {
    pub k: u32,
    pub lhs: Int,
    pub rhs: Int,
    pub ord: Valuation,
    /// Lowest-terms numerator of `(B_{2k} + B_k)/(B_{2k} B_k)`.
    pub reduced_numerator: Int,
    pub holds: bool,
}

pub fn yang_numerator_identity(k: u32) -> Result<NumeratorIdentity> {
    if k % 2 == 0 {
        return Err(Error::Precondition(format!("numerator identity needs odd k, got {k}")));
    }
    let a = num_den_parts(TopIndex::new(k)?)?;
    let b = num_den_parts(TopIndex::new(2 * k)?)?;
    let lhs = &a.denominator * &b.numerator + &b.denominator * &a.numerator;
    let rhs = (&a.odd_denominator * &b.numerator + &b.odd_denominator * &a.numerator) * 2u32;
    let ord = ord2_int(&lhs);
    let reduced = top(k)?.recip() + top(2 * k)?.recip();
    Ok(NumeratorIdentity {
        k,
        holds: lhs == rhs && ord.is_at_least(2),
        lhs,
        rhs,
        ord,
        reduced_numerator: reduced.numer().clone(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditEntry {
    pub name: &'static str,
    pub value: String,
}

fn entry(name: &'static str, value: impl ToString) -> AuditEntry {
    AuditEntry { name, value: value.to_string() }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub invariants: ManifoldInvariants,
    pub yang_verdict: bool,
    pub yang_plus_verdict: bool,
    /// `false` would contradict the equivalence of the two conditions.
    pub consistent: bool,
    pub ahat: AhatValue,
    pub audit: Vec<AuditEntry>,
}

/// Run both conditions on a validated tuple. For `k ≥ 3` the signature
/// must carry the forced 2-power.
pub fn decide_admissibility(inv: &ManifoldInvariants) -> Result<AdmissibilityReport> {
    require_valid(inv)?;
    let sigma_ord = ord2_int(&inv.sigma);
    let forced = if inv.k >= 3 { Some(forced_sigma_valuation(inv.k)?) } else { None };
    if let Some(v) = forced {
        if !sigma_ord.is_at_least(v) {
            return Err(Error::Precondition(format!(
                "k = {} requires 2^{v} | sigma, but ord_2(sigma) = {sigma_ord}",
                inv.k
            )));
        }
    }
    let (yang_verdict, yang) = yang_condition(inv)?;
    let yang_plus_verdict = yang_plus_condition(inv)?;
    let ahat = ahat(inv.k, &inv.sigma, &inv.tau_sq)?;

    let mut audit = vec![
        entry("bernoulli_term", &yang.bernoulli_term),
        entry("bernoulli_term_numerator_ord2", ord2_int(yang.bernoulli_term.numer())),
        entry("condition_value", &yang.value),
        entry("condition_ord2", yang.value_ord),
        entry("condition_is_integer", yang.value_is_integer),
        entry("sigma_ord2", sigma_ord),
    ];
    if let Some(v) = forced {
        audit.push(entry("forced_sigma_ord2", v));
    }
    if let Some(image) = yang.image_condition {
        audit.push(entry("image_condition", image));
    }
    audit.push(entry("ahat", &ahat.value));
    audit.push(entry("ahat_is_integer", ahat.is_integer));

    Ok(AdmissibilityReport {
        invariants: inv.clone(),
        consistent: yang_verdict == yang_plus_verdict,
        yang_verdict,
        yang_plus_verdict,
        ahat,
        audit,
    })
}

/// The signature exponent used by the equivalence audit grid at `k`.
fn audit_sigma_exponents(k: u32) -> Vec<u32> {
    match k {
        1 => vec![1],
        2 => vec![0, 1, 2, 3],
        k => vec![forced_sigma_valuation(k).unwrap() as u32],
    }
}

const AUDIT_TAU_SQ: [i64; 9] = [0, 1, -1, 2, -2, 4, 8, -8, 24];

/// Deterministic grid for the Yang/Yang+ equivalence audit at one `k`:
/// `σ = ±2^v s` with `s ∈ {1, 3, 5, 7}` and every `(τ², image)` choice
/// from a fixed pool that passes validation.
pub fn audit_instances(k: u32) -> Vec<ManifoldInvariants> {
    let mut out = Vec::new();
    if k == 0 {
        return out;
    }
    for v in audit_sigma_exponents(k) {
        for s in [1i64, 3, 5, 7] {
            for sign in [1i64, -1] {
                let sigma = pow2_int(v) * BigInt::from(sign * s);
                for tau_sq in AUDIT_TAU_SQ {
                    for image in [true, false] {
                        let inv = ManifoldInvariants::new(k, sigma.clone(), tau_sq, image);
                        if validate_invariants(&inv).is_ok() {
                            out.push(inv);
                        }
                    }
                }
            }
        }
    }
    out
}
