use steinfill_core::bernoulli::{
    global, num_den_parts, self_check, vsc_denominator, vsc_primes, BernoulliTable, NtIndex, TopIndex,
};
use steinfill_core::congruence::{check_carlitz, check_prop_a4, check_theorem_a1, CarlitzParams};
use steinfill_core::exact_arith::ord2_int;
use steinfill_core::fillability::{
    ahat, audit_instances, decide_admissibility, yang_numerator_identity, ManifoldInvariants,
};
use steinfill_core::Rational;

use crate::command::{CarlitzArgs, Command, ManifoldArgs, Query};
use crate::report::{CheckRow, Report};
use crate::CliError;

type Rows = Result<Vec<CheckRow>, CliError>;

/// Execute a parsed command. Rows come out in ascending index order.
pub fn run(cmd: &Command) -> Result<Report, CliError> {
    let rows = match &cmd.query {
        Query::Bern { top, nt, max_k, max_n, audit } => {
            let table = Bernoulli { table: global(), audit: *audit };
            match (top, nt, max_k, max_n) {
                (Some(k), ..) => vec![table.top_row(*k)?],
                (_, Some(n), ..) => vec![table.nt_row(*n)?],
                (_, _, Some(k), _) => (1..=*k).map(|k| table.top_row(k)).collect::<Rows>()?,
                (.., Some(n)) => (0..=*n).map(|n| table.nt_row(n)).collect::<Rows>()?,
                _ => unreachable!("clap enforces one selector"),
            }
        }
        Query::Vsc { n, max_n } => match (n, max_n) {
            (Some(n), _) => vec![vsc_row(*n)?],
            (_, Some(max)) => (2..=*max).step_by(2).map(vsc_row).collect::<Rows>()?,
            _ => unreachable!(),
        },
        Query::Parts { k, max_k } => {
            let range = match (k, max_k) {
                (Some(k), _) => *k..=*k,
                (_, Some(max)) => 1..=*max,
                _ => unreachable!(),
            };
            range.map(parts_row).collect::<Rows>()?
        }
        Query::Carlitz(args) => carlitz_rows(args)?,
        Query::PropA4 { n, m, max_m } => match (n, m, max_m) {
            (Some(n), Some(m), _) => vec![prop_a4_row(*n, *m)?],
            (.., Some(max)) => {
                let mut rows = Vec::new();
                for n in (2..=*max).step_by(2) {
                    for m in (n + 2..=*max).step_by(2) {
                        rows.push(prop_a4_row(n, m)?);
                    }
                }
                rows
            }
            _ => unreachable!(),
        },
        Query::ThmA1 { k, max_k } => match (k, max_k) {
            (Some(k), _) => vec![thm_a1_row(*k)?],
            (_, Some(max)) => (2..=*max).step_by(2).map(thm_a1_row).collect::<Rows>()?,
            _ => unreachable!(),
        },
        Query::Ahat(m) => vec![ahat_row(m)?],
        Query::Admits { manifold, tau_in_image } => {
            let inv = ManifoldInvariants::new(
                manifold.k,
                manifold.sigma.clone(),
                manifold.tau2.clone(),
                *tau_in_image,
            );
            vec![admits_row(&inv, true)?]
        }
        Query::AuditYang { max_k } => {
            let mut rows = Vec::new();
            for k in 1..=*max_k {
                for inv in audit_instances(k) {
                    rows.push(admits_row(&inv, false)?);
                }
            }
            rows
        }
        Query::NumIdentity { k, max_k } => match (k, max_k) {
            (Some(k), _) => vec![num_identity_row(*k)?],
            (_, Some(max)) => (1..=*max).step_by(2).map(num_identity_row).collect::<Rows>()?,
            _ => unreachable!(),
        },
        Query::SelfCheck { max_n } => vec![self_check_row(*max_n)?],
    };
    Ok(Report::new(cmd.echo.clone(), rows))
}

struct Bernoulli {
    table: &'static BernoulliTable,
    audit: bool,
}

impl Bernoulli {
    fn nt(&self, n: u32) -> Result<Rational, CliError> {
        if self.audit {
            Ok(self.table.nt_audited(n as usize)?)
        } else {
            Ok(self.table.nt(n as usize))
        }
    }

    fn top_row(&self, k: u32) -> Result<CheckRow, CliError> {
        let idx = TopIndex::new(k)?;
        let (n, sign) = steinfill_core::bernoulli::index_bridge(idx);
        let value = sign.apply(self.nt(n.get())?);
        let positive = value > Rational::default();
        Ok(CheckRow::new("bernoulli-top", format!("B_{k}"))
            .value("convention", "top")
            .value("index", k)
            .value("value", &value)
            .holds(positive))
    }

    fn nt_row(&self, n: u32) -> Result<CheckRow, CliError> {
        let value = self.nt(n)?;
        let zero = Rational::default();
        // sign law for even n > 0, vanishing for odd n > 1
        let holds = match n {
            0 | 1 => true,
            n if n % 2 == 1 => value == zero,
            n if (n / 2) % 2 == 1 => value > zero,
            _ => value < zero,
        };
        Ok(CheckRow::new("bernoulli-nt", format!("nt_{n}"))
            .value("convention", "nt")
            .value("index", n)
            .value("value", &value)
            .holds(holds))
    }
}

fn vsc_row(n: u32) -> Result<CheckRow, CliError> {
    let idx = NtIndex::new(n);
    let primes = vsc_primes(idx)?;
    let expected = vsc_denominator(idx)?;
    let actual = global().nt(n as usize).denom().clone();
    let primes: Vec<String> = primes.iter().map(ToString::to_string).collect();
    Ok(CheckRow::new("vsc", format!("n={n}"))
        .value("n", n)
        .value("primes", primes.join(" "))
        .value("vsc_denominator", &expected)
        .value("denominator", &actual)
        .holds(expected == actual))
}

fn parts_row(k: u32) -> Result<CheckRow, CliError> {
    let p = num_den_parts(TopIndex::new(k)?)?;
    Ok(CheckRow::new("parts", format!("k={k}"))
        .value("k", k)
        .value("N_k", &p.numerator)
        .value("D_k", &p.denominator)
        .value("D'_k", &p.odd_denominator))
}

fn carlitz_row(p: CarlitzParams) -> Result<CheckRow, CliError> {
    let r = check_carlitz(p)?;
    Ok(CheckRow::new("carlitz", r.reduced.instance.clone())
        .value("n", p.n())
        .value("w", p.w())
        .value("r", p.r())
        .value("e", p.e())
        .value("lambda", r.lambda)
        .value("ord", r.reduced.observed_ord)
        .value("bound", r.reduced.bound)
        .value("ord_2x", r.doubled.observed_ord)
        .value("bound_2x", r.doubled.bound)
        .witness(&r.reduced.witness)
        .holds(r.holds()))
}

fn carlitz_rows(a: &CarlitzArgs) -> Rows {
    if let (Some(n), Some(w), Some(r)) = (a.n, a.w, a.r) {
        return Ok(vec![carlitz_row(CarlitzParams::new(n, w, r)?)?]);
    }
    let (max_n, max_w, max_r) = (a.max_n.unwrap(), a.max_w.unwrap(), a.max_r.unwrap());
    let mut rows = Vec::new();
    for n in (2..=max_n).step_by(2) {
        for w in (2..=max_w).step_by(2) {
            for r in 1..=max_r {
                rows.push(carlitz_row(CarlitzParams::new(n, w, r)?)?);
            }
        }
    }
    Ok(rows)
}

fn prop_a4_row(n: u32, m: u32) -> Result<CheckRow, CliError> {
    let r = check_prop_a4(n, m)?;
    Ok(CheckRow::new("prop-a4", r.reciprocal.instance.clone())
        .value("n", n)
        .value("m", m)
        .value("ord", r.reciprocal.observed_ord)
        .value("shifted_ord", r.shifted_ord)
        .value("bound", r.reciprocal.bound)
        .value("denom_ord", r.product_denominator_ord)
        .witness(&r.reciprocal.witness)
        .holds(r.holds()))
}

fn thm_a1_row(k: u32) -> Result<CheckRow, CliError> {
    let r = check_theorem_a1(k)?;
    Ok(CheckRow::new("thm-a1", format!("k={k}"))
        .value("k", k)
        .value("j", r.j)
        .value("ord", r.report.observed_ord)
        .value("bound", r.report.bound)
        .witness(&r.report.witness)
        .holds(r.holds()))
}

fn ahat_row(m: &ManifoldArgs) -> Result<CheckRow, CliError> {
    let a = ahat(m.k, &m.sigma, &m.tau2)?;
    Ok(CheckRow::new("ahat", format!("k={},sigma={},tau2={}", m.k, m.sigma, m.tau2))
        .value("k", m.k)
        .value("sigma", &m.sigma)
        .value("tau2", &m.tau2)
        .value("ahat", &a.value)
        .value("is_integer", a.is_integer))
}

fn admits_row(inv: &ManifoldInvariants, full_audit: bool) -> Result<CheckRow, CliError> {
    let r = decide_admissibility(inv)?;
    let mut row = CheckRow::new(
        "admits",
        format!("k={},sigma={},tau2={},image={}", inv.k, inv.sigma, inv.tau_sq, inv.tau_in_image),
    )
    .value("k", inv.k)
    .value("sigma", &inv.sigma)
    .value("tau2", &inv.tau_sq)
    .value("tau_in_image", inv.tau_in_image)
    .value("yang", r.yang_verdict)
    .value("yang_plus", r.yang_plus_verdict)
    .value("consistent", r.consistent);
    if full_audit {
        for e in &r.audit {
            row = row.value(e.name, &e.value);
        }
    }
    Ok(row.holds(r.consistent))
}

fn num_identity_row(k: u32) -> Result<CheckRow, CliError> {
    let r = yang_numerator_identity(k)?;
    Ok(CheckRow::new("num-identity", format!("k={k}"))
        .value("k", k)
        .value("lhs", &r.lhs)
        .value("rhs", &r.rhs)
        .value("ord", r.ord)
        .value("reduced_numerator_ord", ord2_int(&r.reduced_numerator))
        .holds(r.holds))
}

fn self_check_row(max_n: u32) -> Result<CheckRow, CliError> {
    let r = self_check(NtIndex::new(max_n))?;
    let discrepancy = match &r.first_discrepancy {
        None => "none".to_string(),
        Some(d) => format!("n={} tangent={} oracle={} vsc={}", d.n, d.primary, d.oracle, d.vsc_denominator),
    };
    Ok(CheckRow::new("self-check", format!("n<={max_n}"))
        .value("max_n", max_n)
        .value("values_checked", r.checked)
        .value("first_discrepancy", discrepancy)
        .holds(r.passed()))
}
