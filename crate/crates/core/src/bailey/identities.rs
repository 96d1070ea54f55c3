//! Checks of the Bailey relations, the lemma, its limiting identity and the
//! conjugate identity.

use std::time::Instant;

use crate::algebra::{
    inv_qpochhammer, qpochhammer, Monomial, PochLength, QSeries, XLaurent, ZPoly,
};
use crate::error::{Error, Result};
use crate::knot::KnotFamilyParams;
use crate::verify::{compare_series, conclude, CheckReport, Mutation, Tamper, Witness};

use super::lemma::{iterate_infinite_steps, scaled_term, StepParam, StepWeights};
use super::pair::{
    kernel_alpha, multisum_alpha, multisum_alpha_second, make_named_pair, poch_q, BaileyPair,
    NamedPair,
};

/// Consecutive negligible terms after which an infinite sum is considered
/// exhausted.
const QUIET_RUN: i64 = 4;
const MAX_TERMS: i64 = 400;

/// `sum_{n >= 0} term(n)` below `q^trunc`. Stops once `QUIET_RUN`
/// consecutive terms vanish inside the window.
pub fn infinite_sum<F>(trunc: i64, mut term: F) -> Result<QSeries>
where
    F: FnMut(i64) -> Result<QSeries>,
{
    let mut acc = QSeries::zero(1, trunc);
    let mut quiet = 0;
    let mut falling = 0;
    let mut last_low = i64::MAX;
    for n in 0..MAX_TERMS {
        let s = term(n)?;
        let low = s.lower().unwrap_or(trunc);
        falling = if low < last_low && low < trunc { falling + 1 } else { 0 };
        last_low = low;
        if n >= QUIET_RUN && falling >= QUIET_RUN {
            return Err(Error::Divergent(format!(
                "term valuations keep falling (q^{low} at n = {n})"
            )));
        }
        if low >= trunc {
            quiet += 1;
            if quiet >= QUIET_RUN {
                return Ok(acc);
            }
        } else {
            quiet = 0;
        }
        acc = &acc + &s;
    }
    Err(Error::Divergent(format!(
        "sum not exhausted below q^{trunc} after {MAX_TERMS} terms"
    )))
}

/// Right side of `beta_n = sum_j alpha_j / ((q)_{n-j} (aq)_{n+j})`.
pub fn beta_from_alpha(pair: &BaileyPair, n: i64, trunc: i64) -> Result<QSeries> {
    let k = pair.a().k();
    let mut acc = QSeries::zero(1, trunc);
    for j in 0..=n {
        let den = &poch_q(1, n - j) * &poch_q(k + 1, n + j);
        acc = &acc + &scaled_term(&QSeries::one(), &den, |t| pair.alpha(j, t), trunc)?;
    }
    Ok(acc)
}

/// Right side of the inverse relation
/// `alpha_n = f_n (-1)^n q^{n(n-1)/2} sum_j (q^{-n})_j (aq^n)_j q^j beta_j`
/// where `f_n = (1 - a q^{2n}) (a)_n / ((1-a)(q)_n)`. For `a = q^k`,
/// `(a)_n/(1-a) = (q^{k+1})_{n-1}`, which also covers `a = 1`.
pub fn alpha_from_beta(pair: &BaileyPair, n: i64, trunc: i64) -> Result<QSeries> {
    let k = pair.a().k();
    let f_num = if n == 0 {
        QSeries::one()
    } else {
        let lead = QSeries::from_zpoly(&ZPoly::one_minus(1, k + 2 * n));
        &lead * &poch_q(k + 1, n - 1)
    };
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let prefix = f_num.mul_monomial(&Monomial::signed(sign, 0, n * (n - 1) / 2));
    let den = poch_q(1, n);
    let mut acc = QSeries::zero(1, trunc);
    for j in 0..=n {
        let poly = (&poch_q(-n, j) * &poch_q(k + n, j)).shift_q(j);
        acc = &acc + &scaled_term(&(&prefix * &poly), &den, |t| pair.beta(j, t), trunc)?;
    }
    Ok(acc)
}

fn params_for(report: CheckReport, pair: &BaileyPair) -> CheckReport {
    report.param("pair", pair.label()).param("a", pair.a().to_string())
}

/// Both defining relations for `n <= n_max` below `q^trunc`.
pub fn bailey_verify(pair: &BaileyPair, n_max: i64, trunc: i64) -> CheckReport {
    bailey_verify_with(pair, n_max, trunc, None)
}

pub(crate) fn bailey_verify_with(
    pair: &BaileyPair,
    n_max: i64,
    trunc: i64,
    mu: Option<&Mutation>,
) -> CheckReport {
    let started = Instant::now();
    let report = params_for(CheckReport::new("bailey-verify"), pair)
        .param("n_max", n_max)
        .param("trunc", trunc);
    let witness = (|| -> Result<Option<Witness>> {
        for n in 0..=n_max {
            let beta = pair.beta(n, trunc)?;
            let rhs = mu.tamper(Some(n), beta_from_alpha(pair, n, trunc)?);
            if let Some(w) = compare_series(&beta, &rhs, trunc) {
                return Ok(Some(w.at_index(n).with_note("beta_n from alpha")));
            }
            let alpha = pair.alpha(n, trunc)?;
            if let Some(w) = compare_series(&alpha, &alpha_from_beta(pair, n, trunc)?, trunc) {
                return Ok(Some(w.at_index(n).with_note("alpha_n from beta")));
            }
        }
        Ok(None)
    })();
    conclude(report, witness, started)
}

/// One lemma step followed by [`bailey_verify`] on the new pair.
pub fn bailey_step_check(pair: &BaileyPair, b: &StepParam, c: &StepParam, n_max: i64, trunc: i64) -> CheckReport {
    bailey_step_check_with(pair, b, c, n_max, trunc, None)
}

pub(crate) fn bailey_step_check_with(
    pair: &BaileyPair,
    b: &StepParam,
    c: &StepParam,
    n_max: i64,
    trunc: i64,
    mu: Option<&Mutation>,
) -> CheckReport {
    let started = Instant::now();
    let report = params_for(CheckReport::new("bailey-step"), pair)
        .param("b", b.to_string())
        .param("c", c.to_string())
        .param("n_max", n_max)
        .param("trunc", trunc);
    let witness = super::lemma::bailey_step(pair, b, c).map(|stepped| {
        let inner = bailey_verify_with(&stepped, n_max, trunc, mu);
        inner.witness
    });
    conclude(report, witness, started)
}

/// `sum (b)_n (c)_n (aq/bc)^n beta_n` against
/// `(aq/b)_inf (aq/c)_inf / ((aq)_inf (aq/bc)_inf) sum alpha'_n`.
pub fn bailey_limit_identity(pair: &BaileyPair, b: &StepParam, c: &StepParam, trunc: i64) -> CheckReport {
    bailey_limit_identity_with(pair, b, c, trunc, None)
}

pub(crate) fn bailey_limit_identity_with(
    pair: &BaileyPair,
    b: &StepParam,
    c: &StepParam,
    trunc: i64,
    mu: Option<&Mutation>,
) -> CheckReport {
    let started = Instant::now();
    let report = params_for(CheckReport::new("bailey-limit"), pair)
        .param("b", b.to_string())
        .param("c", c.to_string())
        .param("trunc", trunc);
    let witness = (|| -> Result<Option<Witness>> {
        let w = StepWeights::new(pair.a().monomial(), b.clone(), c.clone())?;
        let lhs = infinite_sum(trunc, |n| {
            scaled_term(&w.weight(n)?, &QSeries::one(), |t| pair.beta(n, t), trunc)
        })?;
        let sum = infinite_sum(trunc, |n| {
            scaled_term(&w.weight(n)?, &w.denominator(n)?, |t| pair.alpha(n, t), trunc)
        })?;
        let low = sum.lower().unwrap_or(trunc).min(trunc);
        let rhs = mu.tamper(None, (&w.limit_prefactor(trunc - low)? * &sum).truncated(trunc));
        Ok(compare_series(&lhs, &rhs, trunc))
    })();
    conclude(report, witness, started)
}

/// Left side `sum_n (aq)_{2n} q^n beta_n` of the conjugate identity.
pub fn conjugate_lhs(pair: &BaileyPair, trunc: i64) -> Result<QSeries> {
    let k = pair.a().k();
    infinite_sum(trunc, |n| {
        let num = poch_q(k + 1, 2 * n).shift_q(n);
        scaled_term(&num, &QSeries::one(), |t| pair.beta(n, t), trunc)
    })
}

/// Right side `1/(q)_inf sum_{r,n >= 0} (-a)^n q^{3n(n+1)/2 + (2n+1)r} alpha_r`.
pub fn conjugate_rhs(pair: &BaileyPair, trunc: i64) -> Result<QSeries> {
    let k = pair.a().k();
    let sum = infinite_sum(trunc, |r| {
        // theta_r = sum_n (-1)^n q^{kn + 3n(n+1)/2 + 2nr}, all exponents >= 0
        let mut theta = ZPoly::zero();
        let mut n = 0;
        loop {
            let e = k * n + 3 * n * (n + 1) / 2 + 2 * n * r;
            if e >= trunc + 64 + r.abs() * 4 {
                break;
            }
            theta += &ZPoly::monomial((if n % 2 == 0 { 1 } else { -1 }).into(), e);
            n += 1;
        }
        let bound = trunc + 64 + r.abs() * 4;
        let theta = QSeries::from_zpoly(&theta).truncated(bound).shift_q(r);
        let alpha = pair.alpha(r, trunc - r)?;
        Ok((&theta * &alpha).truncated(trunc))
    })?;
    let low = sum.lower().unwrap_or(trunc).min(trunc);
    let inv = inv_qpochhammer(&Monomial::q_pow(1), PochLength::Infinite, trunc - low)?;
    Ok((&inv * &sum).truncated(trunc))
}

pub fn conjugate_identity_check(pair: &BaileyPair, trunc: i64) -> CheckReport {
    conjugate_identity_check_with(pair, trunc, None)
}

fn conjugate_identity_check_with(pair: &BaileyPair, trunc: i64, mu: Option<&Mutation>) -> CheckReport {
    let started = Instant::now();
    let report = params_for(CheckReport::new("bailey-conjugate"), pair).param("trunc", trunc);
    let witness = (|| -> Result<Option<Witness>> {
        if pair.a().k() > 1 {
            return Err(Error::InvalidParams("conjugate identity needs a in {1, q}".into()));
        }
        let rhs = mu.tamper(None, conjugate_rhs(pair, trunc)?);
        Ok(compare_series(&conjugate_lhs(pair, trunc)?, &rhs, trunc))
    })();
    conclude(report, witness, started)
}

/// `sum_n (x)_{n+1} (q/x)_n q^n` computed directly.
pub fn andrews_sum_direct(trunc: i64) -> Result<QSeries> {
    infinite_sum(trunc, |n| {
        let window = Some((trunc - n).max(1));
        let a = qpochhammer(&Monomial::x_pow(1), PochLength::Finite((n + 1) as u64), window)?;
        let b = qpochhammer(&Monomial::signed(1, -1, 1), PochLength::Finite(n as u64), window)?;
        Ok((&a * &b).shift_q(n).truncated(trunc))
    })
}

/// `1/(q)_inf sum_{r,n>=0} (-1)^{n+r} x^{-r} q^{n(3n+5)/2+2nr+r(r+3)/2} (1 - x^{2r+1})`.
pub fn andrews_double_sum(trunc: i64) -> Result<QSeries> {
    let mut sum = QSeries::zero(1, trunc);
    for r in 0.. {
        if r * (r + 3) / 2 >= trunc {
            break;
        }
        for n in 0.. {
            let e = n * (3 * n + 5) / 2 + 2 * n * r + r * (r + 3) / 2;
            if e >= trunc {
                break;
            }
            let s = if (n + r) % 2 == 0 { 1 } else { -1 };
            let c = XLaurent::from_int_terms(&[(-r, s), (r + 1, -s)]);
            sum = &sum + &QSeries::monomial(c, e, 1);
        }
    }
    let inv = inv_qpochhammer(&Monomial::q_pow(1), PochLength::Infinite, trunc)?;
    Ok((&inv * &sum).truncated(trunc))
}

/// Conjugate identity for the `x`-deformed pair, and both of its sides
/// against the closed forms of the resulting double-sum identity.
pub fn andrews_conjugate_check(trunc: i64) -> CheckReport {
    andrews_conjugate_check_with(trunc, None)
}

pub(crate) fn andrews_conjugate_check_with(trunc: i64, mu: Option<&Mutation>) -> CheckReport {
    let started = Instant::now();
    let report = CheckReport::new("bailey-andrews").param("trunc", trunc);
    let witness = (|| -> Result<Option<Witness>> {
        let pair = make_named_pair(&NamedPair::Andrews)?;
        let lhs = mu.tamper(None, conjugate_lhs(&pair, trunc)?);
        let rhs = conjugate_rhs(&pair, trunc)?;
        let direct = andrews_sum_direct(trunc)?;
        let double = andrews_double_sum(trunc)?;
        Ok(compare_series(&direct, &lhs, trunc)
            .map(|w| w.with_note("lhs vs direct sum"))
            .or_else(|| compare_series(&lhs, &rhs, trunc).map(|w| w.with_note("lhs vs rhs")))
            .or_else(|| compare_series(&double, &rhs, trunc).map(|w| w.with_note("rhs vs double sum"))))
    })();
    conclude(report, witness, started)
}

/// Steps the star pair `t` times with `b = c = infinity` and checks that
/// `alpha''` comes out, and that `beta'' - beta = -q^{t-n} C_{n-1}`.
pub fn pipeline_check(family: KnotFamilyParams, n_max: i64, trunc: i64) -> CheckReport {
    pipeline_check_with(family, n_max, trunc, None)
}

pub(crate) fn pipeline_check_with(
    family: KnotFamilyParams,
    n_max: i64,
    trunc: i64,
    mu: Option<&Mutation>,
) -> CheckReport {
    let started = Instant::now();
    let report = CheckReport::new("bailey-pipeline")
        .param("t", family.t())
        .param("m", family.m())
        .param("n_max", n_max)
        .param("trunc", trunc);
    let witness = (|| -> Result<Option<Witness>> {
        let star = make_named_pair(&NamedPair::star_for(family))?;
        let stepped = iterate_infinite_steps(&star, family.t())?;
        let multisum = make_named_pair(&NamedPair::Multisum { family })?;
        let kernel = make_named_pair(&NamedPair::Kernel { family })?;
        for n in 0..=n_max {
            let a2 = QSeries::from_zpoly(&multisum_alpha_second(family, n));
            if let Some(w) = compare_series(&a2, &stepped.alpha(n, trunc)?, trunc) {
                return Ok(Some(w.at_index(n).with_note("stepped alpha vs alpha''")));
            }
            let diff = mu.tamper(Some(n), &stepped.beta(n, trunc)? - &multisum.beta(n, trunc)?);
            if let Some(w) = compare_series(&kernel.beta(n, trunc)?, &diff, trunc) {
                return Ok(Some(w.at_index(n).with_note("beta'' - beta vs -q^(t-n) C_(n-1)")));
            }
        }
        Ok(None)
    })();
    conclude(report, witness, started)
}

/// `alpha_n = -alpha'_n + alpha''_n` for the multisum pair, exactly.
pub fn multisum_decomposition_check(family: KnotFamilyParams, n_max: i64) -> CheckReport {
    multisum_decomposition_check_with(family, n_max, None)
}

pub(crate) fn multisum_decomposition_check_with(
    family: KnotFamilyParams,
    n_max: i64,
    mu: Option<&Mutation>,
) -> CheckReport {
    let started = Instant::now();
    let report = CheckReport::new("bailey-alpha-decomposition")
        .param("t", family.t())
        .param("m", family.m())
        .param("n_max", n_max);
    let mut witness = None;
    for n in 0..=n_max {
        let lhs = QSeries::from_zpoly(&multisum_alpha(family, n));
        let rhs = QSeries::from_zpoly(&(multisum_alpha_second(family, n) - kernel_alpha(family, n)));
        if let Some(w) = compare_series(&lhs, &mu.tamper(Some(n), rhs), i64::MAX) {
            witness = Some(w.at_index(n));
            break;
        }
    }
    report.finish(witness, started)
}


#[cfg(test)]
mod tests {
    use super::*;

    fn fam(t: u32, m: u32) -> KnotFamilyParams {
        KnotFamilyParams::new(t, m).unwrap()
    }

    #[test]
    fn named_pairs_satisfy_both_relations() {
        for name in NamedPair::catalogue(2) {
            let pair = make_named_pair(&name).unwrap();
            let r = bailey_verify(&pair, 4, 14);
            assert!(r.passed(), "{name}: {r}");
        }
    }

    #[test]
    fn perturbed_alpha_is_caught() {
        let pair = make_named_pair(&NamedPair::Multisum { family: fam(2, 1) }).unwrap();
        let bad = pair.with_alpha_perturbed(2, Monomial::signed(1, 0, 3).to_series());
        assert!(!bailey_verify(&bad, 4, 14).passed());
    }

    #[test]
    fn lemma_step_preserves_pairs() {
        let pair = make_named_pair(&NamedPair::Jones { family: fam(1, 1) }).unwrap();
        let inf = StepParam::Infinite;
        assert!(bailey_step_check(&pair, &inf, &inf, 3, 12).passed());
        let b = StepParam::Finite(Monomial::signed(-1, 0, 1));
        assert!(bailey_step_check(&pair, &b, &inf, 3, 12).passed());
    }

    #[test]
    fn limit_identity_holds() {
        let pair = make_named_pair(&NamedPair::Multisum { family: fam(1, 1) }).unwrap();
        let inf = StepParam::Infinite;
        let r = bailey_limit_identity(&pair, &inf, &inf, 15);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn pipeline_and_decomposition() {
        for t in 1..=3 {
            for m in 1..=t {
                let r = pipeline_check(fam(t, m), 5, 14);
                assert!(r.passed(), "{r}");
                assert!(multisum_decomposition_check(fam(t, m), 8).passed());
            }
        }
    }

    #[test]
    fn andrews_double_sum_identity() {
        let r = andrews_conjugate_check(12);
        assert!(r.passed(), "{r}");
    }
}
