//! The named checks. Each one compares an independently computed pair of
//! exact objects and reports the first disagreement.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::algebra::{euler_phi, XLaurent};
use crate::bailey::{self, make_named_pair, NamedPair, StepParam};
use crate::error::Result;
use crate::hecke::{hecke_stabilizes, hecke_u1_double, hecke_u_series};
use crate::knot::{
    bernoulli_lhs, bernoulli_normalized, bernoulli_order, bernoulli_rhs, c_multisum, c_product,
    eval_f_at_root, habiro_inverse, habiro_reconstruct, jones_hyper, jones_left, jones_morton,
    mirror, theta_phi_product, theta_phi_sum, theta_scale, u_eval_at_root,
    u_specialized_at_minus_q_pow, u_series, CyclotomicCoeffs, KnotFamilyParams,
};

use super::golden::golden_u_series;
use super::mutation::{Mutation, Tamper};
use super::{compare_cyclo, compare_series, CheckReport, Witness};

/// Turns the outcome of a comparison (or the error that prevented it) into
/// a finished report.
pub(crate) fn conclude(
    report: CheckReport,
    outcome: Result<Option<Witness>>,
    started: Instant,
) -> CheckReport {
    let witness = outcome.unwrap_or_else(|e| {
        Some(Witness::values("a value", "an error").with_note(e.to_string()))
    });
    report.finish(witness, started)
}

fn family_report(id: &str, p: KnotFamilyParams) -> CheckReport {
    CheckReport::new(id).param("t", p.t()).param("m", p.m())
}

/// A check with its parameters, runnable with or without a mutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "check", rename_all = "kebab-case")]
pub enum CheckSpec {
    /// `U_t^{(m)}` against its printed expansion.
    Golden { family: KnotFamilyParams },
    /// `F_t^{(m)}(zeta_N^{-1}) = U_t^{(m)}(-1; zeta_N)`.
    Duality { family: KnotFamilyParams, n: u32 },
    /// Colored Jones polynomials at `zeta_N` against `F` at `zeta_N^{+-1}`.
    JonesAgreement { family: KnotFamilyParams, n: u32 },
    /// Bernoulli limit formula in the field of order `8(2t+1)N`.
    Bernoulli { family: KnotFamilyParams, n: u32 },
    /// Hecke-type triple sum against `U_t^{(m)}(-x; q)`.
    Hecke { family: KnotFamilyParams, trunc: i64 },
    /// Double sum against `(1-x) U_1(-x; q)`.
    HeckeDouble { trunc: i64 },
    /// Product and multisum forms of `C_n`, and their integrality.
    Cyclotomic { family: KnotFamilyParams, n_max: u32 },
    /// Morton's formula, the hypergeometric form and the mirror.
    JonesConsistency { t: u32, n_max: u32 },
    /// Cyclotomic expansion, its inverse and the `x = -q^N` specialization.
    Habiro { family: KnotFamilyParams, n_max: u32 },
    /// Theta series as a sum and as a product.
    Theta { family: KnotFamilyParams, window: i64 },
    /// Both defining relations of a named pair.
    BaileyVerify { pair: NamedPair, n_max: i64, trunc: i64 },
    /// One lemma step with `b = -1`, `c = infinity`, then the relations.
    BaileyStep { pair: NamedPair, n_max: i64, trunc: i64 },
    /// The limiting form of the lemma with `b, c = infinity`.
    BaileyLimit { pair: NamedPair, trunc: i64 },
    /// `t` infinite steps of the star pair against the multisum pair.
    BaileyPipeline { family: KnotFamilyParams, n_max: i64, trunc: i64 },
    /// `alpha = -alpha' + alpha''` for the multisum pair.
    BaileyDecomposition { family: KnotFamilyParams, n_max: i64 },
    /// The conjugate identity for the `x`-deformed pair.
    Conjugate { trunc: i64 },
}

impl CheckSpec {
    pub fn id(&self) -> &'static str {
        match self {
            CheckSpec::Golden { .. } => "golden",
            CheckSpec::Duality { .. } => "duality",
            CheckSpec::JonesAgreement { .. } => "jones-agreement",
            CheckSpec::Bernoulli { .. } => "bernoulli",
            CheckSpec::Hecke { .. } => "hecke",
            CheckSpec::HeckeDouble { .. } => "hecke-double",
            CheckSpec::Cyclotomic { .. } => "cyclotomic",
            CheckSpec::JonesConsistency { .. } => "jones-consistency",
            CheckSpec::Habiro { .. } => "habiro",
            CheckSpec::Theta { .. } => "theta",
            CheckSpec::BaileyVerify { .. } => "bailey-verify",
            CheckSpec::BaileyStep { .. } => "bailey-step",
            CheckSpec::BaileyLimit { .. } => "bailey-limit",
            CheckSpec::BaileyPipeline { .. } => "bailey-pipeline",
            CheckSpec::BaileyDecomposition { .. } => "bailey-alpha-decomposition",
            CheckSpec::Conjugate { .. } => "bailey-andrews",
        }
    }

    pub fn run(&self) -> CheckReport {
        self.run_with(None)
    }

    /// Runs the check with `mu` applied to its computed side.
    pub fn run_with(&self, mu: Option<&Mutation>) -> CheckReport {
        match *self {
            CheckSpec::Golden { family } => golden(family, mu),
            CheckSpec::Duality { family, n } => duality(family, n, mu),
            CheckSpec::JonesAgreement { family, n } => jones_agreement(family, n, mu),
            CheckSpec::Bernoulli { family, n } => bernoulli_formula(family, n, mu),
            CheckSpec::Hecke { family, trunc } => hecke(family, trunc, mu),
            CheckSpec::HeckeDouble { trunc } => hecke_double(trunc, mu),
            CheckSpec::Cyclotomic { family, n_max } => cyclotomic(family, n_max, mu),
            CheckSpec::JonesConsistency { t, n_max } => jones_consistency(t, n_max, mu),
            CheckSpec::Habiro { family, n_max } => habiro(family, n_max, mu),
            CheckSpec::Theta { family, window } => theta(family, window, mu),
            CheckSpec::BaileyVerify { pair, n_max, trunc } => with_pair(pair, |p| {
                bailey::bailey_verify_with(p, n_max, trunc, mu)
            }),
            CheckSpec::BaileyStep { pair, n_max, trunc } => with_pair(pair, |p| {
                bailey::bailey_step_check_with(p, &step_b(), &StepParam::Infinite, n_max, trunc, mu)
            }),
            CheckSpec::BaileyLimit { pair, trunc } => with_pair(pair, |p| {
                let inf = StepParam::Infinite;
                bailey::bailey_limit_identity_with(p, &inf, &inf, trunc, mu)
            }),
            CheckSpec::BaileyPipeline { family, n_max, trunc } => {
                bailey::pipeline_check_with(family, n_max, trunc, mu)
            }
            CheckSpec::BaileyDecomposition { family, n_max } => {
                bailey::multisum_decomposition_check_with(family, n_max, mu)
            }
            CheckSpec::Conjugate { trunc } => bailey::andrews_conjugate_check_with(trunc, mu),
        }
    }

    /// Index range (inclusive) and slot range (half-open) in which a
    /// mutation is guaranteed to be visible to this check.
    pub fn mutation_space(&self) -> (Option<(i64, i64)>, (i64, i64)) {
        match *self {
            CheckSpec::Golden { family } => {
                let g = golden_u_series(family).expect("golden checks use tabulated families");
                (None, (g.min_exp().unwrap_or(0), g.trunc().unwrap_or(1)))
            }
            CheckSpec::Duality { n, .. } | CheckSpec::JonesAgreement { n, .. } => {
                (None, (0, euler_phi(n as u64) as i64))
            }
            CheckSpec::Bernoulli { family, n } => {
                (None, (0, euler_phi(bernoulli_order(family, n)) as i64))
            }
            CheckSpec::Hecke { trunc, .. } | CheckSpec::HeckeDouble { trunc } => (None, (0, trunc)),
            CheckSpec::Cyclotomic { n_max, .. } | CheckSpec::Habiro { n_max, .. } => {
                (Some((0, n_max as i64)), (-10, 40))
            }
            CheckSpec::JonesConsistency { n_max, .. } => (Some((1, n_max as i64)), (-40, 40)),
            CheckSpec::Theta { family, window } => (None, (0, window * theta_scale(family) as i64)),
            CheckSpec::BaileyVerify { n_max, trunc, .. }
            | CheckSpec::BaileyStep { n_max, trunc, .. }
            | CheckSpec::BaileyPipeline { n_max, trunc, .. } => (Some((0, n_max)), (0, trunc)),
            CheckSpec::BaileyLimit { trunc, .. } | CheckSpec::Conjugate { trunc } => (None, (0, trunc)),
            CheckSpec::BaileyDecomposition { n_max, .. } => (Some((0, n_max)), (-10, 40)),
        }
    }
}

impl fmt::Display for CheckSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let json = serde_json::to_value(self).expect("specs serialize");
        let mut parts = Vec::new();
        if let Some(obj) = json.as_object() {
            for (k, v) in obj.iter().filter(|(k, _)| *k != "check") {
                parts.push(format!("{k}={}", v.to_string().replace('"', "")));
            }
        }
        write!(f, "{} [{}]", self.id(), parts.join(", "))
    }
}

fn step_b() -> StepParam {
    StepParam::Finite(crate::algebra::Monomial::signed(-1, 0, 0))
}

fn with_pair(name: NamedPair, run: impl FnOnce(&bailey::BaileyPair) -> CheckReport) -> CheckReport {
    match make_named_pair(&name) {
        Ok(pair) => run(&pair),
        Err(e) => conclude(
            CheckReport::new("bailey").param("pair", name.to_string()),
            Err(e),
            Instant::now(),
        ),
    }
}

fn golden(p: KnotFamilyParams, mu: Option<&Mutation>) -> CheckReport {
    let started = Instant::now();
    let report = family_report("golden", p);
    let outcome = match golden_u_series(p) {
        Some(g) => {
            let trunc = g.trunc().unwrap_or(0);
            Ok(compare_series(&g, &mu.tamper(None, u_series(p, trunc)), trunc))
        }
        None => Ok(Some(Witness::values("a printed expansion", "none"))),
    };
    conclude(report, outcome, started)
}

/// `F_t^{(m)}(zeta_N^{-1}) = U_t^{(m)}(-1; zeta_N)`; the report carries the
/// common value.
pub fn check_duality(p: KnotFamilyParams, n: u32) -> CheckReport {
    duality(p, n, None)
}

fn duality(p: KnotFamilyParams, n: u32, mu: Option<&Mutation>) -> CheckReport {
    let started = Instant::now();
    let report = family_report("duality", p).param("N", n);
    let outcome = (|| {
        let f = eval_f_at_root(p, n, true)?;
        let u = mu.tamper(None, u_eval_at_root(p, n)?);
        Ok((compare_cyclo(&f, &u), f))
    })();
    match outcome {
        Ok((w, value)) => report.with_value(&value).finish(w, started),
        Err(e) => conclude(report, Err(e), started),
    }
}

/// Colored Jones polynomials at `zeta_N` against the `F` series, in both
/// orientations: `J_N(T(2,2t+1); zeta_N) = F_t(zeta_N)` for the knot and
/// `J_N^{(t,m)}(zeta_N) = F_t^{(m)}(zeta_N^{-1})` for the mirror family.
pub fn check_jones_agreement(p: KnotFamilyParams, n: u32) -> CheckReport {
    jones_agreement(p, n, None)
}

fn jones_agreement(p: KnotFamilyParams, n: u32, mu: Option<&Mutation>) -> CheckReport {
    let started = Instant::now();
    let report = family_report("jones-agreement", p).param("N", n);
    let order = n as u64;
    let outcome = (|| {
        if p.m() == 1 {
            let j = crate::algebra::cyclo_eval(&jones_hyper(p.t(), n)?, order, 1);
            let f = mu.tamper(None, eval_f_at_root(p, n, false)?);
            if let Some(w) = compare_cyclo(&j, &f) {
                return Ok(Some(w.with_note("knot at zeta_N")));
            }
        }
        let j = crate::algebra::cyclo_eval(&jones_left(p, n)?, order, 1);
        let f = eval_f_at_root(p, n, true)?;
        let f = if p.m() == 1 { f } else { mu.tamper(None, f) };
        Ok(compare_cyclo(&j, &f).map(|w| w.with_note("mirror family at zeta_N, F at zeta_N^-1")))
    })();
    conclude(report, outcome, started)
}

/// The Bernoulli limit formula, both in its stated form and divided by the
/// common root of unity `zeta_M^{(2t+1-2m)^2}`; the value reported is the
/// normalized one.
pub fn check_bernoulli_formula(p: KnotFamilyParams, n: u32) -> CheckReport {
    bernoulli_formula(p, n, None)
}

fn bernoulli_formula(p: KnotFamilyParams, n: u32, mu: Option<&Mutation>) -> CheckReport {
    let started = Instant::now();
    let report = family_report("bernoulli", p)
        .param("N", n)
        .param("field_order", bernoulli_order(p, n));
    let outcome = (|| {
        let lhs = bernoulli_lhs(p, n)?;
        let rhs = mu.tamper(None, bernoulli_rhs(p, n)?);
        if let Some(w) = compare_cyclo(&lhs, &rhs) {
            return Ok((Some(w), None));
        }
        let (nl, nr) = bernoulli_normalized(p, n)?;
        Ok((compare_cyclo(&nl, &nr).map(|w| w.with_note("normalized")), Some(nl)))
    })();
    match outcome {
        Ok((w, value)) => {
            let report = match value {
                Some(v) => report.with_value(v),
                None => report,
            };
            report.finish(w, started)
        }
        Err(e) => conclude(report, Err(e), started),
    }
}

/// The triple sum against `U_t^{(m)}(-x; q)` below `q^trunc`, plus a
/// stabilization run with every enumeration radius widened by 5.
pub fn check_hecke_match(p: KnotFamilyParams, trunc: i64) -> CheckReport {
    hecke(p, trunc, None)
}

fn hecke(p: KnotFamilyParams, trunc: i64, mu: Option<&Mutation>) -> CheckReport {
    let started = Instant::now();
    let report = family_report("hecke", p).param("trunc", trunc);
    let outcome = (|| {
        let expected = u_series(p, trunc).negate_x();
        let actual = mu.tamper(None, hecke_u_series(p, trunc)?);
        if let Some(w) = compare_series(&expected, &actual, trunc) {
            return Ok(Some(w));
        }
        Ok((!hecke_stabilizes(p, trunc, 5)?)
            .then(|| Witness::values("stable", "changed").with_note("wider enumeration")))
    })();
    conclude(report, outcome, started)
}

/// The double sum against `(1-x) U_1(-x; q)` below `q^trunc`.
pub fn check_hecke_double(trunc: i64) -> CheckReport {
    hecke_double(trunc, None)
}

fn hecke_double(trunc: i64, mu: Option<&Mutation>) -> CheckReport {
    let started = Instant::now();
    let report = CheckReport::new("hecke-double").param("trunc", trunc);
    let outcome = (|| {
        let p = KnotFamilyParams::scalar(1)?;
        let one_minus_x = XLaurent::from_int_terms(&[(0, 1), (1, -1)]);
        let expected = u_series(p, trunc).negate_x().mul_xlaurent(&one_minus_x);
        let actual = mu.tamper(None, hecke_u1_double(trunc)?);
        Ok(compare_series(&expected, &actual, trunc))
    })();
    conclude(report, outcome, started)
}

/// `C_n` in product and multisum form for `n <= n_max`, each an integral
/// Laurent polynomial.
pub fn check_cyclotomic_coeffs(p: KnotFamilyParams, n_max: u32) -> CheckReport {
    cyclotomic(p, n_max, None)
}

fn cyclotomic(p: KnotFamilyParams, n_max: u32, mu: Option<&Mutation>) -> CheckReport {
    let started = Instant::now();
    let report = family_report("cyclotomic", p).param("n_max", n_max);
    let outcome = (|| {
        for n in 0..=n_max {
            let idx = Some(n as i64);
            let prod = c_product(p, n);
            let multi = mu.tamper(idx, c_multisum(p, n)?);
            if let Some(w) = super::compare_laurent(&prod, &multi) {
                return Ok(Some(w.at_index(n as i64)));
            }
            if !prod.is_integral() {
                return Ok(Some(
                    Witness::values("integral coefficients", prod.display_in("q")).at_index(n as i64),
                ));
            }
        }
        Ok(None)
    })();
    conclude(report, outcome, started)
}

/// Morton's formula, the hypergeometric form and the mirror relation for
/// `T(2, 2t+1)` with colors `1..=n_max`.
pub fn check_jones_consistency(t: u32, n_max: u32) -> CheckReport {
    jones_consistency(t, n_max, None)
}

fn jones_consistency(t: u32, n_max: u32, mu: Option<&Mutation>) -> CheckReport {
    let started = Instant::now();
    let report = CheckReport::new("jones-consistency").param("t", t).param("n_max", n_max);
    let outcome = (|| {
        let p = KnotFamilyParams::scalar(t)?;
        for n in 1..=n_max {
            let idx = Some(n as i64);
            let morton = jones_morton(2, 2 * t + 1, n)?;
            let hyper = mu.tamper(idx, jones_hyper(t, n)?);
            if let Some(w) = super::compare_laurent(&morton, &hyper) {
                return Ok(Some(w.at_index(n as i64).with_note("hypergeometric form")));
            }
            if let Some(w) = super::compare_laurent(&mirror(&morton), &jones_left(p, n)?) {
                return Ok(Some(w.at_index(n as i64).with_note("mirror")));
            }
        }
        Ok(None)
    })();
    conclude(report, outcome, started)
}

/// For `n <= n_max`: `C_n` recovered from `J_1, ..., J_{n+1}` by the inverse
/// transform, and `J_N` equal to `U_t^{(m)}` at `x = -q^N`.
pub fn check_habiro_roundtrip(p: KnotFamilyParams, n_max: u32) -> CheckReport {
    habiro(p, n_max, None)
}

fn habiro(p: KnotFamilyParams, n_max: u32, mu: Option<&Mutation>) -> CheckReport {
    let started = Instant::now();
    let report = family_report("habiro", p).param("n_max", n_max);
    let outcome = (|| {
        let coeffs = CyclotomicCoeffs::product(p, n_max + 2);
        let jones = |l: u32| habiro_reconstruct(&coeffs, l);
        for n in 0..=n_max {
            let back = mu.tamper(Some(n as i64), habiro_inverse(jones, n)?);
            let c = coeffs.get(n as usize).expect("computed above");
            if let Some(w) = super::compare_laurent(c, &back) {
                return Ok(Some(w.at_index(n as i64).with_note("inverse transform")));
            }
        }
        for n in 1..=n_max.max(1) {
            let spec = u_specialized_at_minus_q_pow(p, n)?;
            if let Some(w) = super::compare_laurent(&jones(n)?, &spec) {
                return Ok(Some(w.at_index(n as i64).with_note("U at x = -q^N")));
            }
        }
        Ok(None)
    })();
    conclude(report, outcome, started)
}

/// The theta series as a character sum and as a triple product, below
/// `q^window`.
pub fn check_theta(p: KnotFamilyParams, window: i64) -> CheckReport {
    theta(p, window, None)
}

fn theta(p: KnotFamilyParams, window: i64, mu: Option<&Mutation>) -> CheckReport {
    let started = Instant::now();
    let report = family_report("theta", p).param("window", window);
    let trunc = window * theta_scale(p) as i64;
    let sum = theta_phi_sum(p, trunc);
    let prod = mu.tamper(None, theta_phi_product(p, trunc));
    conclude(report, Ok(compare_series(&sum, &prod, trunc)), started)
}

/// Every relation check for one named pair: both defining relations and
/// one lemma step.
pub fn check_bailey_pair(name: NamedPair, n_max: i64, trunc: i64) -> Vec<CheckReport> {
    vec![
        CheckSpec::BaileyVerify { pair: name, n_max, trunc }.run(),
        CheckSpec::BaileyStep { pair: name, n_max, trunc }.run(),
    ]
}
