use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::algebra::{
    inv_qpochhammer, q_poch_z, qpochhammer, Monomial, PochLength, QBinomialCache, QSeries,
    XLaurent, ZPoly,
};
use crate::error::{Error, Result};
use crate::knot::{chain_multinomial, jones_left, ChainNode, KnotFamilyParams};

/// The parameter `a = q^k` a Bailey pair is relative to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AParam {
    One,
    Q,
    Q2,
}

impl AParam {
    /// The exponent `k` in `a = q^k`.
    pub fn k(self) -> i64 {
        match self {
            AParam::One => 0,
            AParam::Q => 1,
            AParam::Q2 => 2,
        }
    }

    pub fn monomial(self) -> Monomial {
        Monomial::q_pow(self.k())
    }
}

impl fmt::Display for AParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AParam::One => "1",
            AParam::Q => "q",
            AParam::Q2 => "q^2",
        })
    }
}

/// Produces term `n` valid at least below the scaled bound `trunc`.
pub type TermFn = dyn Fn(i64, i64) -> Result<QSeries> + Send + Sync;

/// Widest term computed so far for each index.
#[derive(Default)]
struct Memo {
    table: Mutex<HashMap<i64, QSeries>>,
}

impl Memo {
    fn get(&self, n: i64, trunc: i64, f: &TermFn) -> Result<QSeries> {
        if let Some(s) = self.table.lock().unwrap().get(&n) {
            if s.trunc().is_none_or(|t| t >= trunc) {
                return Ok(s.truncated(trunc));
            }
        }
        // A window at or below the valuation would come back empty and lose
        // everything in later products, so never compute below q^1.
        let s = f(n, trunc.max(1))?;
        self.table.lock().unwrap().insert(n, s.clone());
        Ok(s.truncated(trunc))
    }
}

/// A pair of term generators `(alpha_n, beta_n)` relative to `a`.
#[derive(Clone)]
pub struct BaileyPair {
    label: String,
    a: AParam,
    alpha: Arc<TermFn>,
    beta: Arc<TermFn>,
    alpha_memo: Arc<Memo>,
    beta_memo: Arc<Memo>,
    provenance: String,
}

impl fmt::Debug for BaileyPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BaileyPair")
            .field("label", &self.label)
            .field("a", &self.a)
            .field("provenance", &self.provenance)
            .finish()
    }
}

impl BaileyPair {
    pub fn new(
        label: impl Into<String>,
        a: AParam,
        alpha: Arc<TermFn>,
        beta: Arc<TermFn>,
        provenance: impl Into<String>,
    ) -> Self {
        BaileyPair {
            label: label.into(),
            a,
            alpha,
            beta,
            alpha_memo: Arc::default(),
            beta_memo: Arc::default(),
            provenance: provenance.into(),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn a(&self) -> AParam {
        self.a
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn alpha(&self, n: i64, trunc: i64) -> Result<QSeries> {
        self.alpha_memo.get(n, trunc, self.alpha.as_ref())
    }

    pub fn beta(&self, n: i64, trunc: i64) -> Result<QSeries> {
        self.beta_memo.get(n, trunc, self.beta.as_ref())
    }

    /// Same pair with `delta` added to `alpha_{n0}`.
    pub fn with_alpha_perturbed(&self, n0: i64, delta: QSeries) -> BaileyPair {
        let base = self.clone();
        let alpha: Arc<TermFn> = Arc::new(move |n, t| {
            let a = base.alpha(n, t)?;
            Ok(if n == n0 { &a + &delta } else { a })
        });
        BaileyPair::new(
            format!("{}+perturbed-alpha{n0}", self.label),
            self.a,
            alpha,
            self.beta.clone(),
            self.provenance.clone(),
        )
    }

    /// Same pair with `delta` added to `beta_{n0}`.
    pub fn with_beta_perturbed(&self, n0: i64, delta: QSeries) -> BaileyPair {
        let base = self.clone();
        let beta: Arc<TermFn> = Arc::new(move |n, t| {
            let b = base.beta(n, t)?;
            Ok(if n == n0 { &b + &delta } else { b })
        });
        BaileyPair::new(
            format!("{}+perturbed-beta{n0}", self.label),
            self.a,
            self.alpha.clone(),
            beta,
            self.provenance.clone(),
        )
    }
}

/// The pairs used by the proofs, plus the trivial one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "pair", rename_all = "lowercase")]
pub enum NamedPair {
    /// `alpha_n = [n = 0]`, `beta_n = 1/((q)_n (aq)_n)`.
    Unit { a: AParam },
    /// Relative to `q^2`: `alpha_n` from `J_{n+1}^{(t,m)}`, `beta_n = q^{-n} C_n^{(t,m)}`.
    Jones { family: KnotFamilyParams },
    /// Relative to `1`: multisum `beta_n` with `l = t - m`, theta-type `alpha_n`.
    Multisum { family: KnotFamilyParams },
    /// Relative to `1`: the `(k, l)` pair with negative-definite `alpha_n`.
    Star { k: u32, l: u32 },
    /// Relative to `1`: `alpha'_n` and `beta'_n = -q^{t-n} C_{n-1}^{(t,m)}`.
    Kernel { family: KnotFamilyParams },
    /// Relative to `q`, with symbolic `x`:
    /// `alpha_n = (-x)^{-n} q^{n(n+1)/2} (1 - x^{2n+1})`,
    /// `beta_n = (x)_{n+1} (q/x)_n / (q^2)_{2n}`.
    Andrews,
}

impl NamedPair {
    /// The star pair whose `t`-fold infinite step gives `alpha''`:
    /// `k = t` and `l = max(t - m - 1, 0)`.
    pub fn star_for(family: KnotFamilyParams) -> NamedPair {
        NamedPair::Star {
            k: family.t(),
            l: (family.ti() - family.mi() - 1).max(0) as u32,
        }
    }

    /// Every named pair for the families with `t <= t_max`.
    pub fn catalogue(t_max: u32) -> Vec<NamedPair> {
        let mut out = vec![
            NamedPair::Unit { a: AParam::One },
            NamedPair::Unit { a: AParam::Q },
            NamedPair::Unit { a: AParam::Q2 },
            NamedPair::Andrews,
        ];
        for family in KnotFamilyParams::all_up_to(t_max) {
            out.push(NamedPair::Jones { family });
            out.push(NamedPair::Multisum { family });
            out.push(NamedPair::Kernel { family });
            let star = NamedPair::star_for(family);
            if !out.contains(&star) {
                out.push(star);
            }
        }
        out
    }

    /// Whether `sum q^{n^2} alpha_n` converges, so that the limiting form of
    /// the lemma with `b, c -> infinity` applies. Star pairs with `k >= 2`
    /// have negative-definite `alpha_n`.
    pub fn has_convergent_limit(&self) -> bool {
        !matches!(self, NamedPair::Star { k, .. } if *k >= 2)
    }

    pub fn parse(name: &str, t: u32, m: u32) -> Result<NamedPair> {
        let family = || KnotFamilyParams::new(t, m);
        Ok(match name {
            "unit" => NamedPair::Unit { a: AParam::One },
            "unit-q" => NamedPair::Unit { a: AParam::Q },
            "unit-q2" => NamedPair::Unit { a: AParam::Q2 },
            "jones" => NamedPair::Jones { family: family()? },
            "multisum" => NamedPair::Multisum { family: family()? },
            "kernel" => NamedPair::Kernel { family: family()? },
            "star" => NamedPair::star_for(family()?),
            "andrews" => NamedPair::Andrews,
            other => {
                return Err(Error::InvalidParams(format!("unknown Bailey pair '{other}'")))
            }
        })
    }
}

impl fmt::Display for NamedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedPair::Unit { a } => write!(f, "unit(a={a})"),
            NamedPair::Jones { family } => write!(f, "jones({family})"),
            NamedPair::Multisum { family } => write!(f, "multisum({family})"),
            NamedPair::Star { k, l } => write!(f, "star(k={k}, l={l})"),
            NamedPair::Kernel { family } => write!(f, "kernel({family})"),
            NamedPair::Andrews => write!(f, "andrews"),
        }
    }
}

/// `poly / (q)_n` valid below `trunc`.
fn over_q_factorial(poly: &ZPoly, n: i64, trunc: i64) -> Result<QSeries> {
    let s = QSeries::from_zpoly(poly);
    let Some(low) = s.lower() else {
        return Ok(QSeries::zero(1, trunc));
    };
    let inv = inv_qpochhammer(&Monomial::q_pow(1), PochLength::Finite(n as u64), trunc - low.min(trunc))?;
    Ok((&s * &inv).truncated(trunc))
}

fn sign(n: i64) -> i64 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `sum_{j=lo}^{hi} (-1)^j q^{-((2t+1) j^2 + (2t+1-2m) j)/2}`
fn theta_block(p: KnotFamilyParams, lo: i64, hi: i64) -> ZPoly {
    let (odd, r) = (p.odd(), p.r());
    (lo..=hi)
        .map(|j| ZPoly::monomial(BigInt::from(sign(j)), -(odd * j * j + r * j) / 2))
        .sum()
}

/// `alpha_n` of the multisum pair.
pub fn multisum_alpha(p: KnotFamilyParams, n: i64) -> ZPoly {
    let t = p.ti();
    let mut out = theta_block(p, -n, n).shift((t + 1) * n * n + n);
    if n != 0 {
        out -= &theta_block(p, -n + 1, n - 1).shift((t + 1) * n * n - n);
    }
    out
}

/// `alpha'_n = q^{(t+1)n^2 - n} (1 - q^{2n}) sum_{j=-n}^{n-1} (...)`.
pub fn kernel_alpha(p: KnotFamilyParams, n: i64) -> ZPoly {
    let t = p.ti();
    (&theta_block(p, -n, n - 1) * &ZPoly::one_minus(1, 2 * n)).shift((t + 1) * n * n - n)
}

/// `alpha''_n`: `1` at `n = 0`, else
/// `(-1)^n (q^{(n^2 + (2t-2m-1)n)/2} + q^{(n^2 - (2t-2m-1)n)/2})`.
pub fn multisum_alpha_second(p: KnotFamilyParams, n: i64) -> ZPoly {
    let c = 2 * p.ti() - 2 * p.mi() - 1;
    theta_pair(n, 1, c)
}

/// `1` at `n = 0`, else `(-1)^n (q^{(d n^2 - c n)/2} + q^{(d n^2 + c n)/2})`.
fn theta_pair(n: i64, d: i64, c: i64) -> ZPoly {
    if n == 0 {
        return ZPoly::one();
    }
    let s = BigInt::from(sign(n));
    &ZPoly::monomial(s.clone(), (d * n * n - c * n) / 2) + &ZPoly::monomial(s, (d * n * n + c * n) / 2)
}

/// Star `alpha*_n` for `(k, l)`.
pub fn star_alpha(k: i64, l: i64, n: i64) -> ZPoly {
    theta_pair(n, -(2 * k - 1), 2 * l + 1)
}

/// `(q)_n * beta*_n` for the star pair.
pub fn star_beta_numerator(k: i64, l: i64, n: i64, bins: &mut QBinomialCache) -> ZPoly {
    let nodes: Vec<ChainNode> = (1..k)
        .map(|i| if i <= l { ChainNode::linear(-1) } else { ChainNode::default() })
        .collect();
    let cross = vec![-1; nodes.len()];
    chain_multinomial(n, &nodes, &cross, bins)
        .shift(-n * (n + 1) / 2)
        .negate_if(n % 2 != 0)
}

/// `(q)_n * beta_n` for the multisum pair.
pub fn multisum_beta_numerator(p: KnotFamilyParams, n: i64, bins: &mut QBinomialCache) -> ZPoly {
    let (_, shifted, cross) = crate::knot::multisum_chain(p);
    chain_multinomial(n, &shifted, &cross, bins)
}

/// `(q)_n * beta''_n`, the same multisum with `binom(n_t, 2)` and `l = t-m-1`.
pub fn stepped_star_beta_numerator(p: KnotFamilyParams, n: i64, bins: &mut QBinomialCache) -> ZPoly {
    let (plain, _, cross) = crate::knot::multisum_chain(p);
    chain_multinomial(n, &plain, &cross, bins)
}

fn complete(p: ZPoly) -> Result<QSeries> {
    Ok(QSeries::from_zpoly(&p))
}

/// Builds the named pair.
pub fn make_named_pair(name: &NamedPair) -> Result<BaileyPair> {
    let label = name.to_string();
    Ok(match *name {
        NamedPair::Unit { a } => {
            let k = a.k();
            BaileyPair::new(
                label,
                a,
                Arc::new(|n, _| complete(if n == 0 { ZPoly::one() } else { ZPoly::zero() })),
                Arc::new(move |n, t| {
                    let inv = inv_qpochhammer(&Monomial::q_pow(1), PochLength::Finite(n as u64), t)?;
                    let inv2 = inv_qpochhammer(&Monomial::q_pow(k + 1), PochLength::Finite(n as u64), t)?;
                    Ok(&inv * &inv2)
                }),
                "delta pair: alpha concentrated at n = 0",
            )
        }
        NamedPair::Jones { family } => BaileyPair::new(
            label,
            AParam::Q2,
            Arc::new(move |n, _| {
                let j = jones_left(family, (n + 1) as u32)?.to_zpoly()?;
                let num = &(&ZPoly::one_minus(1, n + 1) * &ZPoly::one_minus(1, 2 * n + 2)) * &j;
                let den = &ZPoly::one_minus(1, 1) * &ZPoly::one_minus(1, 2);
                let q = num.div_exact(&den).ok_or_else(|| {
                    Error::InexactDivision(format!("Jones pair alpha_{n}"))
                })?;
                complete(q.shift(n * (n - 1) / 2).negate_if(n % 2 != 0))
            }),
            Arc::new(move |n, t| {
                let mut bins = QBinomialCache::new();
                let c = crate::knot::c_product_z(family, n, Some(t + n), &mut bins);
                Ok(QSeries::from_zpoly(&c).shift(-n).truncated(t))
            }),
            "cyclotomic expansion of the colored Jones polynomial, relative to q^2",
        ),
        NamedPair::Multisum { family } => BaileyPair::new(
            label,
            AParam::One,
            Arc::new(move |n, _| complete(multisum_alpha(family, n))),
            Arc::new(move |n, t| {
                let num = multisum_beta_numerator(family, n, &mut QBinomialCache::new());
                over_q_factorial(&num, n, t)
            }),
            "multisum pair with k = K = t, l = t - m, relative to 1",
        ),
        NamedPair::Star { k, l } => {
            if k == 0 {
                return Err(Error::InvalidParams("star pair needs k >= 1".into()));
            }
            let (k, l) = (k as i64, l as i64);
            BaileyPair::new(
                label,
                AParam::One,
                Arc::new(move |n, _| complete(star_alpha(k, l, n))),
                Arc::new(move |n, t| {
                    let num = star_beta_numerator(k, l, n, &mut QBinomialCache::new());
                    over_q_factorial(&num, n, t)
                }),
                "negative-definite multisum pair, relative to 1",
            )
        }
        NamedPair::Kernel { family } => BaileyPair::new(
            label,
            AParam::One,
            Arc::new(move |n, _| complete(kernel_alpha(family, n))),
            Arc::new(move |n, t| {
                if n == 0 {
                    return Ok(QSeries::complete_zero(1));
                }
                let shift = family.ti() - n;
                let mut bins = QBinomialCache::new();
                let c = crate::knot::c_product_z(family, n - 1, Some(t - shift), &mut bins);
                Ok((-QSeries::from_zpoly(&c).shift(shift)).truncated(t))
            }),
            "difference of the stepped star pair and the multisum pair, relative to 1",
        ),
        NamedPair::Andrews => BaileyPair::new(
            label,
            AParam::Q,
            Arc::new(|n, _| {
                let s = sign(n);
                let e = n * (n + 1) / 2;
                Ok(QSeries::monomial(XLaurent::from_int_terms(&[(-n, s), (n + 1, -s)]), e, 1))
            }),
            Arc::new(|n, t| {
                let a = qpochhammer(&Monomial::x_pow(1), PochLength::Finite((n + 1) as u64), Some(t))?;
                let b = qpochhammer(&Monomial::signed(1, -1, 1), PochLength::Finite(n as u64), Some(t))?;
                let inv = inv_qpochhammer(&Monomial::q_pow(2), PochLength::Finite(2 * n as u64), t)?;
                Ok((&(&a * &b) * &inv).truncated(t))
            }),
            "x-deformed pair relative to q",
        ),
    })
}

/// `(c q^e)_n` as a complete series; convenience for step weights.
pub(crate) fn poch_series(m: &Monomial, n: i64) -> Result<QSeries> {
    qpochhammer(m, PochLength::Finite(n.max(0) as u64), None)
}

/// `(q^e)_n` for integer `e` as an integer polynomial series.
pub(crate) fn poch_q(e: i64, n: i64) -> QSeries {
    QSeries::from_zpoly(&q_poch_z(1, e, n.max(0) as u64))
}
