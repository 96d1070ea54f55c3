//! The Bailey lemma: one pair relative to `a` and two parameters `b`, `c`
//! give a new pair relative to `a`.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{Monomial, QSeries};
use crate::error::{Error, Result};

use super::pair::{poch_q, poch_series, BaileyPair, TermFn};

/// A lemma parameter: a monomial in `q` and `x`, or the limit to infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepParam {
    Infinite,
    Finite(Monomial),
}

impl fmt::Display for StepParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepParam::Infinite => f.write_str("inf"),
            StepParam::Finite(m) => write!(f, "{m}"),
        }
    }
}

/// Weights of the lemma for fixed `a`, `b`, `c`, with the limits
/// `b, c -> infinity` taken termwise.
#[derive(Clone, Debug)]
pub struct StepWeights {
    a: Monomial,
    b: StepParam,
    c: StepParam,
}

impl StepWeights {
    pub fn new(a: Monomial, b: StepParam, c: StepParam) -> Result<Self> {
        let w = StepWeights { a, b, c };
        for (name, m) in [("aq/b", w.aq_over(&w.b)), ("aq/c", w.aq_over(&w.c))] {
            if let Some(m) = m {
                if m.q_exp <= 0 {
                    return Err(Error::Divergent(format!(
                        "{name} = {m} needs a positive power of q"
                    )));
                }
            }
        }
        Ok(w)
    }

    fn aq(&self) -> Monomial {
        self.a.times(&Monomial::q_pow(1))
    }

    fn aq_over(&self, p: &StepParam) -> Option<Monomial> {
        match p {
            StepParam::Infinite => None,
            StepParam::Finite(m) => Some(self.aq().times(&m.inverse())),
        }
    }

    /// The finite parameter when exactly one of `b`, `c` is infinite.
    fn single_finite(&self) -> Option<&Monomial> {
        match (&self.b, &self.c) {
            (StepParam::Infinite, StepParam::Finite(m)) | (StepParam::Finite(m), StepParam::Infinite) => Some(m),
            _ => None,
        }
    }

    /// `(b)_k (c)_k (aq/bc)^k`, or its limit.
    pub fn weight(&self, k: i64) -> Result<QSeries> {
        let k_u = k as u64;
        match (&self.b, &self.c) {
            (StepParam::Infinite, StepParam::Infinite) => {
                Ok(self.a.pow(k_u).times(&Monomial::q_pow(k * k)).to_series())
            }
            (StepParam::Finite(b), StepParam::Finite(c)) => {
                let ratio = self.aq().times(&b.inverse()).times(&c.inverse());
                Ok((&poch_series(b, k)? * &poch_series(c, k)?).mul_monomial(&ratio.pow(k_u)))
            }
            _ => {
                // (b)_k (aq/bc)^k -> (-1)^k q^{k(k-1)/2} (aq/c)^k
                let c = self.single_finite().unwrap();
                let aq_c = self.aq().times(&c.inverse());
                let sign = Monomial::signed(if k % 2 == 0 { 1 } else { -1 }, 0, k * (k - 1) / 2);
                Ok(poch_series(c, k)?.mul_monomial(&sign.times(&aq_c.pow(k_u))))
            }
        }
    }

    /// `(aq/b)_n (aq/c)_n`, factors with an infinite parameter being `1`.
    pub fn denominator(&self, n: i64) -> Result<QSeries> {
        let mut out = QSeries::one();
        for p in [&self.b, &self.c] {
            if let Some(m) = self.aq_over(p) {
                out = &out * &poch_series(&m, n)?;
            }
        }
        Ok(out)
    }

    /// `(aq/bc)_j`, which tends to `1` when either parameter is infinite.
    pub fn tail(&self, j: i64) -> Result<QSeries> {
        match (&self.b, &self.c) {
            (StepParam::Finite(b), StepParam::Finite(c)) => {
                poch_series(&self.aq().times(&b.inverse()).times(&c.inverse()), j)
            }
            _ => Ok(QSeries::one()),
        }
    }

    /// `(aq/b)_inf (aq/c)_inf / ((aq)_inf (aq/bc)_inf)` below `q^trunc`.
    pub fn limit_prefactor(&self, trunc: i64) -> Result<QSeries> {
        use crate::algebra::{inv_qpochhammer, qpochhammer, PochLength::Infinite};
        let mut out = inv_qpochhammer(&self.aq(), Infinite, trunc)?;
        for p in [&self.b, &self.c] {
            if let Some(m) = self.aq_over(p) {
                out = &out * &qpochhammer(&m, Infinite, Some(trunc))?;
            }
        }
        if let (StepParam::Finite(b), StepParam::Finite(c)) = (&self.b, &self.c) {
            let m = self.aq().times(&b.inverse()).times(&c.inverse());
            out = &out * &inv_qpochhammer(&m, Infinite, trunc)?;
        }
        Ok(out.truncated(trunc))
    }
}

/// `num * x / den` below `trunc`, where `num` and `den` are complete and `x`
/// is produced at whatever window the quotient needs.
pub fn scaled_term<F>(num: &QSeries, den: &QSeries, x: F, trunc: i64) -> Result<QSeries>
where
    F: FnOnce(i64) -> Result<QSeries>,
{
    let Some(l_num) = num.lower() else {
        return Ok(QSeries::zero(1, trunc));
    };
    let Some(l_den) = den.min_exp() else {
        return Err(Error::NotInvertible("zero denominator".into()));
    };
    let x = x(trunc - l_num + l_den)?;
    let nx = num * &x;
    let Some(low) = nx.lower() else {
        return Ok(QSeries::zero(1, trunc));
    };
    if den.is_one_series() {
        return Ok(nx.truncated(trunc));
    }
    let window = (trunc + 2 * l_den - low).max(l_den + 1);
    let inv = den.truncated(window).invert()?;
    Ok((&nx * &inv).truncated(trunc))
}

/// The transformed pair `(alpha'_n, beta'_n)`.
pub fn bailey_step(pair: &BaileyPair, b: &StepParam, c: &StepParam) -> Result<BaileyPair> {
    let w = Arc::new(StepWeights::new(pair.a().monomial(), b.clone(), c.clone())?);
    let (wa, wb) = (w.clone(), w.clone());
    let (pa, pb) = (pair.clone(), pair.clone());
    let alpha: Arc<TermFn> = Arc::new(move |n, t| {
        scaled_term(&wa.weight(n)?, &wa.denominator(n)?, |tt| pa.alpha(n, tt), t)
    });
    let beta: Arc<TermFn> = Arc::new(move |n, t| {
        let den_n = wb.denominator(n)?;
        let mut acc = QSeries::zero(1, t);
        for k in 0..=n {
            let num = &wb.weight(k)? * &wb.tail(n - k)?;
            let den = &den_n * &poch_q(1, n - k);
            acc = &acc + &scaled_term(&num, &den, |tt| pb.beta(k, tt), t)?;
        }
        Ok(acc)
    });
    Ok(BaileyPair::new(
        format!("step({}; b={b}, c={c})", pair.label()),
        pair.a(),
        alpha,
        beta,
        pair.provenance().to_string(),
    ))
}

/// `count` successive steps with `b = c = infinity`.
pub fn iterate_infinite_steps(pair: &BaileyPair, count: u32) -> Result<BaileyPair> {
    let mut p = pair.clone();
    for _ in 0..count {
        p = bailey_step(&p, &StepParam::Infinite, &StepParam::Infinite)?;
    }
    Ok(p)
}
