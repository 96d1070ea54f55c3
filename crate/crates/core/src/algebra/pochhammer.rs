//! q-Pochhammer symbols `(a)_n = (1-a)(1-aq)...(1-aq^{n-1})` and Gaussian
//! binomial coefficients.

use std::collections::HashMap;

use super::{Monomial, QSeries, XLaurent, ZPoly};
use crate::error::{Error, Result};

/// Length of a q-Pochhammer product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PochLength {
    Finite(u64),
    Infinite,
}

/// `(a)_n` as a series in `q` (scale 1).
///
/// A finite product is computed exactly and is returned complete unless
/// `trunc` cuts into it. The infinite product needs a positive `q` exponent
/// on `a` and a truncation bound.
pub fn qpochhammer(a: &Monomial, n: PochLength, trunc: Option<i64>) -> Result<QSeries> {
    match n {
        PochLength::Finite(n) => {
            let n = n as i64;
            // Top q-degree of the full product, when every factor has q_exp >= 0.
            let top = (a.q_exp >= 0).then(|| n * a.q_exp + n * (n - 1) / 2);
            let mut s = match (trunc, top) {
                (Some(t), Some(top)) if top >= t => QSeries::one().truncated(t),
                _ => QSeries::one(),
            };
            let mut factor = a.clone();
            for _ in 0..n {
                s = s.mul_one_minus(&factor);
                factor.q_exp += 1;
            }
            Ok(match trunc {
                Some(t) if s.max_exp().is_some_and(|m| m >= t) => s.truncated(t),
                _ => s,
            })
        }
        PochLength::Infinite => {
            if a.q_exp <= 0 {
                return Err(Error::Divergent(format!(
                    "(a)_inf needs a positive q-exponent, got a = {a}"
                )));
            }
            let Some(t) = trunc else {
                return Err(Error::Incomplete(
                    "an infinite product needs a truncation bound".into(),
                ));
            };
            let mut s = QSeries::one().truncated(t);
            let mut factor = a.clone();
            while factor.q_exp < t {
                s = s.mul_one_minus(&factor);
                factor.q_exp += 1;
            }
            Ok(s)
        }
    }
}

/// `1/(a)_n` valid below `q^trunc`. Every factor must have a positive `q`
/// exponent or be invertible as a truncated series.
pub fn inv_qpochhammer(a: &Monomial, n: PochLength, trunc: i64) -> Result<QSeries> {
    let mut s = QSeries::one().truncated(trunc);
    let mut factor = a.clone();
    let mut i = 0u64;
    loop {
        match n {
            PochLength::Finite(n) if i >= n => break,
            PochLength::Infinite if factor.q_exp >= trunc => break,
            PochLength::Infinite if factor.q_exp <= 0 => {
                return Err(Error::Divergent(format!(
                    "1/(a)_inf needs a positive q-exponent, got a = {a}"
                )));
            }
            _ => {}
        }
        s = s.div_one_minus(&factor)?;
        factor.q_exp += 1;
        i += 1;
    }
    Ok(s)
}

/// `(c q^e)_n = prod_{i<n} (1 - c q^{e+i})` for an integer `c`.
pub fn q_poch_z(c: i64, e: i64, n: u64) -> ZPoly {
    let mut p = ZPoly::one();
    for i in 0..n as i64 {
        p = &p * &ZPoly::one_minus(c, e + i);
    }
    p
}

/// `(q)_n`
pub fn q_factorial(n: u64) -> ZPoly {
    q_poch_z(1, 1, n)
}

/// Gaussian binomial `[n k]_q`; zero outside `0 <= k <= n`.
pub fn qbinomial(n: i64, k: i64) -> XLaurent {
    XLaurent::from(qbinomial_z(n, k))
}

/// Gaussian binomial as an integer polynomial, built from
/// `[n k] = prod_{i=1}^{k} (1 - q^{n-k+i}) / (1 - q^i)` one exact division at
/// a time.
pub fn qbinomial_z(n: i64, k: i64) -> ZPoly {
    if n < 0 || k < 0 || k > n {
        return ZPoly::zero();
    }
    let k = k.min(n - k);
    let mut p = ZPoly::one();
    for i in 1..=k {
        p = &p * &ZPoly::one_minus(1, n - k + i);
        p = p
            .div_one_minus_q_pow(i)
            .expect("partial Gaussian binomial products are polynomials");
    }
    p
}

/// Memo table for Gaussian binomials, owned by a single computation.
#[derive(Default)]
pub struct QBinomialCache {
    table: HashMap<(i64, i64), ZPoly>,
}

impl QBinomialCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, n: i64, k: i64) -> &ZPoly {
        self.table
            .entry((n, k))
            .or_insert_with(|| qbinomial_z(n, k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pochhammer_examples() {
        let q = Monomial::q_pow(1);
        let empty = qpochhammer(&q, PochLength::Finite(0), None).unwrap();
        assert_eq!(empty, QSeries::one());
        let two = qpochhammer(&q, PochLength::Finite(2), None).unwrap();
        assert_eq!(two.to_q_laurent().unwrap(), XLaurent::from_int_terms(&[(0, 1), (1, -1), (2, -1), (3, 1)]));
        assert!(qpochhammer(&Monomial::q_pow(0), PochLength::Infinite, Some(5)).is_err());
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(qbinomial(5, 0), XLaurent::one());
        assert_eq!(qbinomial(2, 1), XLaurent::from_int_terms(&[(0, 1), (1, 1)]));
        assert_eq!(
            qbinomial(4, 2),
            XLaurent::from_int_terms(&[(0, 1), (1, 1), (2, 2), (3, 1), (4, 1)])
        );
        assert!(qbinomial(3, 4).is_zero());
        assert!(qbinomial(3, -1).is_zero());
        assert!(qbinomial(-2, 1).is_zero());
    }

    #[test]
    fn inverse_pochhammer_matches_series_invert() {
        let a = Monomial::signed(-1, 1, 1);
        let direct = inv_qpochhammer(&a, PochLength::Finite(3), 12).unwrap();
        let prod = qpochhammer(&a, PochLength::Finite(3), None).unwrap();
        assert_eq!(direct, prod.truncated(12).invert().unwrap());
    }
}
