//! Truncated formal series in `q` with `x`-Laurent coefficients.
//!
//! Exponents are stored as integers scaled by a per-series denominator: the
//! stored exponent `e` stands for `q^(e/scale)`. A series is either
//! *complete* (a finite sum, every term known) or *truncated* at `trunc`,
//! in which case the coefficients are valid strictly below `q^(trunc/scale)`
//! and nothing is known above.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::format_term;
use super::{XLaurent, ZPoly};
use crate::error::{Error, Result};

/// `coeff * x^x_exp * q^q_exp` with an integral `q` exponent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub coeff: BigRational,
    pub x_exp: i64,
    pub q_exp: i64,
}

impl Monomial {
    pub fn new(coeff: BigRational, x_exp: i64, q_exp: i64) -> Self {
        Monomial { coeff, x_exp, q_exp }
    }

    /// `sign * x^x_exp * q^q_exp` with `sign = ±1`.
    pub fn signed(sign: i64, x_exp: i64, q_exp: i64) -> Self {
        assert!(sign == 1 || sign == -1, "sign must be ±1");
        Self::new(BigRational::from_integer(sign.into()), x_exp, q_exp)
    }

    pub fn q_pow(q_exp: i64) -> Self {
        Self::signed(1, 0, q_exp)
    }

    pub fn x_pow(x_exp: i64) -> Self {
        Self::signed(1, x_exp, 0)
    }

    pub fn one() -> Self {
        Self::q_pow(0)
    }

    pub fn times(&self, other: &Monomial) -> Monomial {
        Monomial {
            coeff: &self.coeff * &other.coeff,
            x_exp: self.x_exp + other.x_exp,
            q_exp: self.q_exp + other.q_exp,
        }
    }

    pub fn inverse(&self) -> Monomial {
        assert!(!self.coeff.is_zero(), "zero monomial has no inverse");
        Monomial {
            coeff: self.coeff.recip(),
            x_exp: -self.x_exp,
            q_exp: -self.q_exp,
        }
    }

    pub fn pow(&self, n: u64) -> Monomial {
        Monomial {
            coeff: num_traits::pow(self.coeff.clone(), n as usize),
            x_exp: self.x_exp * n as i64,
            q_exp: self.q_exp * n as i64,
        }
    }

    pub fn x_part(&self) -> XLaurent {
        XLaurent::monomial(self.coeff.clone(), self.x_exp)
    }

    pub fn to_series(&self) -> QSeries {
        QSeries::monomial(self.x_part(), self.q_exp, 1)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·x^{}·q^{}", self.coeff, self.x_exp, self.q_exp)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    scale: u32,
    trunc: Option<i64>,
    terms: BTreeMap<i64, XLaurent>,
}

/// First coefficient at which two series disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesDiff {
    /// Scaled exponent.
    pub exponent: i64,
    pub scale: u32,
    pub left: XLaurent,
    pub right: XLaurent,
}

impl QSeries {
    /// The zero series, valid below `q^(trunc/scale)`.
    pub fn zero(scale: u32, trunc: i64) -> Self {
        assert!(scale >= 1);
        QSeries {
            scale,
            trunc: Some(trunc),
            terms: BTreeMap::new(),
        }
    }

    /// The exact zero.
    pub fn complete_zero(scale: u32) -> Self {
        QSeries {
            scale,
            trunc: None,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(XLaurent::one(), 0, 1)
    }

    pub fn monomial(coeff: XLaurent, e: i64, scale: u32) -> Self {
        let mut s = Self::complete_zero(scale);
        s.add_term(e, &coeff);
        s
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, XLaurent)>>(
        scale: u32,
        trunc: Option<i64>,
        terms: I,
    ) -> Self {
        let mut s = QSeries {
            scale,
            trunc,
            terms: BTreeMap::new(),
        };
        for (e, c) in terms {
            s.add_term(e, &c);
        }
        s
    }

    /// Complete series of a Laurent polynomial in `q`.
    pub fn from_zpoly(p: &ZPoly) -> Self {
        Self::from_terms(1, None, p.terms().map(|(e, c)| (e, XLaurent::from(c.clone()))))
    }

    /// Complete series of a rational Laurent polynomial in `q`.
    pub fn from_q_laurent(p: &XLaurent) -> Self {
        Self::from_terms(
            1,
            None,
            p.terms().map(|(e, c)| (e, XLaurent::constant(c.clone()))),
        )
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    /// Scaled truncation bound; `None` for a complete series.
    pub fn trunc(&self) -> Option<i64> {
        self.trunc
    }

    pub fn is_complete(&self) -> bool {
        self.trunc.is_none()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &XLaurent)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: i64) -> XLaurent {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Coefficient at the integral exponent `q^k`.
    pub fn coeff_at(&self, k: i64) -> XLaurent {
        self.coeff(k * self.scale as i64)
    }

    /// Least scaled exponent carrying a nonzero term.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest exponent at which the series may be nonzero: the least known
    /// term, or the truncation bound when nothing is known below it.
    /// `None` only for the exact zero.
    pub fn lower(&self) -> Option<i64> {
        match (self.min_exp(), self.trunc) {
            (Some(m), Some(t)) => Some(m.min(t)),
            (Some(m), None) => Some(m),
            (None, t) => t,
        }
    }

    pub(crate) fn add_term(&mut self, e: i64, c: &XLaurent) {
        if c.is_zero() || self.trunc.is_some_and(|t| e >= t) {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    /// Restricts validity to exponents below `bound` (scaled).
    pub fn truncated(&self, bound: i64) -> Self {
        let trunc = self.trunc.map_or(bound, |t| t.min(bound));
        QSeries {
            scale: self.scale,
            trunc: Some(trunc),
            terms: self
                .terms
                .range(..trunc)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Restricts validity to exponents below `q^k` for integral `k`.
    pub fn truncated_at(&self, k: i64) -> Self {
        self.truncated(k * self.scale as i64)
    }

    /// Re-expresses the series with a finer denominator.
    pub fn with_scale(&self, scale: u32) -> Self {
        assert!(
            scale.is_multiple_of(self.scale),
            "scale {scale} is not a multiple of {}",
            self.scale
        );
        let f = (scale / self.scale) as i64;
        QSeries {
            scale,
            trunc: self.trunc.map(|t| t * f),
            terms: self.terms.iter().map(|(e, c)| (e * f, c.clone())).collect(),
        }
    }

    /// Coarsest denominator that still represents every exponent and the
    /// truncation bound exactly.
    pub fn reduced_scale(&self) -> Self {
        let mut g = self.scale as i64;
        for e in self.terms.keys() {
            g = g.gcd(e);
        }
        if let Some(t) = self.trunc {
            g = g.gcd(&t);
        }
        if g <= 1 {
            return self.clone();
        }
        QSeries {
            scale: self.scale / g as u32,
            trunc: self.trunc.map(|t| t / g),
            terms: self.terms.iter().map(|(e, c)| (e / g, c.clone())).collect(),
        }
    }

    fn unify(&self, other: &Self) -> (Self, Self) {
        if self.scale == other.scale {
            return (self.clone(), other.clone());
        }
        let l = self.scale.lcm(&other.scale);
        (self.with_scale(l), other.with_scale(l))
    }

    /// True when every exponent (and the bound) is an integer power of `q`.
    pub fn is_integral(&self) -> bool {
        let s = self.scale as i64;
        self.terms.keys().all(|e| e % s == 0)
    }

    pub fn is_x_free(&self) -> bool {
        self.terms.values().all(|c| c.as_constant().is_some())
    }

    /// Exact Laurent polynomial in `q` (complete, integral, `x`-free).
    pub fn to_q_laurent(&self) -> Result<XLaurent> {
        if !self.is_complete() {
            return Err(Error::Incomplete(
                "series is truncated; its tail is unknown".into(),
            ));
        }
        if !self.is_integral() {
            return Err(Error::FractionalExponent(
                "series has non-integral exponents".into(),
            ));
        }
        let s = self.scale as i64;
        let mut out = XLaurent::zero();
        for (e, c) in self.terms() {
            let c = c.as_constant().ok_or_else(|| {
                Error::InvalidParams("series coefficients depend on x".into())
            })?;
            out.add_term(e / s, &c);
        }
        Ok(out)
    }

    pub fn map_coeffs<F: Fn(&XLaurent) -> XLaurent>(&self, f: F) -> Self {
        Self::from_terms(self.scale, self.trunc, self.terms().map(|(e, c)| (e, f(c))))
    }

    /// Substitutes `x -> -x`.
    pub fn negate_x(&self) -> Self {
        self.map_coeffs(XLaurent::negate_var)
    }

    /// Substitutes `x -> x^{-1}`.
    pub fn reflect_x(&self) -> Self {
        self.map_coeffs(XLaurent::reflect)
    }

    /// Substitutes a rational value for `x`.
    pub fn specialize_x(&self, v: &BigRational) -> Result<Self> {
        let mut out = QSeries {
            scale: self.scale,
            trunc: self.trunc,
            terms: BTreeMap::new(),
        };
        for (e, c) in self.terms() {
            out.add_term(e, &XLaurent::constant(c.eval(v)?));
        }
        Ok(out)
    }

    /// Multiplies by `q^(e/scale)`.
    pub fn shift(&self, e: i64) -> Self {
        QSeries {
            scale: self.scale,
            trunc: self.trunc.map(|t| t + e),
            terms: self.terms.iter().map(|(k, c)| (k + e, c.clone())).collect(),
        }
    }

    /// Multiplies by an integral power of `q`.
    pub fn shift_q(&self, k: i64) -> Self {
        self.shift(k * self.scale as i64)
    }

    pub fn mul_xlaurent(&self, c: &XLaurent) -> Self {
        if c.is_zero() {
            return Self::complete_zero(self.scale);
        }
        self.map_coeffs(|v| v * c)
    }

    pub fn scale_by(&self, c: &BigRational) -> Self {
        self.mul_xlaurent(&XLaurent::constant(c.clone()))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        if m.coeff.is_zero() {
            return Self::complete_zero(self.scale);
        }
        let s = self.scale as i64;
        self.mul_xlaurent(&m.x_part()).shift(m.q_exp * s)
    }

    /// `self * (1 - m)`, keeping the window.
    pub fn mul_one_minus(&self, m: &Monomial) -> Self {
        self - &self.mul_monomial(m)
    }

    /// `self / (1 - m)` for a monomial with positive `q` exponent, expanded
    /// as a geometric series inside the current window.
    pub fn div_one_minus(&self, m: &Monomial) -> Result<Self> {
        if m.q_exp <= 0 {
            let factor = QSeries::one().mul_one_minus(m);
            let window = self.trunc.ok_or_else(|| {
                Error::Incomplete("geometric expansion needs a truncation window".into())
            })?;
            return Ok(self * &factor.truncated(window).invert()?);
        }
        let Some(trunc) = self.trunc else {
            return Err(Error::Incomplete(
                "geometric expansion needs a truncation window".into(),
            ));
        };
        let step = m.q_exp * self.scale as i64;
        let mx = m.x_part();
        let mut out = QSeries {
            scale: self.scale,
            trunc: self.trunc,
            terms: BTreeMap::new(),
        };
        let mut pending: BTreeSet<i64> = self.terms.keys().copied().collect();
        while let Some(e) = pending.pop_first() {
            let mut c = self.coeff(e);
            if let Some(prev) = out.terms.get(&(e - step)) {
                c += &(prev * &mx);
            }
            if !c.is_zero() {
                out.terms.insert(e, c);
                if e + step < trunc {
                    pending.insert(e + step);
                }
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse inside the window.
    ///
    /// The lowest known term must be a single monomial `c*x^a*q^e`; the
    /// result is valid below `trunc - 2e`.
    pub fn invert(&self) -> Result<Self> {
        let Some(trunc) = self.trunc else {
            return Err(Error::Incomplete(
                "inverting a complete series needs a truncation window".into(),
            ));
        };
        let Some((&e0, c0)) = self.terms.iter().next() else {
            return Err(Error::NotInvertible(
                "series has no known nonzero term".into(),
            ));
        };
        let Some((c, a)) = c0.as_monomial() else {
            return Err(Error::NotInvertible(format!(
                "lowest coefficient {} is not a monomial unit",
                c0.display_compact("x")
            )));
        };
        let lead_inv = XLaurent::monomial(c.recip(), -a);
        let out_trunc = trunc - 2 * e0;
        let span = trunc - e0;
        let step = self
            .terms
            .keys()
            .skip(1)
            .fold(0i64, |g, e| g.gcd(&(e - e0)));
        let mut out: Vec<XLaurent> = vec![lead_inv.clone()];
        if step > 0 {
            let count = (span + step - 1) / step;
            let rest: Vec<(i64, &XLaurent)> = self
                .terms
                .iter()
                .skip(1)
                .map(|(e, c)| ((e - e0) / step, c))
                .collect();
            for k in 1..count {
                let mut acc = XLaurent::zero();
                for &(j, s) in &rest {
                    if j > k {
                        break;
                    }
                    let t = &out[(k - j) as usize];
                    if !t.is_zero() {
                        acc += &(s * t);
                    }
                }
                out.push(-(&acc * &lead_inv));
            }
        }
        let step = step.max(1);
        Ok(QSeries::from_terms(
            self.scale,
            Some(out_trunc),
            out.into_iter()
                .enumerate()
                .map(|(k, c)| (-e0 + k as i64 * step, c)),
        ))
    }

    /// First disagreement strictly below `bound` (scaled to `self`), after
    /// bringing both series to a common scale.
    pub fn first_difference(&self, other: &Self, bound: Option<i64>) -> Option<SeriesDiff> {
        let (a, b) = self.unify(other);
        let f = (a.scale / self.scale) as i64;
        let bound = bound.map(|t| t * f);
        let keys: BTreeSet<i64> = a.terms.keys().chain(b.terms.keys()).copied().collect();
        keys.into_iter()
            .take_while(|e| bound.is_none_or(|t| *e < t))
            .find_map(|e| {
                let (l, r) = (a.coeff(e), b.coeff(e));
                (l != r).then_some(SeriesDiff {
                    exponent: e,
                    scale: a.scale,
                    left: l,
                    right: r,
                })
            })
    }

    /// True for the exact constant `1`.
    pub fn is_one_series(&self) -> bool {
        self.is_complete()
            && self.terms.len() == 1
            && self.terms.get(&0).is_some_and(XLaurent::is_one)
    }

    /// Human-readable power of `q` for a scaled exponent, e.g. `q^(25/24)`.
    pub fn exponent_label(e: i64, scale: u32) -> String {
        match q_power(e, scale) {
            s if s.is_empty() => "q^0".to_string(),
            s => s,
        }
    }

    /// Common validity bound of two series, in the scale of `self`.
    pub fn common_window(&self, other: &Self) -> Option<i64> {
        let f = other.scale.lcm(&self.scale);
        let a = self.trunc.map(|t| t * (f / self.scale) as i64);
        let b = other.trunc.map(|t| t * (f / other.scale) as i64);
        let m = match (a, b) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, None) => x,
            (None, y) => y,
        };
        m.map(|t| t.div_euclid((f / self.scale) as i64))
    }
}

fn min_opt(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl Add<&QSeries> for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        let (a, b) = self.unify(rhs);
        let trunc = min_opt(a.trunc, b.trunc);
        let mut out = QSeries {
            scale: a.scale,
            trunc,
            terms: BTreeMap::new(),
        };
        for (e, c) in a.terms().chain(b.terms()) {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub<&QSeries> for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        self + &(-rhs)
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries {
            scale: self.scale,
            trunc: self.trunc,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        -&self
    }
}

impl Mul<&QSeries> for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        let (a, b) = self.unify(rhs);
        // Unknown tail of one factor meets the lowest possible term of the other.
        let from_a = a.trunc.and_then(|t| b.lower().map(|l| t + l));
        let from_b = b.trunc.and_then(|t| a.lower().map(|l| t + l));
        let trunc = min_opt(from_a, from_b);
        let mut out = QSeries {
            scale: a.scale,
            trunc,
            terms: BTreeMap::new(),
        };
        for (ea, ca) in a.terms() {
            for (eb, cb) in b.terms() {
                if trunc.is_some_and(|t| ea + eb >= t) {
                    break;
                }
                out.add_term(ea + eb, &(ca * cb));
            }
        }
        out
    }
}

impl Add for QSeries {
    type Output = QSeries;
    fn add(self, rhs: QSeries) -> QSeries {
        &self + &rhs
    }
}

impl Sub for QSeries {
    type Output = QSeries;
    fn sub(self, rhs: QSeries) -> QSeries {
        &self - &rhs
    }
}

impl Mul for QSeries {
    type Output = QSeries;
    fn mul(self, rhs: QSeries) -> QSeries {
        &self * &rhs
    }
}

/// Formats a scaled exponent as a power of `q`.
pub(crate) fn q_power(e: i64, scale: u32) -> String {
    let s = scale as i64;
    let g = e.gcd(&s);
    let (n, d) = (e / g, s / g);
    match (n, d) {
        (0, _) => String::new(),
        (1, 1) => "q".to_string(),
        (n, 1) => format!("q^{n}"),
        (n, d) => format!("q^({n}/{d})"),
    }
}

impl fmt::Display for QSeries {
    /// `1 + q + (x+2+x^-1)q^2 + ...`, ascending, without an order term.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let power = q_power(e, self.scale);
            let (negative, body) = match c.as_monomial() {
                Some((k, 0)) => {
                    let body = if power.is_empty() {
                        k.abs().to_string()
                    } else if k.abs().is_one() {
                        power.clone()
                    } else if k.is_integer() {
                        format!("{}{power}", k.abs())
                    } else {
                        format!("({}){power}", k.abs())
                    };
                    (k.is_negative(), body)
                }
                Some((k, d)) if power.is_empty() => {
                    (k.is_negative(), format_term(&k.abs(), d, "x"))
                }
                _ => (false, format!("({}){power}", c.display_compact("x"))),
            };
            let sep = match (i, negative) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            write!(f, "{sep}{body}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q_poly(low: i64, c: &[i64]) -> QSeries {
        QSeries::from_zpoly(&ZPoly::from_i64s(low, c))
    }

    #[test]
    fn geometric_inverse() {
        let s = q_poly(0, &[1, -1]).truncated(8);
        let inv = s.invert().unwrap();
        assert_eq!(inv.trunc(), Some(8));
        for k in 0..8 {
            assert_eq!(inv.coeff(k), XLaurent::one());
        }
    }

    #[test]
    fn inverse_in_x() {
        // 1/(1 - xq) = sum x^k q^k
        let s = QSeries::from_terms(
            1,
            Some(6),
            [(0, XLaurent::one()), (1, -XLaurent::var_pow(1))],
        );
        let inv = s.invert().unwrap();
        for k in 0..6 {
            assert_eq!(inv.coeff(k), XLaurent::var_pow(k));
        }
        let g = QSeries::one().truncated(6).div_one_minus(&Monomial::signed(1, 1, 1)).unwrap();
        assert_eq!(g, inv);
    }

    #[test]
    fn rejects_non_monomial_lowest_term() {
        // (1 - x) + q is not a unit.
        let s = QSeries::from_terms(
            1,
            Some(5),
            [(0, XLaurent::from_int_terms(&[(0, 1), (1, -1)])), (1, XLaurent::one())],
        );
        assert!(matches!(s.invert(), Err(Error::NotInvertible(_))));
        assert!(matches!(q_poly(0, &[1, 1]).invert(), Err(Error::Incomplete(_))));
    }

    #[test]
    fn window_propagation() {
        let a = q_poly(0, &[1, 1]).truncated(10);
        let b = q_poly(-3, &[1]);
        let prod = &a * &b;
        assert_eq!(prod.trunc(), Some(7));
        let c = q_poly(2, &[1]).truncated(4);
        assert_eq!((&a * &c).trunc(), Some(4));
        assert_eq!((&a + &c).trunc(), Some(4));
        // negative lowest exponent shrinks the window of the product
        let inv = q_poly(-1, &[1, -1]).truncated(5).invert().unwrap();
        assert_eq!(inv.trunc(), Some(7));
        assert_eq!(inv.min_exp(), Some(1));
    }

    #[test]
    fn display_matches_appendix_style() {
        let s = QSeries::from_terms(
            1,
            Some(3),
            [
                (-1, XLaurent::one()),
                (0, XLaurent::from_int(2)),
                (1, XLaurent::from_int_terms(&[(1, 1), (0, 2), (-1, 1)])),
                (2, XLaurent::from_int_terms(&[(1, 2), (0, 4), (-1, 2)])),
            ],
        );
        assert_eq!(s.to_string(), "q^-1 + 2 + (x+2+x^-1)q + (2x+4+2x^-1)q^2");
        let frac = QSeries::from_terms(24, Some(48), [(1, XLaurent::one()), (25, XLaurent::from_int(-1))]);
        assert_eq!(frac.to_string(), "q^(1/24) - q^(25/24)");
    }

    #[test]
    fn mixed_scales_add() {
        let a = QSeries::monomial(XLaurent::one(), 1, 2);
        let b = QSeries::monomial(XLaurent::one(), 1, 3);
        let s = &a + &b;
        assert_eq!(s.scale(), 6);
        assert_eq!(s.coeff(3), XLaurent::one());
        assert_eq!(s.coeff(2), XLaurent::one());
    }
}
