use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ZPoly;
use crate::error::{Error, Result};

/// Laurent polynomial in one variable with exact rational coefficients.
///
/// Used both for the `x`-coefficients of a [`QSeries`](super::QSeries) and
/// for finite Laurent polynomials in `q` (Gaussian binomials, colored Jones
/// polynomials). No stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct XLaurent {
    coeffs: BTreeMap<i64, BigRational>,
}

impl XLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(c.into()))
    }

    pub fn monomial(c: BigRational, e: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        XLaurent { coeffs }
    }

    /// The variable itself raised to `e`.
    pub fn var_pow(e: i64) -> Self {
        Self::monomial(BigRational::one(), e)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigRational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    pub fn from_int_terms(terms: &[(i64, i64)]) -> Self {
        Self::from_terms(
            terms
                .iter()
                .map(|&(e, c)| (e, BigRational::from_integer(c.into()))),
        )
    }

    pub fn add_term(&mut self, e: i64, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(One::is_one)
    }

    pub fn coeff(&self, e: i64) -> BigRational {
        self.coeffs.get(&e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigRational)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// `Some((c, e))` when this is a single nonzero term `c*v^e`.
    pub fn as_monomial(&self) -> Option<(&BigRational, i64)> {
        if self.coeffs.len() == 1 {
            self.coeffs.iter().next().map(|(e, c)| (c, *e))
        } else {
            None
        }
    }

    /// `Some(c)` if the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => self.coeffs.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        XLaurent {
            coeffs: self.coeffs.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        XLaurent {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitutes `v -> v^{-1}`.
    pub fn reflect(&self) -> Self {
        XLaurent {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Substitutes `v -> -v`.
    pub fn negate_var(&self) -> Self {
        XLaurent {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (*e, if e % 2 == 0 { c.clone() } else { -c }))
                .collect(),
        }
    }

    /// Value at a rational point. Fails for negative powers at zero.
    pub fn eval(&self, v: &BigRational) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (e, c) in self.terms() {
            if e < 0 && v.is_zero() {
                return Err(Error::InvalidParams(
                    "cannot evaluate a negative power at zero".into(),
                ));
            }
            acc += c * pow_rational(v, e);
        }
        Ok(acc)
    }

    pub fn to_zpoly(&self) -> Result<ZPoly> {
        if !self.is_integral() {
            return Err(Error::NonIntegral(format!(
                "{} has non-integer coefficients",
                self.display_in("q")
            )));
        }
        Ok(ZPoly::from_terms(
            self.terms().map(|(e, c)| (e, c.to_integer())),
        ))
    }

    /// Ascending order with spaced signs: `q + q^3 - q^4`.
    pub fn display_in<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        Formatted {
            poly: self,
            var,
            descending: false,
            compact: false,
        }
    }

    /// Descending order, no spaces: `2x+3+2x^-1`.
    pub fn display_compact<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        Formatted {
            poly: self,
            var,
            descending: true,
            compact: true,
        }
    }
}

pub(crate) fn pow_rational(v: &BigRational, e: i64) -> BigRational {
    if e >= 0 {
        num_traits::pow(v.clone(), e as usize)
    } else {
        num_traits::pow(v.recip(), (-e) as usize)
    }
}

struct Formatted<'a> {
    poly: &'a XLaurent,
    var: &'a str,
    descending: bool,
    compact: bool,
}

impl fmt::Display for Formatted<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<(i64, &BigRational)> = if self.descending {
            self.poly.terms().rev().collect()
        } else {
            self.poly.terms().collect()
        };
        for (i, (e, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            let sep = match (i, negative, self.compact) {
                (0, true, _) => "-",
                (0, false, _) => "",
                (_, true, true) => "-",
                (_, false, true) => "+",
                (_, true, false) => " - ",
                (_, false, false) => " + ",
            };
            write!(f, "{sep}{}", format_term(&c.abs(), e, self.var))?;
        }
        Ok(())
    }
}

/// Formats `c * var^e` for a positive coefficient `c`.
pub(crate) fn format_term(c: &BigRational, e: i64, var: &str) -> String {
    let power = match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    };
    if power.is_empty() {
        return c.to_string();
    }
    if c.is_one() {
        power
    } else if c.is_integer() {
        format!("{c}{power}")
    } else {
        format!("({c}){power}")
    }
}

impl fmt::Display for XLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in("x"))
    }
}

impl From<&ZPoly> for XLaurent {
    fn from(p: &ZPoly) -> Self {
        XLaurent {
            coeffs: p
                .terms()
                .map(|(e, c)| (e, BigRational::from_integer(c.clone())))
                .collect(),
        }
    }
}

impl From<ZPoly> for XLaurent {
    fn from(p: ZPoly) -> Self {
        XLaurent::from(&p)
    }
}

impl From<BigInt> for XLaurent {
    fn from(c: BigInt) -> Self {
        XLaurent::constant(BigRational::from_integer(c))
    }
}

impl AddAssign<&XLaurent> for XLaurent {
    fn add_assign(&mut self, rhs: &XLaurent) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c);
        }
    }
}

impl SubAssign<&XLaurent> for XLaurent {
    fn sub_assign(&mut self, rhs: &XLaurent) {
        for (e, c) in rhs.terms() {
            self.add_term(e, &-c);
        }
    }
}

impl Add<&XLaurent> for &XLaurent {
    type Output = XLaurent;
    fn add(self, rhs: &XLaurent) -> XLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&XLaurent> for &XLaurent {
    type Output = XLaurent;
    fn sub(self, rhs: &XLaurent) -> XLaurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for XLaurent {
    type Output = XLaurent;
    fn add(mut self, rhs: XLaurent) -> XLaurent {
        self += &rhs;
        self
    }
}

impl Sub for XLaurent {
    type Output = XLaurent;
    fn sub(mut self, rhs: XLaurent) -> XLaurent {
        self -= &rhs;
        self
    }
}

impl Neg for XLaurent {
    type Output = XLaurent;
    fn neg(self) -> XLaurent {
        XLaurent {
            coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for &XLaurent {
    type Output = XLaurent;
    fn neg(self) -> XLaurent {
        -self.clone()
    }
}

impl Mul<&XLaurent> for &XLaurent {
    type Output = XLaurent;
    fn mul(self, rhs: &XLaurent) -> XLaurent {
        let mut out = XLaurent::zero();
        for (ea, ca) in self.terms() {
            for (eb, cb) in rhs.terms() {
                out.add_term(ea + eb, &(ca * cb));
            }
        }
        out
    }
}

impl Mul for XLaurent {
    type Output = XLaurent;
    fn mul(self, rhs: XLaurent) -> XLaurent {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn canonical_zero() {
        let mut p = XLaurent::from_int_terms(&[(1, 2), (0, 1)]);
        p -= &XLaurent::from_int_terms(&[(1, 2)]);
        assert_eq!(p, XLaurent::one());
        p -= &XLaurent::one();
        assert!(p.is_zero());
        assert_eq!(p, XLaurent::default());
    }

    #[test]
    fn formatting() {
        let p = XLaurent::from_int_terms(&[(1, 2), (0, 3), (-1, 2)]);
        assert_eq!(p.display_compact("x").to_string(), "2x+3+2x^-1");
        let j = XLaurent::from_int_terms(&[(1, 1), (3, 1), (4, -1)]);
        assert_eq!(j.display_in("q").to_string(), "q + q^3 - q^4");
        let h = XLaurent::from_terms([(2, r(1, 2)), (0, r(-1, 3))]);
        assert_eq!(h.display_in("q").to_string(), "-1/3 + (1/2)q^2");
    }

    #[test]
    fn evaluation_and_substitution() {
        let p = XLaurent::from_int_terms(&[(1, 1), (0, 2), (-1, 1)]);
        assert_eq!(p.eval(&r(-1, 1)).unwrap(), r(0, 1));
        assert_eq!(p.eval(&r(2, 1)).unwrap(), r(9, 2));
        assert!(p.eval(&r(0, 1)).is_err());
        assert_eq!(p.negate_var().eval(&r(1, 1)).unwrap(), r(0, 1));
        assert_eq!(p.reflect(), p);
    }
}
