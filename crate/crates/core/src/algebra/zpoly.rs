//! Dense Laurent polynomials in `q` with integer coefficients.
//!
//! This is the workhorse for every finite object in the crate (Gaussian
//! binomials, colored Jones polynomials, cyclotomic coefficients). The public
//! API reports results as [`XLaurent`](super::XLaurent); `ZPoly` is what the
//! inner loops run on.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// `coeffs[i]` is the coefficient of `q^(low + i)`. Both ends are trimmed, so
/// the zero polynomial is an empty vector with `low == 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ZPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn monomial(c: BigInt, e: i64) -> Self {
        Self::from_coeffs(e, vec![c])
    }

    /// `q^e`
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(BigInt::one(), e)
    }

    /// `1 - c*q^e` for a small integer `c`.
    pub fn one_minus(c: i64, e: i64) -> Self {
        let mut p = Self::one();
        p -= &Self::monomial(BigInt::from(c), e);
        p
    }

    pub fn from_coeffs(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = ZPoly { low, coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(low: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(low, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I) -> Self {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_coeffs(lo, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn low_degree(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn high_degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        if e < self.low {
            return BigInt::zero();
        }
        self.coeffs
            .get((e - self.low) as usize)
            .cloned()
            .unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms().count()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        let mut p = self.clone();
        p.shift_in_place(k);
        p
    }

    pub fn shift_in_place(&mut self, k: i64) {
        if !self.is_zero() {
            self.low += k;
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ZPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn negate_if(self, flip: bool) -> Self {
        if flip {
            -self
        } else {
            self
        }
    }

    /// Substitutes `q -> q^{-1}`.
    pub fn reflect(&self) -> Self {
        match self.high_degree() {
            None => Self::zero(),
            Some(hi) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                ZPoly { low: -hi, coeffs }
            }
        }
    }

    /// Drops every term with exponent `>= bound`.
    pub fn truncate(&self, bound: i64) -> Self {
        if self.is_zero() || bound <= self.low {
            return Self::zero();
        }
        let keep = ((bound - self.low) as usize).min(self.coeffs.len());
        Self::from_coeffs(self.low, self.coeffs[..keep].to_vec())
    }

    /// Product restricted to exponents `< bound`.
    pub fn mul_truncated(&self, other: &Self, bound: i64) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let low = self.low + other.low;
        if low >= bound {
            return Self::zero();
        }
        let full = self.coeffs.len() + other.coeffs.len() - 1;
        let len = ((bound - low) as usize).min(full);
        let mut out = vec![BigInt::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len || a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(low, out)
    }

    /// Exact division by `(1 - q^k)`, `k >= 1`. Returns `None` when the
    /// division leaves a remainder.
    pub fn div_one_minus_q_pow(&self, k: i64) -> Option<Self> {
        assert!(k >= 1);
        if self.is_zero() {
            return Some(Self::zero());
        }
        let k = k as usize;
        let n = self.coeffs.len();
        if n < k {
            return None;
        }
        // c_i = p_i + c_{i-k}, for i < n - k; the top k coefficients of p
        // must then equal -c_{i-k}.
        let qlen = n - k;
        let mut out: Vec<BigInt> = Vec::with_capacity(qlen);
        for i in 0..qlen {
            let mut c = self.coeffs[i].clone();
            if i >= k {
                c += &out[i - k];
            }
            out.push(c);
        }
        for i in qlen..n {
            let expected = if i >= k { -&out[i - k] } else { BigInt::zero() };
            if self.coeffs[i] != expected {
                return None;
            }
        }
        Some(Self::from_coeffs(self.low, out))
    }

    /// Exact division by an arbitrary nonzero Laurent polynomial.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let n = self.coeffs.len();
        let m = divisor.coeffs.len();
        if n < m {
            return None;
        }
        let lead = divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - m + 1];
        for i in (0..=n - m).rev() {
            let top = &rem[i + m - 1];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(self.low - divisor.low, quot))
    }

    /// Image in `Z[q]/(q^modulus - 1)` after substituting `q -> q^k`.
    pub fn residues(&self, modulus: u64, k: i64) -> Vec<BigInt> {
        let m = modulus as i64;
        let mut out = vec![BigInt::zero(); modulus as usize];
        for (e, c) in self.terms() {
            let idx = (e * k).rem_euclid(m) as usize;
            out[idx] += c;
        }
        out
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::XLaurent::from(self).display_in("q"))
    }
}

impl AddAssign<&ZPoly> for ZPoly {
    fn add_assign(&mut self, rhs: &ZPoly) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        let lo = self.low.min(rhs.low);
        let hi = self.high_degree().unwrap().max(rhs.high_degree().unwrap());
        if lo < self.low {
            let pad = (self.low - lo) as usize;
            self.coeffs
                .splice(0..0, std::iter::repeat_with(BigInt::zero).take(pad));
            self.low = lo;
        }
        let len = (hi - lo + 1) as usize;
        if self.coeffs.len() < len {
            self.coeffs.resize(len, BigInt::zero());
        }
        let off = (rhs.low - lo) as usize;
        for (i, c) in rhs.coeffs.iter().enumerate() {
            self.coeffs[off + i] += c;
        }
        self.trim();
    }
}

impl SubAssign<&ZPoly> for ZPoly {
    fn sub_assign(&mut self, rhs: &ZPoly) {
        *self += &(-rhs.clone());
    }
}

impl Add<&ZPoly> for &ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: &ZPoly) -> ZPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&ZPoly> for &ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: &ZPoly) -> ZPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for ZPoly {
    type Output = ZPoly;
    fn add(mut self, rhs: ZPoly) -> ZPoly {
        self += &rhs;
        self
    }
}

impl Sub for ZPoly {
    type Output = ZPoly;
    fn sub(mut self, rhs: ZPoly) -> ZPoly {
        self -= &rhs;
        self
    }
}

impl Neg for ZPoly {
    type Output = ZPoly;
    fn neg(mut self) -> ZPoly {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Mul<&ZPoly> for &ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: &ZPoly) -> ZPoly {
        if self.is_zero() || rhs.is_zero() {
            return ZPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        ZPoly::from_coeffs(self.low + rhs.low, out)
    }
}

impl Mul for ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: ZPoly) -> ZPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for ZPoly {
    fn sum<I: Iterator<Item = ZPoly>>(iter: I) -> ZPoly {
        let mut acc = ZPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_and_compares() {
        let p = ZPoly::from_i64s(-2, &[0, 0, 1, 0, 3, 0]);
        assert_eq!(p.low_degree(), Some(0));
        assert_eq!(p.high_degree(), Some(2));
        assert_eq!(p, ZPoly::from_i64s(0, &[1, 0, 3]));
        assert!(ZPoly::from_i64s(5, &[0, 0]).is_zero());
    }

    #[test]
    fn exact_division() {
        let a = ZPoly::from_i64s(-1, &[1, 1]);
        let b = ZPoly::from_i64s(0, &[1, -1, 2]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(prod.div_exact(&a), Some(b));
        assert_eq!(ZPoly::from_i64s(0, &[1, 1]).div_exact(&ZPoly::from_i64s(0, &[1, 2])), None);
        let c = ZPoly::from_i64s(3, &[2, 0, 5, 1]);
        let d = &c * &ZPoly::one_minus(1, 4);
        assert_eq!(d.div_one_minus_q_pow(4), Some(c));
        assert_eq!(ZPoly::from_i64s(0, &[1, 1]).div_one_minus_q_pow(1), None);
    }

    #[test]
    fn reflect_is_involution() {
        let p = ZPoly::from_i64s(-3, &[1, 2, 0, -4]);
        assert_eq!(p.reflect().low_degree(), Some(0));
        assert_eq!(p.reflect().reflect(), p);
    }

    #[test]
    fn truncated_product_matches_full() {
        let a = ZPoly::from_i64s(0, &[1, -1, 1, 1]);
        let b = ZPoly::from_i64s(1, &[2, 3, -1]);
        assert_eq!(a.mul_truncated(&b, 3), (&a * &b).truncate(3));
    }
}
