//! Exact arithmetic in cyclotomic fields `Q(ζ_M)`.
//!
//! Elements are stored as rational coefficient vectors reduced modulo the
//! `M`-th cyclotomic polynomial `Φ_M`, so equality is coefficient-wise.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{QSeries, XLaurent, ZPoly};
use crate::error::{Error, Result};

fn cache() -> &'static Mutex<HashMap<u64, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of `Φ_m`, lowest degree first.
pub(crate) fn cyclotomic_coeffs(m: u64) -> Arc<Vec<BigInt>> {
    assert!(m >= 1, "cyclotomic order must be positive");
    if let Some(c) = cache().lock().unwrap().get(&m) {
        return c.clone();
    }
    // x^m - 1 divided by Φ_d for every proper divisor d.
    let mut p = ZPoly::from_terms([(m as i64, BigInt::one()), (0, -BigInt::one())]);
    for d in 1..m {
        if m.is_multiple_of(d) {
            let phi_d = ZPoly::from_coeffs(0, cyclotomic_coeffs(d).to_vec());
            p = p
                .div_exact(&phi_d)
                .expect("Φ_d divides x^m - 1 for d | m");
        }
    }
    let coeffs: Vec<BigInt> = (0..=p.high_degree().unwrap()).map(|e| p.coeff(e)).collect();
    let coeffs = Arc::new(coeffs);
    cache().lock().unwrap().insert(m, coeffs.clone());
    coeffs
}

/// The `m`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(m: u64) -> XLaurent {
    XLaurent::from(ZPoly::from_coeffs(0, cyclotomic_coeffs(m).to_vec()))
}

pub fn euler_phi(m: u64) -> u64 {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Element of `Q(ζ_order)` as a polynomial in `ζ` of degree `< φ(order)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycloNum {
    order: u64,
    coeffs: Vec<BigRational>,
}

impl CycloNum {
    pub fn zero(order: u64) -> Self {
        CycloNum {
            order,
            coeffs: vec![BigRational::zero(); euler_phi(order) as usize],
        }
    }

    pub fn from_rational(order: u64, c: BigRational) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = c;
        z
    }

    pub fn from_int(order: u64, c: i64) -> Self {
        Self::from_rational(order, BigRational::from_integer(c.into()))
    }

    pub fn one(order: u64) -> Self {
        Self::from_int(order, 1)
    }

    /// `ζ_order^k` for any integer `k`.
    pub fn zeta_pow(order: u64, k: i64) -> Self {
        let mut dense = vec![BigRational::zero(); order as usize];
        dense[k.rem_euclid(order as i64) as usize] = BigRational::one();
        Self::reduce(order, dense)
    }

    /// Element with the given coefficient of `ζ^i` for `i < order` (the image
    /// of a residue vector of `Q[x]/(x^order - 1)`).
    pub fn from_residues(order: u64, residues: &[BigInt]) -> Self {
        assert_eq!(residues.len(), order as usize);
        Self::reduce(
            order,
            residues
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Element `sum_i dense[i] ζ^i`; any length, exponents taken mod `order`.
    pub fn from_dense(order: u64, dense: Vec<BigRational>) -> Self {
        Self::reduce(order, dense)
    }

    /// Reduces a dense vector (index = exponent, any length) modulo
    /// `x^order - 1` and then modulo `Φ_order`.
    fn reduce(order: u64, dense: Vec<BigRational>) -> Self {
        let m = order as usize;
        let mut folded = vec![BigRational::zero(); m.max(1)];
        for (i, c) in dense.into_iter().enumerate() {
            if !c.is_zero() {
                folded[i % m] += c;
            }
        }
        let phi = cyclotomic_coeffs(order);
        let deg = phi.len() - 1;
        for i in (deg..folded.len()).rev() {
            if folded[i].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut folded[i]);
            for (j, p) in phi.iter().enumerate().take(deg) {
                if !p.is_zero() {
                    folded[i - deg + j] -= &c * BigRational::from_integer(p.clone());
                }
            }
        }
        folded.truncate(deg);
        CycloNum {
            order,
            coeffs: folded,
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The value, when it lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeffs[0].clone())
    }

    /// Image under `ζ_order -> ζ_new^{new/order}`; requires `order | new`.
    pub fn embed(&self, new_order: u64) -> Result<Self> {
        if !new_order.is_multiple_of(self.order) {
            return Err(Error::InvalidParams(format!(
                "cannot embed Q(ζ_{}) into Q(ζ_{new_order})",
                self.order
            )));
        }
        let f = (new_order / self.order) as usize;
        let mut dense = vec![BigRational::zero(); new_order as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            dense[(i * f) % new_order as usize] += c;
        }
        Ok(Self::reduce(new_order, dense))
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in `Q[x]`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotInvertible("zero has no inverse".into()));
        }
        let phi: Vec<BigRational> = cyclotomic_coeffs(self.order)
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        // Invariant: s_i * a ≡ r_i (mod Φ).
        let (mut r0, mut r1) = (phi, trim(self.coeffs.clone()));
        let (mut s0, mut s1) = (vec![], vec![BigRational::one()]);
        while r1.len() > 1 {
            let (quot, rem) = poly_divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&quot, &s1));
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r1 is a nonzero constant since Φ is irreducible.
        let c = r1[0].recip();
        let s: Vec<BigRational> = s1.into_iter().map(|v| v * &c).collect();
        Ok(Self::reduce(self.order, s))
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(
            self.order, other.order,
            "mixing cyclotomic fields of different order"
        );
    }
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = trim(a.to_vec());
    let b = trim(b.to_vec());
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let lead = b.last().unwrap().clone();
    let mut quot = vec![BigRational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() / &lead;
        for (j, y) in b.iter().enumerate() {
            rem[shift + j] -= &c * y;
        }
        quot[shift] = c;
        rem = trim(rem);
    }
    (trim(quot), rem)
}

impl Add<&CycloNum> for &CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: &CycloNum) -> CycloNum {
        self.check_order(rhs);
        CycloNum {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&CycloNum> for &CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: &CycloNum) -> CycloNum {
        self.check_order(rhs);
        CycloNum {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<&CycloNum> for &CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &CycloNum) -> CycloNum {
        self.check_order(rhs);
        CycloNum::reduce_product(self.order, poly_mul(&self.coeffs, &rhs.coeffs))
    }
}

impl CycloNum {
    fn reduce_product(order: u64, dense: Vec<BigRational>) -> CycloNum {
        // A product of reduced elements has degree < 2φ, so folding modulo
        // x^order - 1 first is harmless.
        CycloNum::reduce(order, dense)
    }

    pub fn scale(&self, c: &BigRational) -> CycloNum {
        CycloNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|v| v * c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for CycloNum {
            type Output = CycloNum;
            fn $m(self, rhs: CycloNum) -> CycloNum { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for CycloNum {
    /// Rational values print as plain numbers; others as a polynomial in
    /// `zeta_M`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sep = match (first, c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            first = false;
            let a = c.abs();
            let z = match i {
                0 => String::new(),
                1 => format!("zeta_{}", self.order),
                _ => format!("zeta_{}^{i}", self.order),
            };
            match (z.is_empty(), a.is_one()) {
                (true, _) => write!(f, "{sep}{a}")?,
                (false, true) => write!(f, "{sep}{z}")?,
                (false, false) => write!(f, "{sep}{a}*{z}")?,
            }
        }
        Ok(())
    }
}

/// Substitutes `q := ζ_order^k` into a Laurent polynomial.
pub fn cyclo_eval(p: &XLaurent, order: u64, k: i64) -> CycloNum {
    let m = order as i64;
    let mut dense = vec![BigRational::zero(); order as usize];
    for (e, c) in p.terms() {
        dense[(e * k).rem_euclid(m) as usize] += c;
    }
    CycloNum::reduce(order, dense)
}

/// Same as [`cyclo_eval`] for an integer polynomial.
pub fn cyclo_eval_z(p: &ZPoly, order: u64, k: i64) -> CycloNum {
    CycloNum::from_residues(order, &p.residues(order, k))
}

/// Substitutes `q := ζ_order^k` into a complete, integral, `x`-free series.
/// Truncated series are rejected because their unknown tail would be
/// silently dropped.
pub fn cyclo_eval_series(s: &QSeries, order: u64, k: i64) -> Result<CycloNum> {
    Ok(cyclo_eval(&s.to_q_laurent()?, order, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), XLaurent::from_int_terms(&[(1, 1), (0, -1)]));
        assert_eq!(cyclotomic_polynomial(4), XLaurent::from_int_terms(&[(2, 1), (0, 1)]));
        assert_eq!(
            cyclotomic_polynomial(6),
            XLaurent::from_int_terms(&[(2, 1), (1, -1), (0, 1)])
        );
        for m in 1..60 {
            assert_eq!(cyclotomic_coeffs(m).len() as u64 - 1, euler_phi(m));
        }
    }

    #[test]
    fn evaluation_examples() {
        let one_plus_q = XLaurent::from_int_terms(&[(0, 1), (1, 1)]);
        assert!(cyclo_eval(&one_plus_q, 2, 1).is_zero());
        let q2 = XLaurent::var_pow(2);
        assert_eq!(cyclo_eval(&q2, 4, 1), CycloNum::from_int(4, -1));
        let full = XLaurent::from_int_terms(&[(0, 1), (1, 1), (2, 1)]);
        assert!(cyclo_eval(&full, 3, 1).is_zero());
    }

    #[test]
    fn inverse_and_embedding() {
        let z = CycloNum::zeta_pow(12, 1);
        let a = &CycloNum::one(12) + &z;
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, CycloNum::one(12));
        assert_eq!(CycloNum::zeta_pow(6, 1).embed(12).unwrap(), CycloNum::zeta_pow(12, 2));
        assert_eq!(CycloNum::zeta_pow(5, 5), CycloNum::one(5));
        assert_eq!(CycloNum::zeta_pow(5, -1), CycloNum::zeta_pow(5, 4));
        assert!(CycloNum::zero(7).inverse().is_err());
    }
}
