//! Colored Jones polynomials of torus knots.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::algebra::{q_poch_z, QBinomialCache, XLaurent, ZPoly};
use crate::error::{Error, Result};

use super::KnotFamilyParams;

/// Substitutes `q -> q^{-1}`; the colored Jones polynomial of the mirror knot.
pub fn mirror(j: &XLaurent) -> XLaurent {
    j.reflect()
}

/// Divides a polynomial in `Q = q^{1/scale}` by `scale` in every exponent,
/// failing if any exponent is fractional.
fn descale(p: &ZPoly, scale: i64, what: &str) -> Result<ZPoly> {
    let mut out = Vec::new();
    for (e, c) in p.terms() {
        if e % scale != 0 {
            return Err(Error::FractionalExponent(format!(
                "{what}: exponent {e}/{scale} survives"
            )));
        }
        out.push((e / scale, c.clone()));
    }
    Ok(ZPoly::from_terms(out))
}

/// `J_N(T(s,t); q)` by the closed torus-knot formula, evaluated in
/// quarter-integer exponents and divided exactly by `q^{N/2} - q^{-N/2}`.
pub fn jones_morton(s: u32, t: u32, n: u32) -> Result<XLaurent> {
    if s == 0 || t == 0 || n == 0 || s.gcd(&t) != 1 {
        return Err(Error::InvalidParams(format!(
            "need coprime positive s, t and N >= 1, got s = {s}, t = {t}, N = {n}"
        )));
    }
    let (s, t, n) = (s as i64, t as i64, n as i64);
    let st = s * t;
    let pre = st * (1 - n * n);
    // j = J/2 with J = -(N-1), -(N-3), ..., N-1; exponents scaled by 4.
    let mut num = ZPoly::zero();
    for jj in (-(n - 1)..=n - 1).step_by(2) {
        num += &ZPoly::monomial(BigInt::from(1), pre + st * jj * jj - 2 * (s + t) * jj + 2);
        num -= &ZPoly::monomial(BigInt::from(1), pre + st * jj * jj - 2 * (s - t) * jj - 2);
    }
    // 1/(Q^{2N} - Q^{-2N}) = -Q^{2N} / (1 - Q^{4N})
    let quotient = num.div_one_minus_q_pow(4 * n).ok_or_else(|| {
        Error::InexactDivision(format!("Morton sum for T({s},{t}), N = {n}"))
    })?;
    let scaled = (-quotient).shift(2 * n);
    Ok(XLaurent::from(descale(&scaled, 4, "Morton formula")?))
}

/// `J_N(T(2,2t+1); q)` from the terminating q-hypergeometric sum over
/// `N-1 >= k_t >= ... >= k_1 >= 0`.
pub fn jones_hyper(t: u32, n: u32) -> Result<XLaurent> {
    if t == 0 || n == 0 {
        return Err(Error::InvalidParams(format!("need t, N >= 1, got t = {t}, N = {n}")));
    }
    let (t, n) = (t as i64, n as i64);
    let mut bins = QBinomialCache::new();
    let mut out = ZPoly::zero();
    for kt in 0..n {
        let head = q_poch_z(1, 1 - n, kt as u64).shift(-n * kt);
        out += &hyper_inner(&head, t - 1, kt, n, &mut bins);
    }
    Ok(XLaurent::from(out.shift(t * (1 - n))))
}

/// Sums `prod_{i<=level} q^{k_i(k_i+1-2N)} [k_{i+1} k_i]` over `k_level <= upper`.
fn hyper_inner(acc: &ZPoly, level: i64, upper: i64, n: i64, bins: &mut QBinomialCache) -> ZPoly {
    if level == 0 {
        return acc.clone();
    }
    let mut out = ZPoly::zero();
    for k in 0..=upper {
        let term = (acc * bins.get(upper, k)).shift(k * (k + 1 - 2 * n));
        out += &hyper_inner(&term, level - 1, k, n, bins);
    }
    out
}

/// `J_N^{(t,m)}(q)` from
/// `(1-q^N) J = (-1)^N q^{-t+N/2+(2t+1)N^2/2} sum_{k=-N}^{N-1} (-1)^k q^{-(2t+1)k(k+1)/2+mk}`.
/// For `m = 1` this is the left-handed torus knot `T(2,2t+1)*`.
pub fn jones_left(p: KnotFamilyParams, n: u32) -> Result<XLaurent> {
    if n == 0 {
        return Err(Error::InvalidParams("color N must be positive".into()));
    }
    let (t, m, n) = (p.ti(), p.mi(), n as i64);
    let odd = p.odd();
    // Exponents doubled.
    let pre = -2 * t + n + odd * n * n;
    let mut num = ZPoly::zero();
    for k in -n..n {
        let sign = if (n + k) % 2 == 0 { 1 } else { -1 };
        num += &ZPoly::monomial(BigInt::from(sign), pre - odd * k * (k + 1) + 2 * m * k);
    }
    let num = descale(&num, 2, "left-handed Jones numerator")?;
    let j = num
        .div_one_minus_q_pow(n)
        .ok_or_else(|| Error::InexactDivision(format!("(1-q^{n}) does not divide J ({p})")))?;
    Ok(XLaurent::from(j))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_values() {
        let right = XLaurent::from_int_terms(&[(-1, 1), (-3, 1), (-4, -1)]);
        assert_eq!(jones_morton(2, 3, 2).unwrap(), right);
        assert_eq!(jones_hyper(1, 2).unwrap(), right);
        let left = XLaurent::from_int_terms(&[(1, 1), (3, 1), (4, -1)]);
        assert_eq!(jones_left(KnotFamilyParams::scalar(1).unwrap(), 2).unwrap(), left);
        assert_eq!(mirror(&right), left);
    }

    #[test]
    fn color_one_is_one() {
        assert!(jones_morton(2, 3, 1).unwrap().is_one());
        assert!(jones_hyper(1, 1).unwrap().is_one());
        for t in 1..4 {
            assert!(jones_left(KnotFamilyParams::scalar(t).unwrap(), 1).unwrap().is_one());
        }
        // Other components start at C_0.
        let p = KnotFamilyParams::new(2, 2).unwrap();
        assert_eq!(jones_left(p, 1).unwrap(), crate::knot::c_product(p, 0));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(jones_morton(2, 4, 3).is_err());
        assert!(jones_hyper(0, 3).is_err());
    }
}
