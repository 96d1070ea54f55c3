//! Cyclotomic (Habiro) expansion `J_N = sum_n C_n (q^{1+N})_n (q^{1-N})_n`
//! and its inverse.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::{q_factorial, q_poch_z, qbinomial_z, QSeries, XLaurent, ZPoly};
use crate::error::{Error, Result};

use super::coeffs::c_product_z;
use super::useries::u_term_factor;
use super::{CyclotomicCoeffs, KnotFamilyParams};

/// Finite Habiro sum for color `N`; only `C_0 .. C_{N-1}` contribute.
pub fn habiro_reconstruct(c: &CyclotomicCoeffs, n: u32) -> Result<XLaurent> {
    if n == 0 {
        return Err(Error::InvalidParams("color N must be positive".into()));
    }
    if c.len() < n as usize {
        return Err(Error::InvalidParams(format!(
            "color {n} needs C_0..C_{}, only {} given",
            n - 1,
            c.len()
        )));
    }
    let big_n = n as i64;
    let mut out = ZPoly::zero();
    for (k, ck) in c.values().iter().take(n as usize).enumerate() {
        let k = k as u64;
        let factor = &q_poch_z(1, 1 + big_n, k) * &q_poch_z(1, 1 - big_n, k);
        out += &(&ck.to_zpoly()? * &factor);
    }
    Ok(XLaurent::from(out))
}

/// `C_n = -q^{n+1} sum_{l=1}^{n+1} (1-q^l)(1-q^{2l}) / ((q)_{n+1-l} (q)_{n+1+l})
/// (-1)^l q^{l(l-3)/2} J_l`, assembled over `(q)_{2n+2}` and divided exactly.
pub fn habiro_inverse<F>(jones: F, n: u32) -> Result<XLaurent>
where
    F: Fn(u32) -> Result<XLaurent>,
{
    let n = n as i64;
    let mut num = ZPoly::zero();
    for l in 1..=n + 1 {
        let j = jones(l as u32)?.to_zpoly()?;
        let mut term = &(&ZPoly::one_minus(1, l) * &ZPoly::one_minus(1, 2 * l)) * &j;
        term = &term * &qbinomial_z(2 * n + 2, n + 1 - l);
        num += &term.shift(l * (l - 3) / 2).negate_if(l % 2 != 0);
    }
    let c = num
        .div_exact(&q_factorial((2 * n + 2) as u64))
        .ok_or_else(|| Error::InexactDivision(format!("inverse transform at n = {n}")))?;
    Ok(XLaurent::from((-c).shift(n + 1)))
}

/// `U_t^{(m)}(x; q)` summed over `n < N` with `x` kept symbolic, then
/// specialized at `x = -q^N`. The factor `(-xq)_n (-q/x)_n` becomes
/// `(q^{1+N})_n (q^{1-N})_n`, which vanishes for `n >= N`, so the result is
/// the whole specialized series.
pub fn u_specialized_at_minus_q_pow(p: KnotFamilyParams, n: u32) -> Result<XLaurent> {
    let big_n = n as i64;
    let mut bins = crate::algebra::QBinomialCache::new();
    let mut out = QSeries::complete_zero(1);
    let mut factor = QSeries::one();
    for k in 0..big_n {
        if k > 0 {
            factor = &factor * &u_term_factor(k, None);
        }
        let c = QSeries::from_zpoly(&c_product_z(p, k, None, &mut bins));
        out = &out + &(&c * &factor);
    }
    let minus_one = BigRational::from_integer(BigInt::from(-1));
    let mut result = XLaurent::zero();
    for (e, coeff) in out.terms() {
        for (d, c) in coeff.terms() {
            // x^d q^e -> (-1)^d q^{e + N d}
            let c = if d % 2 == 0 { c.clone() } else { c * &minus_one };
            result.add_term(e + big_n * d, &c);
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::{c_product, jones_left};

    #[test]
    fn trefoil_roundtrip() {
        let p = KnotFamilyParams::scalar(1).unwrap();
        let c = CyclotomicCoeffs::product(p, 4);
        let expect = XLaurent::from_int_terms(&[(1, 1), (3, 1), (4, -1)]);
        assert_eq!(habiro_reconstruct(&c, 2).unwrap(), expect);
        assert_eq!(habiro_inverse(|l| jones_left(p, l), 2).unwrap(), XLaurent::var_pow(2));
    }

    #[test]
    fn unknot_inverse() {
        let one = |_| Ok(XLaurent::one());
        assert!(habiro_inverse(one, 0).unwrap().is_one());
        for n in 1..5 {
            assert!(habiro_inverse(one, n).unwrap().is_zero());
        }
    }

    #[test]
    fn color_one_is_first_coefficient() {
        let p = KnotFamilyParams::new(3, 2).unwrap();
        let c = CyclotomicCoeffs::product(p, 3);
        assert_eq!(habiro_reconstruct(&c, 1).unwrap(), c_product(p, 0));
        assert!(habiro_reconstruct(&c, 4).is_err());
    }

    #[test]
    fn specialization_matches_jones() {
        let p = KnotFamilyParams::new(2, 2).unwrap();
        for n in 1..5 {
            assert_eq!(u_specialized_at_minus_q_pow(p, n).unwrap(), jones_left(p, n).unwrap());
        }
    }
}
