//! Cyclotomic coefficients `C_n^{(t,m)}` of the colored Jones polynomials
//! `J_N^{(t,m)}`, in the product (Gaussian binomial) form and in the
//! `(2t-1)`-fold multisum form.

use crate::algebra::{q_factorial, QBinomialCache, XLaurent, ZPoly};
use crate::error::{Error, Result};

use super::chain::{chain_multinomial, ChainNode};
use super::KnotFamilyParams;

/// `C_n^{(t,m)}` from the product form
/// `q^{n+1-t} sum_{n+1 = k_t >= ... >= k_1 >= 0, k_m >= 1} prod_a q^{k_a^2} [top_a, k_{a+1}-k_a]`
/// with `top_a = k_{a+1} - k_a - a + sum_{j<=a} (2 k_j + [m > j])`.
pub fn c_product(p: KnotFamilyParams, n: u32) -> XLaurent {
    XLaurent::from(c_product_z(p, n as i64, None, &mut QBinomialCache::new()))
}

/// Product form as an integer polynomial, optionally dropping every power of
/// `q` at or above `bound`.
pub(crate) fn c_product_z(
    p: KnotFamilyParams,
    n: i64,
    bound: Option<i64>,
    bins: &mut QBinomialCache,
) -> ZPoly {
    let t = p.ti();
    let base = n + 1 - t;
    if bound.is_some_and(|b| base >= b) {
        return ZPoly::zero();
    }
    let mut ks = vec![0i64; t as usize + 1];
    ks[t as usize] = n + 1;
    let mut out = ZPoly::zero();
    enumerate_product(p, &mut ks, 1, 0, base, bound, bins, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn enumerate_product(
    p: KnotFamilyParams,
    ks: &mut Vec<i64>,
    a: usize,
    squares: i64,
    base: i64,
    bound: Option<i64>,
    bins: &mut QBinomialCache,
    out: &mut ZPoly,
) {
    let t = p.t() as usize;
    let m = p.m() as usize;
    if a == t {
        if m < t && ks[m] < 1 {
            return;
        }
        let shift = base + squares;
        if bound.is_some_and(|b| shift >= b) {
            return;
        }
        let mut term = ZPoly::q_pow(shift);
        let mut prefix = 0i64;
        for i in 1..t {
            prefix += 2 * ks[i] + i64::from(m > i);
            let bottom = ks[i + 1] - ks[i];
            let top = bottom - i as i64 + prefix;
            let b = bins.get(top, bottom);
            term = match bound {
                Some(bd) => term.mul_truncated(b, bd),
                None => &term * b,
            };
            if term.is_zero() {
                return;
            }
        }
        *out += &term;
        return;
    }
    let lo = if a == 1 { 0 } else { ks[a - 1] };
    let hi = ks[t];
    for k in lo..=hi {
        // Every later k_a is at least k, so the q-exponent can only grow.
        let remaining = (t - a) as i64 * k * k;
        if bound.is_some_and(|b| base + squares + remaining >= b) {
            break;
        }
        ks[a] = k;
        enumerate_product(p, ks, a + 1, squares + k * k, base, bound, bins, out);
    }
}

/// `C_n^{(t,m)}` from the multisum for `-q^{t-n-1} C_n` over
/// `n+1 >= n_{2t-1} >= ... >= n_1 >= 0`.
///
/// The sum is assembled over the common denominator `(q)_{n+1}` and divided
/// once at the end; a remainder means the coefficients are not Laurent
/// polynomials and is reported as an error.
pub fn c_multisum(p: KnotFamilyParams, n: u32) -> Result<XLaurent> {
    c_multisum_z(p, n as i64, &mut QBinomialCache::new()).map(XLaurent::from)
}

pub(crate) fn c_multisum_z(p: KnotFamilyParams, n: i64, bins: &mut QBinomialCache) -> Result<ZPoly> {
    let top = n + 1;
    let (plain, shifted, cross) = multisum_chain(p);
    let a = chain_multinomial(top, &plain, &cross, bins);
    let b = chain_multinomial(top, &shifted, &cross, bins);
    let numerator = a - b;
    let sum = numerator.div_exact(&q_factorial(top as u64)).ok_or_else(|| {
        Error::InexactDivision(format!(
            "multisum for C_{n} ({p}) is not divisible by (q)_{top}"
        ))
    })?;
    Ok((-sum).shift(top - p.ti()))
}

/// Node weights for the two halves of `(1 - q^{n_t - [t > m] n_{t-m}})`, and
/// the cross couplings `-n_i n_{i+1}` for `i < t`.
pub(crate) fn multisum_chain(p: KnotFamilyParams) -> (Vec<ChainNode>, Vec<ChainNode>, Vec<i64>) {
    let (t, m) = (p.ti(), p.mi());
    let len = (2 * t - 1) as usize;
    let mut nodes = vec![ChainNode::default(); len];
    for i in 1..t {
        if i < t - m {
            nodes[(i - 1) as usize] = ChainNode::linear(-1);
        }
    }
    nodes[(t - 1) as usize] = ChainNode::new(1, -1, true);
    for i in t + 1..=2 * t - 1 {
        nodes[(i - 1) as usize] = ChainNode::square();
    }
    let mut shifted = nodes.clone();
    shifted[(t - 1) as usize] = shifted[(t - 1) as usize].with_linear(1);
    if t > m {
        let j = (t - m - 1) as usize;
        shifted[j] = shifted[j].with_linear(-1);
    }
    let cross = (1..=2 * t - 1).map(|i| if i < t { -1 } else { 0 }).collect();
    (nodes, shifted, cross)
}

/// The sequence `C_0, C_1, ...` for one family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicCoeffs {
    params: KnotFamilyParams,
    values: Vec<XLaurent>,
}

impl CyclotomicCoeffs {
    pub fn new(params: KnotFamilyParams, values: Vec<XLaurent>) -> Self {
        CyclotomicCoeffs { params, values }
    }

    /// `C_0 .. C_{count-1}` from the product form.
    pub fn product(params: KnotFamilyParams, count: u32) -> Self {
        let mut bins = QBinomialCache::new();
        let values = (0..count as i64)
            .map(|n| XLaurent::from(c_product_z(params, n, None, &mut bins)))
            .collect();
        CyclotomicCoeffs { params, values }
    }

    /// `C_0 .. C_{count-1}` from the multisum form.
    pub fn multisum(params: KnotFamilyParams, count: u32) -> Result<Self> {
        let mut bins = QBinomialCache::new();
        let values = (0..count as i64)
            .map(|n| c_multisum_z(params, n, &mut bins).map(XLaurent::from))
            .collect::<Result<_>>()?;
        Ok(CyclotomicCoeffs { params, values })
    }

    pub fn params(&self) -> KnotFamilyParams {
        self.params
    }

    pub fn values(&self) -> &[XLaurent] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, n: usize) -> Option<&XLaurent> {
        self.values.get(n)
    }

    /// True when every entry has integer coefficients.
    pub fn all_integral(&self) -> bool {
        self.values.iter().all(XLaurent::is_integral)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(t: u32, m: u32) -> KnotFamilyParams {
        KnotFamilyParams::new(t, m).unwrap()
    }

    #[test]
    fn trefoil_coefficients_are_powers() {
        for n in 0..6 {
            assert_eq!(c_product(fam(1, 1), n), XLaurent::var_pow(n as i64));
            assert_eq!(c_multisum(fam(1, 1), n).unwrap(), XLaurent::var_pow(n as i64));
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(c_product(fam(2, 1), 0), XLaurent::one());
        let expect = XLaurent::from_int_terms(&[(1, 1), (2, 1), (4, 1)]);
        assert_eq!(c_product(fam(2, 1), 1), expect);
        assert_eq!(c_multisum(fam(2, 1), 1).unwrap(), expect);
    }

    #[test]
    fn forms_agree_for_small_families() {
        for p in KnotFamilyParams::all_up_to(3) {
            for n in 0..5 {
                assert_eq!(c_product(p, n), c_multisum(p, n).unwrap(), "{p}, n = {n}");
            }
        }
    }

    #[test]
    fn truncated_product_is_a_prefix() {
        let mut bins = QBinomialCache::new();
        let p = fam(3, 2);
        for n in 0..6 {
            let full = c_product_z(p, n, None, &mut bins);
            assert_eq!(c_product_z(p, n, Some(12), &mut bins), full.truncate(12));
        }
    }
}
