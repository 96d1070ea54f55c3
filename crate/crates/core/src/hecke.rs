//! Hecke-type (indefinite theta) expansions of `U_t^{(m)}(-x; q)`.
//!
//! Only the geometric-expanded form with the extra summation index `u` is
//! implemented; the form with denominators `1 - x q^{(r+s+1)/2}` is the same
//! series before expanding those denominators.
//!
//! Exponents are kept scaled by 8. Each summand is monotone in every index on
//! both regions (after `r -> -r-1`, `s -> -s-1`, `u -> -u-1` on the negative
//! one), so a region is enumerated by walking each index up from its
//! smallest magnitude until the exponent leaves the window.

use crate::algebra::{inv_qpochhammer, qpochhammer, Monomial, PochLength, QSeries, XLaurent};
use crate::error::Result;
use crate::knot::KnotFamilyParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Region {
    NonNegative,
    Negative,
}

/// One summand `sign * x^{x_power} * q^{exponent/8}` of the triple sum,
/// prefactor power of `q` included.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HeckeRegionTerm {
    pub r: i64,
    pub s: i64,
    pub u: i64,
    pub region: Region,
    pub exponent: i64,
    pub x_power: i64,
    pub sign: i64,
}

/// `8 * (r^2/8 + (4t+3)rs/4 + s^2/8 + (1+m+t)r/2 + (1-m+t)s/2 + u(r+s+1)/2)`.
pub fn hecke_exponent8(p: KnotFamilyParams, r: i64, s: i64, u: i64) -> i64 {
    let (t, m) = (p.ti(), p.mi());
    r * r + 2 * (4 * t + 3) * r * s + s * s + 4 * (1 + m + t) * r + 4 * (1 - m + t) * s
        + 4 * u * (r + s + 1)
}

/// `8 * (-t/2 - m/2 + 3/8)`
fn prefactor8(p: KnotFamilyParams) -> i64 {
    -4 * p.ti() - 4 * p.mi() + 3
}

/// Walks nonnegative index tuples in lexicographic order, cutting each index
/// as soon as the exponent (with all later indices at zero) reaches `bound`.
/// Returns the largest value visited per index.
fn walk_monotone<F, V>(dims: usize, bound: i64, exponent: &F, visit: &mut V) -> Vec<i64>
where
    F: Fn(&[i64]) -> i64,
    V: FnMut(&[i64], i64),
{
    fn rec<F, V>(idx: &mut Vec<i64>, d: usize, bound: i64, f: &F, visit: &mut V, caps: &mut [i64])
    where
        F: Fn(&[i64]) -> i64,
        V: FnMut(&[i64], i64),
    {
        let dims = idx.len();
        for v in 0.. {
            idx[d] = v;
            for slot in idx.iter_mut().skip(d + 1) {
                *slot = 0;
            }
            let e = f(idx);
            if e >= bound {
                break;
            }
            caps[d] = caps[d].max(v);
            if d + 1 == dims {
                visit(idx, e);
            } else {
                rec(idx, d + 1, bound, f, visit, caps);
            }
        }
    }
    let mut idx = vec![0; dims];
    let mut caps = vec![0; dims];
    rec(&mut idx, 0, bound, exponent, visit, &mut caps);
    caps
}

/// Maps region-local nonnegative indices to `(r, s, u)`.
fn region_point(region: Region, idx: &[i64]) -> (i64, i64, i64) {
    match region {
        Region::NonNegative => (idx[0], idx[1], idx[2]),
        Region::Negative => (-idx[0] - 1, -idx[1] - 1, -idx[2] - 1),
    }
}

fn make_term(p: KnotFamilyParams, region: Region, r: i64, s: i64, u: i64) -> Option<HeckeRegionTerm> {
    if (r - s).rem_euclid(2) == 0 {
        return None;
    }
    let exponent = hecke_exponent8(p, r, s, u) + prefactor8(p);
    assert!(
        exponent % 8 == 0,
        "fractional exponent {exponent}/8 at (r, s, u) = ({r}, {s}, {u}), {p}"
    );
    let sign = if ((r - s - 1) / 2).rem_euclid(2) == 0 { 1 } else { -1 };
    Some(HeckeRegionTerm {
        r,
        s,
        u,
        region,
        exponent,
        x_power: u,
        sign,
    })
}

/// Every summand with exponent below `q^trunc`, and the largest index
/// magnitude reached per region and index.
pub fn hecke_terms(p: KnotFamilyParams, trunc: i64) -> (Vec<HeckeRegionTerm>, [[i64; 3]; 2]) {
    let bound = 8 * trunc;
    let mut terms = Vec::new();
    let mut caps = [[0; 3]; 2];
    for (i, region) in [Region::NonNegative, Region::Negative].into_iter().enumerate() {
        let f = |idx: &[i64]| {
            let (r, s, u) = region_point(region, idx);
            hecke_exponent8(p, r, s, u) + prefactor8(p)
        };
        let c = walk_monotone(3, bound, &f, &mut |idx, _| {
            let (r, s, u) = region_point(region, idx);
            terms.extend(make_term(p, region, r, s, u));
        });
        caps[i].copy_from_slice(&c);
    }
    (terms, caps)
}

/// Summands below `q^trunc` found by scanning the full boxes
/// `0 <= index <= radius` in both regions, with no early cutoff.
pub fn hecke_terms_in_box(p: KnotFamilyParams, trunc: i64, radius: [[i64; 3]; 2]) -> Vec<HeckeRegionTerm> {
    let bound = 8 * trunc;
    let mut terms = Vec::new();
    for (i, region) in [Region::NonNegative, Region::Negative].into_iter().enumerate() {
        let [ra, rb, rc] = radius[i];
        for a in 0..=ra {
            for b in 0..=rb {
                for c in 0..=rc {
                    let (r, s, u) = region_point(region, &[a, b, c]);
                    if hecke_exponent8(p, r, s, u) + prefactor8(p) < bound {
                        terms.extend(make_term(p, region, r, s, u));
                    }
                }
            }
        }
    }
    terms
}

fn sum_terms(terms: &[HeckeRegionTerm], trunc: i64) -> QSeries {
    let mut out = QSeries::zero(1, trunc);
    for term in terms {
        out = &out
            + &QSeries::monomial(
                XLaurent::from_int_terms(&[(term.x_power, term.sign)]),
                term.exponent / 8,
                1,
            );
    }
    out.truncated(trunc)
}

/// `(xq)_inf (q/x)_inf / (q)_inf^2` below `q^trunc`.
fn theta_prefactor(trunc: i64) -> Result<QSeries> {
    let a = qpochhammer(&Monomial::signed(1, 1, 1), PochLength::Infinite, Some(trunc))?;
    let b = qpochhammer(&Monomial::signed(1, -1, 1), PochLength::Infinite, Some(trunc))?;
    let inv = inv_qpochhammer(&Monomial::q_pow(1), PochLength::Infinite, trunc)?;
    Ok(&(&a * &b) * &(&inv * &inv))
}

fn assemble(p: KnotFamilyParams, terms: &[HeckeRegionTerm], trunc: i64) -> Result<QSeries> {
    let sum = sum_terms(terms, trunc);
    // The sum starts no lower than the prefactor power q^{-(t+m)/2}.
    let pre = theta_prefactor(trunc + p.ti() + p.mi() + 1)?;
    Ok(-(&pre * &sum).truncated(trunc))
}

/// `U_t^{(m)}(-x; q)` below `q^trunc` from the triple sum.
pub fn hecke_u_series(p: KnotFamilyParams, trunc: i64) -> Result<QSeries> {
    let (terms, _) = hecke_terms(p, trunc);
    assemble(p, &terms, trunc)
}

/// `U_t^{(m)}(x; q)`, for direct comparison with the q-hypergeometric form.
pub fn hecke_u_series_x(p: KnotFamilyParams, trunc: i64) -> Result<QSeries> {
    Ok(hecke_u_series(p, trunc)?.negate_x())
}

/// Recomputes the expansion over index boxes enlarged by `extra` beyond the
/// cutoffs reached by the monotone walk, and reports whether it changes.
pub fn hecke_stabilizes(p: KnotFamilyParams, trunc: i64, extra: i64) -> Result<bool> {
    let (terms, caps) = hecke_terms(p, trunc);
    let radius = caps.map(|c| c.map(|v| v + extra));
    let boxed = hecke_terms_in_box(p, trunc, radius);
    Ok(assemble(p, &terms, trunc)? == assemble(p, &boxed, trunc)?)
}

/// `n(3n+5)/2 + 2nr + r(r+3)/2`
fn double_exponent(n: i64, r: i64) -> i64 {
    (n * (3 * n + 5) + r * (r + 3)) / 2 + 2 * n * r
}

/// `(1-x) U_1(-x; q) = 1/(q)_inf (sum_{r,n>=0} - sum_{r,n<0}) (-1)^{n+r} x^{-r}
/// q^{n(3n+5)/2 + 2nr + r(r+3)/2}` below `q^trunc`.
pub fn hecke_u1_double(trunc: i64) -> Result<QSeries> {
    let mut sum = QSeries::zero(1, trunc);
    for (region, sign) in [(Region::NonNegative, 1), (Region::Negative, -1)] {
        let point = |idx: &[i64]| match region {
            Region::NonNegative => (idx[0], idx[1]),
            Region::Negative => (-idx[0] - 1, -idx[1] - 1),
        };
        let f = |idx: &[i64]| {
            let (n, r) = point(idx);
            double_exponent(n, r)
        };
        walk_monotone(2, trunc, &f, &mut |idx, e| {
            let (n, r) = point(idx);
            let s = if (n + r).rem_euclid(2) == 0 { sign } else { -sign };
            sum = &sum + &QSeries::monomial(XLaurent::from_int_terms(&[(-r, s)]), e, 1);
        });
    }
    let inv = inv_qpochhammer(&Monomial::q_pow(1), PochLength::Infinite, trunc + 1)?;
    Ok((&inv * &sum).truncated(trunc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::u_series;

    #[test]
    fn trefoil_matches_u_series() {
        let p = KnotFamilyParams::scalar(1).unwrap();
        assert_eq!(hecke_u_series_x(p, 12).unwrap(), u_series(p, 12));
    }

    #[test]
    fn appendix_coefficient() {
        let p = KnotFamilyParams::new(2, 1).unwrap();
        let u = hecke_u_series_x(p, 3).unwrap();
        assert_eq!(u.coeff(2), XLaurent::from_int_terms(&[(1, 1), (0, 2), (-1, 1)]));
    }

    #[test]
    fn double_sum_low_order() {
        let d = hecke_u1_double(10).unwrap();
        assert_eq!(d.coeff(0), XLaurent::from_int_terms(&[(0, 1), (1, -1)]));
        let at_one = d.specialize_x(&crate::algebra::rat(1, 1)).unwrap();
        assert!(at_one.is_zero());
    }

    #[test]
    fn enumeration_is_stable() {
        let p = KnotFamilyParams::new(2, 2).unwrap();
        assert!(hecke_stabilizes(p, 8, 5).unwrap());
    }
}
