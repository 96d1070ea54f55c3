//! The periodic character `chi_{8t+4}^{(m)}` and the weight one-half theta
//! series `Phi_t^{(m)}`.

use num_bigint::BigInt;

use crate::algebra::{QSeries, XLaurent, ZPoly};

use super::KnotFamilyParams;

/// `+1` for `k = +-(2t+1-2m)`, `-1` for `k = +-(2t+1+2m)` modulo `8t+4`,
/// and `0` otherwise.
pub fn chi_periodic(p: KnotFamilyParams, k: i64) -> i64 {
    let period = 4 * p.odd();
    let k = k.rem_euclid(period);
    let plus = p.r().rem_euclid(period);
    let minus = (p.odd() + 2 * p.mi()).rem_euclid(period);
    if k == plus || k == (period - plus) % period {
        1
    } else if k == minus || k == (period - minus) % period {
        -1
    } else {
        0
    }
}

/// Denominator of the theta exponents, `8(2t+1)`.
pub fn theta_scale(p: KnotFamilyParams) -> u32 {
    8 * p.odd() as u32
}

/// `sum_{n >= 0} chi(n) q^{n^2 / (8(2t+1))}` below the scaled bound `trunc`.
pub fn theta_phi_sum(p: KnotFamilyParams, trunc: i64) -> QSeries {
    let terms = (0..)
        .take_while(|n| n * n < trunc)
        .filter_map(|n| match chi_periodic(p, n) {
            0 => None,
            c => Some((n * n, XLaurent::from_int(c))),
        })
        .collect::<Vec<_>>();
    QSeries::from_terms(theta_scale(p), Some(trunc), terms)
}

/// `q^{(2t+1-2m)^2 / (8(2t+1))} (q^m, q^{2t+1-m}, q^{2t+1}; q^{2t+1})_inf`
/// below the scaled bound `trunc`.
pub fn theta_phi_product(p: KnotFamilyParams, trunc: i64) -> QSeries {
    let scale = theta_scale(p) as i64;
    let lead = p.r() * p.r();
    // Integer powers of q needed: scale * e + lead < trunc.
    let bound = (trunc - lead + scale - 1).div_euclid(scale).max(0);
    let step = p.odd();
    let mut prod = ZPoly::one();
    for start in [p.mi(), step - p.mi(), step] {
        let mut e = start;
        while e < bound {
            prod = prod.mul_truncated(&ZPoly::one_minus(1, e), bound);
            e += step;
        }
    }
    let terms = prod
        .terms()
        .map(|(e, c)| (scale * e + lead, XLaurent::from(BigInt::clone(c))))
        .collect::<Vec<_>>();
    QSeries::from_terms(scale as u32, Some(trunc), terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn character_values() {
        let p = KnotFamilyParams::scalar(1).unwrap();
        assert_eq!(chi_periodic(p, 1), 1);
        assert_eq!(chi_periodic(p, 5), -1);
        assert_eq!(chi_periodic(p, 2), 0);
        assert_eq!(chi_periodic(p, 11), 1);
        assert_eq!(chi_periodic(p, -7), -1);
    }

    #[test]
    fn antiperiodic_shift() {
        for p in KnotFamilyParams::all_up_to(4) {
            for k in -50..50 {
                assert_eq!(chi_periodic(p, k - 2 * p.odd()), -chi_periodic(p, k));
            }
        }
    }

    #[test]
    fn leading_terms() {
        let p = KnotFamilyParams::scalar(1).unwrap();
        let s = theta_phi_sum(p, 100);
        assert_eq!(s.scale(), 24);
        assert_eq!(s.min_exp(), Some(1));
        assert_eq!(s.coeff(1), XLaurent::one());
        assert_eq!(s.coeff(25), XLaurent::from_int(-1));
        assert_eq!(theta_phi_product(p, 100), s);
    }
}
