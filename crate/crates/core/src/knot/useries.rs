//! The series `U_t^{(m)}(x; q) = sum_n C_n^{(t,m)}(q) (-xq)_n (-q/x)_n`.

use crate::algebra::{QBinomialCache, QSeries, XLaurent};

use super::coeffs::c_product_z;
use super::KnotFamilyParams;

/// `(1 + x q^k)(1 + q^k / x) = 1 + (x + 1/x) q^k + q^{2k}`.
pub(crate) fn u_term_factor(k: i64, trunc: Option<i64>) -> QSeries {
    let s = QSeries::from_terms(
        1,
        None,
        [
            (0, XLaurent::one()),
            (k, XLaurent::from_int_terms(&[(1, 1), (-1, 1)])),
            (2 * k, XLaurent::one()),
        ],
    );
    match trunc {
        Some(t) => s.truncated(t),
        None => s,
    }
}

/// `U_t^{(m)}(x; q)` valid strictly below `q^trunc`.
///
/// `C_n` has no power of `q` below `q^{n+1-t}` and `(-xq)_n (-q/x)_n` starts
/// at `q^0`, so terms with `n + 1 - t >= trunc` are dropped and each kept
/// `C_n` is only expanded below the window.
pub fn u_series(p: KnotFamilyParams, trunc: i64) -> QSeries {
    let t = p.ti();
    let mut bins = QBinomialCache::new();
    let mut out = QSeries::zero(1, trunc);
    // The product is needed below trunc - (lowest exponent of C_n) <= trunc + t.
    let window = trunc + t;
    let mut factor = QSeries::one().truncated(window);
    let mut n = 0i64;
    while n + 1 - t < trunc {
        if n > 0 {
            factor = &factor * &u_term_factor(n, Some(window));
        }
        let c = c_product_z(p, n, Some(trunc), &mut bins);
        if !c.is_zero() {
            let c = QSeries::from_zpoly(&c);
            out = &out + &(&c * &factor).truncated(trunc);
        }
        n += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(a: i64, b: i64) -> XLaurent {
        XLaurent::from_int_terms(&[(1, a), (0, b), (-1, a)])
    }

    #[test]
    fn golden_u21() {
        let u = u_series(KnotFamilyParams::new(2, 1).unwrap(), 5);
        let expect = QSeries::from_terms(
            1,
            Some(5),
            [
                (0, XLaurent::one()),
                (1, XLaurent::one()),
                (2, sym(1, 2)),
                (3, sym(2, 3)),
                (4, sym(3, 6)),
            ],
        );
        assert_eq!(u, expect);
    }

    #[test]
    fn golden_u33() {
        let u = u_series(KnotFamilyParams::new(3, 3).unwrap(), 1);
        let expect = QSeries::from_terms(
            1,
            Some(1),
            [(-2, XLaurent::one()), (-1, XLaurent::from_int(2)), (0, sym(1, 3))],
        );
        assert_eq!(u, expect);
    }

    #[test]
    fn coefficients_symmetric_in_x() {
        let u = u_series(KnotFamilyParams::new(3, 2).unwrap(), 10);
        assert_eq!(u.reflect_x(), u);
    }
}
