//! Printed low-order expansions of `U_t^{(m)}(x; q)` for `t = 2, 3`.

use crate::algebra::{QSeries, XLaurent};
use crate::knot::KnotFamilyParams;

/// `(q-exponent, coefficient of x^{+-1}, constant term)`
type Row = (i64, i64, i64);

/// `(t, m, rows)`
const TABLE: &[(u32, u32, &[Row])] = &[
    (2, 1, &[(0, 0, 1), (1, 0, 1), (2, 1, 2), (3, 2, 3), (4, 3, 6)]),
    (2, 2, &[(-1, 0, 1), (0, 0, 2), (1, 1, 2), (2, 2, 4), (3, 4, 6)]),
    (3, 1, &[(0, 0, 1), (1, 0, 1), (2, 1, 2), (3, 2, 4), (4, 4, 7)]),
    (3, 2, &[(-1, 0, 1), (0, 0, 2), (1, 1, 3), (2, 3, 5), (3, 5, 10)]),
    (3, 3, &[(-2, 0, 1), (-1, 0, 2), (0, 1, 3), (1, 2, 5), (2, 5, 8)]),
];

/// Families with a printed expansion.
pub fn golden_families() -> Vec<KnotFamilyParams> {
    TABLE
        .iter()
        .map(|&(t, m, _)| KnotFamilyParams::new(t, m).expect("table parameters are valid"))
        .collect()
}

/// The printed expansion, valid below `q^{last displayed + 1}`.
pub fn golden_u_series(p: KnotFamilyParams) -> Option<QSeries> {
    let (_, _, rows) = TABLE.iter().find(|(t, m, _)| *t == p.t() && *m == p.m())?;
    let trunc = rows.last()?.0 + 1;
    let terms = rows
        .iter()
        .map(|&(e, a, b)| (e, XLaurent::from_int_terms(&[(1, a), (0, b), (-1, a)])));
    Some(QSeries::from_terms(1, Some(trunc), terms))
}
