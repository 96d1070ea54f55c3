//! Exact comparisons producing witnesses.

use std::fmt::Display;

use crate::algebra::{CycloNum, QSeries};

use super::Witness;

/// First disagreement of two series below `window` (scaled to `expected`).
///
/// A side whose own validity window ends before `window` is a failure too:
/// identities must not pass because a tail was never computed.
pub fn compare_series(expected: &QSeries, actual: &QSeries, window: i64) -> Option<Witness> {
    if let Some(w) = expected.common_window(actual) {
        if w < window {
            return Some(
                Witness::values(format!("window {window}"), format!("window {w}"))
                    .with_note("insufficient precision"),
            );
        }
    }
    expected.first_difference(actual, Some(window)).map(|d| Witness {
        index: None,
        exponent: Some(d.exponent),
        scale: Some(d.scale),
        expected: d.left.display_compact("x").to_string(),
        actual: d.right.display_compact("x").to_string(),
        note: None,
    })
}

/// Whole-value comparison for exact objects with no exponent structure.
pub fn compare_values<T: PartialEq + Display>(expected: &T, actual: &T) -> Option<Witness> {
    (expected != actual).then(|| Witness::values(expected, actual))
}

/// Comparison of two Laurent polynomials reporting the first differing power.
pub fn compare_laurent(
    expected: &crate::algebra::XLaurent,
    actual: &crate::algebra::XLaurent,
) -> Option<Witness> {
    compare_series(
        &QSeries::from_q_laurent(expected),
        &QSeries::from_q_laurent(actual),
        i64::MAX,
    )
}

/// Exact comparison in a cyclotomic field. The exponent of the witness is
/// the first power of `zeta` (in the power basis) whose coefficients differ.
pub fn compare_cyclo(expected: &CycloNum, actual: &CycloNum) -> Option<Witness> {
    if expected == actual {
        return None;
    }
    let first = if expected.order() == actual.order() {
        expected
            .coeffs()
            .iter()
            .zip(actual.coeffs())
            .position(|(a, b)| a != b)
            .map(|i| i as i64)
    } else {
        None
    };
    let mut w = Witness::values(expected, actual);
    w.exponent = first;
    Some(w.with_note("coefficient of a power of zeta"))
}
