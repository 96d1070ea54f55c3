//! Single-coefficient perturbations used as negative controls.

use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::algebra::{CycloNum, QSeries, XLaurent};

use super::Witness;

/// Adds `delta` to one coefficient of the computed side of a check: the
/// coefficient of `q^slot` (scaled) in a series or polynomial, or of
/// `zeta^slot` in a cyclotomic value. `index` selects the instance (`n`,
/// `N`) for checks that loop over several.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Mutation {
    pub index: Option<i64>,
    pub slot: i64,
    pub delta: i64,
}

impl Mutation {
    /// Random mutation inside the given ranges (inclusive `index`, half-open
    /// `slots`).
    pub fn sample(rng: &mut StdRng, index: Option<(i64, i64)>, slots: (i64, i64)) -> Self {
        let delta = match rng.gen_range(1..=6) {
            d if d <= 3 => d,
            d => 3 - d,
        };
        Mutation {
            index: index.map(|(lo, hi)| rng.gen_range(lo..=hi)),
            slot: rng.gen_range(slots.0..slots.1),
            delta,
        }
    }

    pub fn seeded(seed: u64) -> StdRng {
        StdRng::seed_from_u64(seed)
    }

    fn hits(&self, index: Option<i64>) -> bool {
        self.index == index
    }

    pub fn series(&self, index: Option<i64>, s: QSeries) -> QSeries {
        if !self.hits(index) {
            return s;
        }
        let bump = QSeries::monomial(XLaurent::from_int(self.delta), self.slot, s.scale());
        &s + &bump
    }

    pub fn laurent(&self, index: Option<i64>, p: XLaurent) -> XLaurent {
        if !self.hits(index) {
            return p;
        }
        &p + &XLaurent::monomial(BigRational::from_integer(self.delta.into()), self.slot)
    }

    pub fn cyclo(&self, index: Option<i64>, c: CycloNum) -> CycloNum {
        if !self.hits(index) {
            return c;
        }
        let mut bump = CycloNum::zeta_pow(c.order(), self.slot);
        bump = bump.scale(&BigRational::from_integer(self.delta.into()));
        &c + &bump
    }

    /// The witness points at the perturbed coefficient.
    pub fn located_by(&self, w: &Witness) -> bool {
        w.index == self.index && w.exponent == Some(self.slot)
    }
}

/// Applies an optional mutation.
pub(crate) trait Tamper<T> {
    fn tamper(self, index: Option<i64>, value: T) -> T;
}

macro_rules! tamper_impl {
    ($t:ty, $m:ident) => {
        impl Tamper<$t> for Option<&Mutation> {
            fn tamper(self, index: Option<i64>, value: $t) -> $t {
                match self {
                    Some(mu) => mu.$m(index, value),
                    None => value,
                }
            }
        }
    };
}
tamper_impl!(QSeries, series);
tamper_impl!(XLaurent, laurent);
tamper_impl!(CycloNum, cyclo);
