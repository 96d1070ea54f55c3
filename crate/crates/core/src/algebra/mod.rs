//! Exact arithmetic: integer and rational Laurent polynomials, truncated
//! q-series with Laurent coefficients in `x`, q-Pochhammer kernels and
//! cyclotomic fields.

mod bernoulli;
mod cyclotomic;
mod laurent;
mod pochhammer;
mod series;
mod zpoly;

pub use bernoulli::bernoulli_b2;
pub use cyclotomic::{
    cyclo_eval, cyclo_eval_series, cyclo_eval_z, cyclotomic_polynomial, euler_phi, CycloNum,
};
pub use laurent::XLaurent;
pub use pochhammer::{
    inv_qpochhammer, q_factorial, q_poch_z, qbinomial, qbinomial_z, qpochhammer, PochLength,
    QBinomialCache,
};
pub use series::{Monomial, QSeries, SeriesDiff};
pub use zpoly::ZPoly;


/// `a / b` as a rational.
pub fn rat(a: i64, b: i64) -> num_rational::BigRational {
    num_rational::BigRational::new(a.into(), b.into())
}
