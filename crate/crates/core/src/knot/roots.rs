//! Values at roots of unity: `F_t^{(m)}(zeta_N)`, `U_t^{(m)}(-1; zeta_N)` and
//! the Bernoulli limit formula.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::{bernoulli_b2, q_factorial, CycloNum, QBinomialCache, ZPoly};
use crate::error::{Error, Result};

use super::coeffs::c_product_z;
use super::theta::chi_periodic;
use super::KnotFamilyParams;

fn check_color(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParams("N must be positive".into()));
    }
    Ok(())
}

fn add_residues(acc: &mut [BigInt], p: &ZPoly, order: u64, k: i64) {
    for (a, r) in acc.iter_mut().zip(p.residues(order, k)) {
        *a += r;
    }
}

/// `F_t^{(m)}(q) = q^t sum (q)_{k_t} q^{k_1^2+...+k_{t-1}^2 + k_m+...+k_{t-1}}
/// prod [k_{i+1} + delta_{i,m-1}, k_i]` at `q = zeta_N` (or `zeta_N^{-1}`).
/// The factor `(q)_{k_t}` vanishes for `k_t >= N`.
pub fn eval_f_at_root(p: KnotFamilyParams, n: u32, inverse: bool) -> Result<CycloNum> {
    check_color(n)?;
    let order = n as u64;
    let k = if inverse { -1 } else { 1 };
    let mut acc = vec![BigInt::from(0); n as usize];
    let mut bins = QBinomialCache::new();
    let t = p.t() as usize;
    let mut ks = vec![0i64; t + 1];
    for kt in 0..n as i64 {
        ks[t] = kt;
        let head = q_factorial(kt as u64).shift(p.ti());
        f_inner(p, &mut ks, t - 1, &head, &mut bins, &mut acc, order, k);
    }
    Ok(CycloNum::from_residues(order, &acc))
}

#[allow(clippy::too_many_arguments)]
fn f_inner(
    p: KnotFamilyParams,
    ks: &mut Vec<i64>,
    i: usize,
    acc_poly: &ZPoly,
    bins: &mut QBinomialCache,
    acc: &mut [BigInt],
    order: u64,
    k: i64,
) {
    if i == 0 {
        add_residues(acc, acc_poly, order, k);
        return;
    }
    let m = p.m() as usize;
    let top = ks[i + 1] + i64::from(i + 1 == m);
    for ki in 0..=top {
        ks[i] = ki;
        let linear = if i >= m { ki } else { 0 };
        let term = (acc_poly * bins.get(top, ki)).shift(ki * ki + linear);
        f_inner(p, ks, i - 1, &term, bins, acc, order, k);
    }
}

/// `U_t^{(m)}(-1; zeta_N) = sum_{n<N} C_n(zeta_N) (zeta_N)_n^2`.
pub fn u_eval_at_root(p: KnotFamilyParams, n: u32) -> Result<CycloNum> {
    check_color(n)?;
    let order = n as u64;
    let mut acc = vec![BigInt::from(0); n as usize];
    let mut bins = QBinomialCache::new();
    for j in 0..n as i64 {
        let poch = q_factorial(j as u64);
        let term = &c_product_z(p, j, None, &mut bins) * &(&poch * &poch);
        add_residues(&mut acc, &term, order, 1);
    }
    Ok(CycloNum::from_residues(order, &acc))
}

/// Order `8(2t+1)N` of the field holding both sides of the Bernoulli formula.
pub fn bernoulli_order(p: KnotFamilyParams, n: u32) -> u64 {
    8 * p.odd() as u64 * n as u64
}

/// `(2t+1) N sum_{k=1}^{4(2t+1)N} chi(k) zeta_M^{k^2} B_2(k / (4(2t+1)N))`
/// with `M = 8(2t+1)N`, i.e. `zeta_N^{k^2/(8(2t+1))}` read as a power of the
/// principal `M`-th root of unity.
pub fn bernoulli_rhs(p: KnotFamilyParams, n: u32) -> Result<CycloNum> {
    check_color(n)?;
    let order = bernoulli_order(p, n);
    let range = 4 * p.odd() * n as i64;
    let mut dense = vec![BigRational::from_integer(0.into()); order as usize];
    for k in 1..=range {
        let c = chi_periodic(p, k);
        if c == 0 {
            continue;
        }
        let b = bernoulli_b2(&BigRational::new(k.into(), range.into()));
        dense[(k * k).rem_euclid(order as i64) as usize] += b * BigInt::from(c);
    }
    let factor = BigRational::from_integer((p.odd() * n as i64).into());
    Ok(CycloNum::from_dense(order, dense).scale(&factor))
}

/// `zeta_N^{-t + (2t+1-2m)^2/(8(2t+1))} F_t^{(m)}(zeta_N)` in the same field.
pub fn bernoulli_lhs(p: KnotFamilyParams, n: u32) -> Result<CycloNum> {
    let order = bernoulli_order(p, n);
    let f = eval_f_at_root(p, n, false)?.embed(order)?;
    let shift = -8 * p.ti() * p.odd() + p.r() * p.r();
    Ok(&CycloNum::zeta_pow(order, shift) * &f)
}

/// Both sides divided by `zeta_M^{(2t+1-2m)^2}`. Every `k` with
/// `chi(k) != 0` has `k^2 = (2t+1-2m)^2` modulo `8(2t+1)`, so the normalized
/// values lie in the field of order `N`; at `t = m = N = 1` both are `1`.
pub fn bernoulli_normalized(p: KnotFamilyParams, n: u32) -> Result<(CycloNum, CycloNum)> {
    let order = bernoulli_order(p, n);
    let unshift = CycloNum::zeta_pow(order, -p.r() * p.r());
    Ok((
        &bernoulli_lhs(p, n)? * &unshift,
        &bernoulli_rhs(p, n)? * &unshift,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(t: u32, m: u32) -> KnotFamilyParams {
        KnotFamilyParams::new(t, m).unwrap()
    }

    #[test]
    fn trefoil_values() {
        assert_eq!(eval_f_at_root(fam(1, 1), 1, false).unwrap(), CycloNum::one(1));
        assert_eq!(eval_f_at_root(fam(1, 1), 2, true).unwrap(), CycloNum::from_int(2, -3));
        assert_eq!(u_eval_at_root(fam(1, 1), 1).unwrap(), CycloNum::one(1));
        assert_eq!(u_eval_at_root(fam(1, 1), 2).unwrap(), CycloNum::from_int(2, -3));
    }

    #[test]
    fn duality_small() {
        for p in KnotFamilyParams::all_up_to(2) {
            for n in 1..6 {
                assert_eq!(eval_f_at_root(p, n, true).unwrap(), u_eval_at_root(p, n).unwrap());
            }
        }
    }

    #[test]
    fn bernoulli_anchor() {
        let (lhs, rhs) = bernoulli_normalized(fam(1, 1), 1).unwrap();
        assert_eq!(lhs, CycloNum::one(24));
        assert_eq!(rhs, CycloNum::one(24));
        assert_eq!(bernoulli_rhs(fam(1, 1), 1).unwrap(), CycloNum::zeta_pow(24, 1));
    }

    #[test]
    fn bernoulli_small() {
        for (t, m, n) in [(1, 1, 2), (1, 1, 3), (2, 1, 2), (2, 2, 2)] {
            let p = fam(t, m);
            assert_eq!(bernoulli_lhs(p, n).unwrap(), bernoulli_rhs(p, n).unwrap(), "{p}, N = {n}");
        }
    }
}
