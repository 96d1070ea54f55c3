//! Nested sums over chains `top >= n_K >= ... >= n_1 >= 0` whose summand is a
//! product of single-index monomials, nearest-neighbour cross terms
//! `q^{c n_i n_{i+1}}`, and the multinomial denominator
//! `1/((q)_{top-n_K} ... (q)_{n_2-n_1} (q)_{n_1})`.
//!
//! The sum is returned multiplied by `(q)_top`, which turns the denominator
//! into the product of Gaussian binomials `[n_{i+1} n_i]` and keeps every
//! intermediate value an integer Laurent polynomial.

use num_bigint::BigInt;

use crate::algebra::{QBinomialCache, ZPoly};

/// Weight `(-1)^{n [alternating]} q^{(quad2 n^2 + lin2 n)/2}` attached to one
/// summation index.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ChainNode {
    pub quad2: i64,
    pub lin2: i64,
    pub alternating: bool,
}

impl ChainNode {
    pub fn new(quad2: i64, lin2: i64, alternating: bool) -> Self {
        ChainNode {
            quad2,
            lin2,
            alternating,
        }
    }

    /// `q^{n^2}`
    pub fn square() -> Self {
        Self::new(2, 0, false)
    }

    /// `q^{c n}`
    pub fn linear(c: i64) -> Self {
        Self::new(0, 2 * c, false)
    }

    pub fn with_linear(mut self, c: i64) -> Self {
        self.lin2 += 2 * c;
        self
    }

    pub fn exponent(&self, n: i64) -> i64 {
        let doubled = self.quad2 * n * n + self.lin2 * n;
        assert!(doubled % 2 == 0, "half-integral exponent in chain node {self:?} at {n}");
        doubled / 2
    }

    pub fn weight(&self, n: i64) -> ZPoly {
        let sign = if self.alternating && n % 2 != 0 { -1 } else { 1 };
        ZPoly::monomial(BigInt::from(sign), self.exponent(n))
    }
}

/// `(q)_top` times the chain sum. `cross[i]` couples `n_{i+1}` to the next
/// index up; the last entry couples `n_K` to `top`.
pub fn chain_multinomial(
    top: i64,
    nodes: &[ChainNode],
    cross: &[i64],
    bins: &mut QBinomialCache,
) -> ZPoly {
    assert_eq!(nodes.len(), cross.len(), "one cross coefficient per node");
    if nodes.is_empty() {
        return ZPoly::one();
    }
    let mut f: Vec<ZPoly> = (0..=top).map(|u| nodes[0].weight(u)).collect();
    for i in 1..nodes.len() {
        let g: Vec<ZPoly> = (0..=top)
            .map(|v| {
                let mut acc = ZPoly::zero();
                for (u, fu) in f.iter().enumerate().take(v as usize + 1) {
                    if fu.is_zero() {
                        continue;
                    }
                    let u = u as i64;
                    acc += &(&fu.shift(cross[i - 1] * u * v) * bins.get(v, u));
                }
                &acc * &nodes[i].weight(v)
            })
            .collect();
        f = g;
    }
    let c = *cross.last().unwrap();
    let mut out = ZPoly::zero();
    for (u, fu) in f.iter().enumerate() {
        let u = u as i64;
        out += &(&fu.shift(c * u * top) * bins.get(top, u));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q_factorial;

    #[test]
    fn single_index_is_binomial_sum() {
        // sum_k q^{k^2} [n k] is the Rogers-Szego type sum; check n = 2
        let mut bins = QBinomialCache::new();
        let s = chain_multinomial(2, &[ChainNode::square()], &[0], &mut bins);
        // 1 + q(1+q) + q^4
        assert_eq!(s, ZPoly::from_i64s(0, &[1, 1, 1, 0, 1]));
    }

    #[test]
    fn empty_chain_is_one() {
        let mut bins = QBinomialCache::new();
        assert!(chain_multinomial(5, &[], &[], &mut bins).is_one());
    }

    #[test]
    fn two_indices_match_brute_force() {
        let mut bins = QBinomialCache::new();
        let nodes = [ChainNode::new(1, -1, true), ChainNode::square()];
        let cross = [-1, 0];
        let top = 4;
        let fast = chain_multinomial(top, &nodes, &cross, &mut bins);
        let mut slow = ZPoly::zero();
        for b in 0..=top {
            for a in 0..=b {
                let w = &(&nodes[0].weight(a) * &nodes[1].weight(b)).shift(-a * b);
                // (q)_top / ((q)_{top-b} (q)_{b-a} (q)_a)
                let den = &(&q_factorial((top - b) as u64) * &q_factorial((b - a) as u64))
                    * &q_factorial(a as u64);
                let multinom = q_factorial(top as u64).div_exact(&den).unwrap();
                slow += &(w * &multinom);
            }
        }
        assert_eq!(fast, slow);
    }
}
