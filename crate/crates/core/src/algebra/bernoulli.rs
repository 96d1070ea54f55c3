use num_rational::BigRational;

/// The second Bernoulli polynomial `B_2(u) = u^2 - u + 1/6`.
pub fn bernoulli_b2(u: &BigRational) -> BigRational {
    let sixth = BigRational::new(1.into(), 6.into());
    u * u - u + sixth
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn values() {
        assert_eq!(bernoulli_b2(&r(0, 1)), r(1, 6));
        assert_eq!(bernoulli_b2(&r(1, 1)), r(1, 6));
        assert_eq!(bernoulli_b2(&r(1, 2)), r(-1, 12));
        assert_eq!(bernoulli_b2(&r(1, 12)), r(13, 144));
    }
}
