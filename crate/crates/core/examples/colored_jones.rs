// Colored Jones polynomials of `T(2, 2t+1)` three ways: Morton's formula,
// the hypergeometric sum, and the mirror family from the cyclotomic
// expansion.

use torusq::knot::{jones_hyper, jones_left, jones_morton, mirror, KnotFamilyParams};

pub fn run() -> torusq::Result<()> {
    for t in 1..=2 {
        for n in 1..=4 {
            let morton = jones_morton(2, 2 * t + 1, n)?;
            assert_eq!(morton, jones_hyper(t, n)?);
            assert_eq!(mirror(&morton), jones_left(KnotFamilyParams::scalar(t)?, n)?);
            println!("T(2,{}) N={n}: {}", 2 * t + 1, morton.display_in("q"));
        }
    }
    let p = KnotFamilyParams::new(2, 2)?;
    println!("J_3^({p}) = {}", jones_left(p, 3)?.display_in("q"));
    Ok(())
}

#[allow(dead_code)]
fn main() -> torusq::Result<()> {
    run()
}
