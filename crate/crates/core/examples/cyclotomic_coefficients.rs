// The coefficients `C_n^{(t,m)}` of the cyclotomic expansion, from the
// product formula and from the multisum, and the expansion rebuilt into
// colored Jones polynomials.

use torusq::knot::{c_multisum, habiro_reconstruct, CyclotomicCoeffs, KnotFamilyParams};

pub fn run() -> torusq::Result<()> {
    let p = KnotFamilyParams::new(2, 1)?;
    let coeffs = CyclotomicCoeffs::product(p, 6);
    for (n, c) in coeffs.values().iter().enumerate() {
        assert_eq!(c, &c_multisum(p, n as u32)?);
        println!("C_{n} = {c}");
    }
    assert!(coeffs.all_integral());
    for big_n in 1..=4 {
        println!("J_{big_n} = {}", habiro_reconstruct(&coeffs, big_n)?.display_in("q"));
    }
    // The trefoil has C_n = q^n.
    let trefoil = CyclotomicCoeffs::product(KnotFamilyParams::scalar(1)?, 5);
    println!("trefoil: {:?}", trefoil.values().iter().map(|c| c.to_string()).collect::<Vec<_>>());
    Ok(())
}

#[allow(dead_code)]
fn main() -> torusq::Result<()> {
    run()
}
