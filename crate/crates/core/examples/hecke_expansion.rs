// The indefinite theta (Hecke-type) triple sum for `U_t^{(m)}(-x; q)` and
// the double sum for `(1-x) U_1(-x; q)`.

use torusq::algebra::XLaurent;
use torusq::hecke::{hecke_stabilizes, hecke_u1_double, hecke_u_series};
use torusq::knot::{u_series, KnotFamilyParams};

pub fn run() -> torusq::Result<()> {
    let trunc = 10;
    for p in KnotFamilyParams::all_up_to(2) {
        let h = hecke_u_series(p, trunc)?;
        assert_eq!(h, u_series(p, trunc).negate_x());
        assert!(hecke_stabilizes(p, trunc, 5)?);
        println!("{p}: {h}");
    }
    let double = hecke_u1_double(trunc)?;
    let one_minus_x = XLaurent::from_int_terms(&[(0, 1), (1, -1)]);
    let u1 = u_series(KnotFamilyParams::scalar(1)?, trunc).negate_x();
    assert_eq!(double, u1.mul_xlaurent(&one_minus_x));
    println!("double sum: {double}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> torusq::Result<()> {
    run()
}
