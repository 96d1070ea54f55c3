// The theta series `sum chi(n) q^{n^2/(8(2t+1))}` and its product form.

use torusq::knot::{chi_periodic, theta_phi_product, theta_phi_sum, theta_scale, KnotFamilyParams};

pub fn run() -> torusq::Result<()> {
    for p in KnotFamilyParams::all_up_to(3) {
        let trunc = 12 * theta_scale(p) as i64;
        let sum = theta_phi_sum(p, trunc);
        assert_eq!(sum, theta_phi_product(p, trunc));
        let chi: Vec<i64> = (0..4 * p.odd()).map(|k| chi_periodic(p, k)).collect();
        println!("{p}: chi = {chi:?}");
        println!("    {sum}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> torusq::Result<()> {
    run()
}
