// `U_t^{(m)}(x; q)` for `t = 2, 3` next to the expansions printed for them.

use torusq::knot::u_series;
use torusq::verify::{golden_families, golden_u_series};

pub fn run() -> torusq::Result<()> {
    for p in golden_families() {
        let printed = golden_u_series(p).expect("tabulated");
        let trunc = printed.trunc().unwrap_or(0);
        let computed = u_series(p, trunc);
        let mark = if computed == printed { "ok" } else { "MISMATCH" };
        println!("U[{p}] = {computed} + O(q^{trunc})  {mark}");
    }
    // Longer expansion, coefficients symmetric under x -> 1/x.
    let p = torusq::knot::KnotFamilyParams::new(3, 2)?;
    let u = u_series(p, 8);
    assert_eq!(u.reflect_x(), u);
    println!("U[{p}] through q^7: {u}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> torusq::Result<()> {
    run()
}
