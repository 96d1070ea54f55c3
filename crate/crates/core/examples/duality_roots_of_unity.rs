// `F_t^{(m)}(zeta_N^{-1})` and `U_t^{(m)}(-1; zeta_N)` as exact elements
// of the cyclotomic field.

use torusq::knot::{eval_f_at_root, u_eval_at_root, KnotFamilyParams};

pub fn run() -> torusq::Result<()> {
    for p in KnotFamilyParams::all_up_to(2) {
        for n in 1..=6 {
            let f = eval_f_at_root(p, n, true)?;
            let u = u_eval_at_root(p, n)?;
            assert_eq!(f, u);
            println!("{p}, N={n}: {f}");
        }
    }
    // A larger field.
    let p = KnotFamilyParams::new(3, 2)?;
    let v = u_eval_at_root(p, 7)?;
    assert_eq!(v, eval_f_at_root(p, 7, true)?);
    println!("{p}, N=7: {v}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> torusq::Result<()> {
    run()
}
