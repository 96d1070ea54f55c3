// The limit formula at roots of unity: `F_t^{(m)}(zeta_N)` times a root of
// unity against a Bernoulli-polynomial sum, in the field of order
// `8(2t+1)N`.

use torusq::knot::{bernoulli_lhs, bernoulli_normalized, bernoulli_order, bernoulli_rhs, KnotFamilyParams};

pub fn run() -> torusq::Result<()> {
    for p in KnotFamilyParams::all_up_to(2) {
        for n in 1..=3 {
            let (lhs, rhs) = (bernoulli_lhs(p, n)?, bernoulli_rhs(p, n)?);
            assert_eq!(lhs, rhs);
            let (norm, _) = bernoulli_normalized(p, n)?;
            println!("{p}, N={n}, field {}: {lhs}   normalized {norm}", bernoulli_order(p, n));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> torusq::Result<()> {
    run()
}
