// Bailey pairs: checking the defining relations, stepping the star pair
// through the lemma, and the conjugate identity behind the double sum.

use torusq::bailey::{
    andrews_conjugate_check, bailey_step, bailey_verify, iterate_infinite_steps,
    make_named_pair, pipeline_check, NamedPair, StepParam,
};
use torusq::knot::KnotFamilyParams;

pub fn run() -> torusq::Result<()> {
    for name in NamedPair::catalogue(2) {
        let pair = make_named_pair(&name)?;
        println!("{}", bailey_verify(&pair, 4, 16));
    }

    let family = KnotFamilyParams::new(2, 1)?;
    let star = make_named_pair(&NamedPair::star_for(family))?;
    let stepped = iterate_infinite_steps(&star, family.t())?;
    for n in 0..4 {
        println!("alpha''_{n} = {}   beta''_{n} = {}", stepped.alpha(n, 12)?, stepped.beta(n, 12)?);
    }
    println!("{}", pipeline_check(family, 5, 16));

    let jones = make_named_pair(&NamedPair::Jones { family })?;
    let b = StepParam::Finite(torusq::algebra::Monomial::signed(-1, 0, 0));
    let moved = bailey_step(&jones, &b, &StepParam::Infinite)?;
    println!("{}", bailey_verify(&moved, 3, 12));

    println!("{}", andrews_conjugate_check(15));
    Ok(())
}

#[allow(dead_code)]
fn main() -> torusq::Result<()> {
    run()
}
