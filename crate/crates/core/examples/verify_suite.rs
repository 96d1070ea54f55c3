// Runs a check profile in parallel, then the negative controls.
//
// `cargo run --release --example verify_suite -- [desk|smoke] [seed]`

use std::time::Instant;

use torusq::verify::{run_mutations, run_specs, Profile};

pub fn run_profile(profile: Profile, seed: u64) -> torusq::Result<()> {
    let specs = profile.specs();

    let started = Instant::now();
    let reports = run_specs(&specs, 0);
    let failed = reports.iter().filter(|r| !r.passed()).count();
    for r in reports.iter().filter(|r| !r.passed()) {
        println!("{r}");
    }
    println!("{} checks, {failed} failed, {:.1?}", reports.len(), started.elapsed());

    let started = Instant::now();
    let outcomes = run_mutations(&specs, seed, 0);
    for o in outcomes.iter().filter(|o| !o.caught) {
        println!("missed {} with {:?}: {}", o.spec, o.mutation, o.report);
    }
    let caught = outcomes.iter().filter(|o| o.caught).count();
    println!("{caught}/{} mutations caught, {:.1?}", outcomes.len(), started.elapsed());
    Ok(())
}

pub fn run() -> torusq::Result<()> {
    run_profile(Profile::Smoke, 7)
}

#[allow(dead_code)]
fn main() -> torusq::Result<()> {
    let mut args = std::env::args().skip(1);
    let profile: Profile = args.next().as_deref().unwrap_or("smoke").parse()?;
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(7);
    run_profile(profile, seed)
}
