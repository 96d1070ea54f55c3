//! The acceptance matrix. Every criterion runs, prints one pass/FAIL line
//! and is held to its time budget; the test fails at the end if any did.

use std::time::{Duration, Instant};

use torusq::bailey::NamedPair;
use torusq::knot::KnotFamilyParams;
use torusq::verify::{golden_families, run_mutations, run_specs, CheckReport, CheckSpec};

type Extra = fn(&[CheckReport]) -> Result<(), String>;

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    specs: Vec<CheckSpec>,
    /// Extra requirement on the reports beyond "all passed".
    extra: Option<Extra>,
}

fn fams(t_max: u32) -> Vec<KnotFamilyParams> {
    KnotFamilyParams::all_up_to(t_max)
}

fn criteria() -> Vec<Criterion> {
    let secs = Duration::from_secs;
    let mut out = Vec::new();

    out.push(Criterion {
        id: 1,
        name: "printed expansions of U_2^(1..2), U_3^(1..3)",
        budget: secs(5),
        specs: golden_families().into_iter().map(|family| CheckSpec::Golden { family }).collect(),
        extra: Some(|r| if r.len() == 5 { Ok(()) } else { Err(format!("{} golden families", r.len())) }),
    });

    let mut duality = Vec::new();
    for family in fams(3) {
        for n in 1..=10 {
            duality.push(CheckSpec::Duality { family, n });
        }
    }
    out.push(Criterion {
        id: 2,
        name: "F(zeta_N^-1) = U(-1; zeta_N), t <= 3, N <= 10",
        budget: secs(60),
        specs: duality,
        extra: Some(|r| {
            let v = r.iter().find(|r| {
                r.params["t"] == 1 && r.params["m"] == 1 && r.params["N"] == 2
            });
            match v.and_then(|r| r.value.as_deref()) {
                Some("-3") => Ok(()),
                other => Err(format!("value at t=m=1, N=2 is {other:?}, expected -3")),
            }
        }),
    });

    let mut hecke: Vec<CheckSpec> = fams(3)
        .into_iter()
        .map(|family| CheckSpec::Hecke { family, trunc: 20 })
        .collect();
    hecke.push(CheckSpec::HeckeDouble { trunc: 25 });
    out.push(Criterion {
        id: 3,
        name: "Hecke-type sums through q^20, double sum through q^25",
        budget: secs(60),
        specs: hecke,
        extra: None,
    });

    out.push(Criterion {
        id: 4,
        name: "C_n product = multisum and integral, t <= 4, n <= 10",
        budget: secs(60),
        specs: fams(4)
            .into_iter()
            .map(|family| CheckSpec::Cyclotomic { family, n_max: 10 })
            .collect(),
        extra: None,
    });

    let mut jones: Vec<CheckSpec> =
        (1..=4).map(|t| CheckSpec::JonesConsistency { t, n_max: 8 }).collect();
    jones.extend(fams(3).into_iter().map(|family| CheckSpec::Habiro { family, n_max: 8 }));
    out.push(Criterion {
        id: 5,
        name: "Jones formulas agree, mirror, cyclotomic expansion round trip",
        budget: secs(30),
        specs: jones,
        extra: None,
    });

    let mut agreement = Vec::new();
    for family in fams(3) {
        for n in 1..=10 {
            agreement.push(CheckSpec::JonesAgreement { family, n });
        }
    }
    out.push(Criterion {
        id: 6,
        name: "colored Jones at zeta_N equals F, both orientations",
        budget: secs(30),
        specs: agreement,
        extra: None,
    });

    let mut bernoulli = Vec::new();
    for family in fams(2) {
        for n in 1..=4 {
            bernoulli.push(CheckSpec::Bernoulli { family, n });
        }
    }
    out.push(Criterion {
        id: 7,
        name: "Bernoulli limit formula, t <= 2, N <= 4, anchor t=m=N=1",
        budget: secs(60),
        specs: bernoulli,
        extra: Some(|r| {
            let anchor = r.iter().find(|r| {
                r.params["t"] == 1 && r.params["m"] == 1 && r.params["N"] == 1
            });
            match anchor.and_then(|r| r.value.as_deref()) {
                Some("1") => Ok(()),
                other => Err(format!("anchor value {other:?}, expected 1")),
            }
        }),
    });

    let mut bailey = Vec::new();
    for pair in NamedPair::catalogue(3) {
        bailey.push(CheckSpec::BaileyVerify { pair, n_max: 8, trunc: 40 });
        bailey.push(CheckSpec::BaileyStep { pair, n_max: 6, trunc: 30 });
    }
    for family in fams(3) {
        bailey.push(CheckSpec::BaileyPipeline { family, n_max: 6, trunc: 30 });
    }
    bailey.push(CheckSpec::Conjugate { trunc: 20 });
    out.push(Criterion {
        id: 8,
        name: "Bailey pairs, lemma step, pipeline, conjugate identity",
        budget: secs(60),
        specs: bailey,
        extra: None,
    });
    out
}

fn run_criterion(c: &Criterion) -> (bool, String) {
    let started = Instant::now();
    let reports = run_specs(&c.specs, 0);
    let elapsed = started.elapsed();
    let failed: Vec<&CheckReport> = reports.iter().filter(|r| !r.passed()).collect();
    let mut problems: Vec<String> = failed.iter().take(3).map(|r| r.to_string()).collect();
    if let Some(extra) = c.extra {
        if let Err(e) = extra(&reports) {
            problems.push(e);
        }
    }
    if elapsed > c.budget {
        problems.push(format!("took {elapsed:.1?}, budget {:?}", c.budget));
    }
    let ok = problems.is_empty();
    let line = format!(
        "criterion {} {}: {} ({} checks, {:.2?})",
        c.id,
        if ok { "pass" } else { "FAIL" },
        c.name,
        reports.len(),
        elapsed
    );
    (ok, std::iter::once(line).chain(problems.into_iter().map(|p| format!("    {p}"))).collect::<Vec<_>>().join("\n"))
}

#[test]
fn acceptance() {
    let criteria = criteria();
    let mut all_ok = true;
    for c in &criteria {
        let (ok, text) = run_criterion(c);
        println!("{text}");
        all_ok &= ok;
    }

    // Negative controls over every check above.
    let specs: Vec<CheckSpec> = criteria.iter().flat_map(|c| c.specs.iter().copied()).collect();
    let started = Instant::now();
    let outcomes = run_mutations(&specs, 20_241_015, 0);
    let elapsed = started.elapsed();
    let missed: Vec<_> = outcomes.iter().filter(|o| !o.caught).collect();
    let ok = missed.is_empty() && elapsed <= Duration::from_secs(30);
    println!(
        "criterion 9 {}: single-coefficient mutations located ({}/{} caught, {:.2?})",
        if ok { "pass" } else { "FAIL" },
        outcomes.len() - missed.len(),
        outcomes.len(),
        elapsed
    );
    for o in missed.iter().take(5) {
        println!("    missed {} {:?}: {}", o.spec, o.mutation, o.report);
    }
    all_ok &= ok;
    assert!(all_ok, "some acceptance criteria failed");
}
