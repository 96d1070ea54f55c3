//! Check matrices and their parallel execution.

use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::bailey::NamedPair;
use crate::error::{Error, Result};
use crate::knot::KnotFamilyParams;

use super::golden::golden_families;
use super::{CheckReport, CheckSpec, Mutation};

/// Named parameter matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Profile {
    /// The full matrix: `t <= 3` (4 for coefficient and Jones checks),
    /// `N <= 10`, `n <= 10`, q-window 30.
    Desk,
    /// A few instances of every check, for quick smoke runs.
    Smoke,
}

impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "desk" => Ok(Profile::Desk),
            "smoke" => Ok(Profile::Smoke),
            other => Err(Error::Parse(format!("unknown profile '{other}' (desk, smoke)"))),
        }
    }
}

struct Limits {
    t: u32,
    t_coeff: u32,
    n_root: u32,
    n_coeff: u32,
    n_jones: u32,
    n_bernoulli: u32,
    t_bernoulli: u32,
    window: i64,
    hecke: i64,
    double: i64,
    bailey_n: i64,
    bailey_trunc: i64,
    pipeline_n: i64,
}

impl Profile {
    fn limits(self) -> Limits {
        match self {
            Profile::Desk => Limits {
                t: 3,
                t_coeff: 4,
                n_root: 10,
                n_coeff: 10,
                n_jones: 8,
                n_bernoulli: 4,
                t_bernoulli: 2,
                window: 30,
                hecke: 20,
                double: 25,
                bailey_n: 8,
                bailey_trunc: 40,
                pipeline_n: 6,
            },
            Profile::Smoke => Limits {
                t: 2,
                t_coeff: 2,
                n_root: 4,
                n_coeff: 4,
                n_jones: 4,
                n_bernoulli: 2,
                t_bernoulli: 1,
                window: 10,
                hecke: 10,
                double: 10,
                bailey_n: 3,
                bailey_trunc: 12,
                pipeline_n: 3,
            },
        }
    }

    /// Every check of the profile, in a fixed order.
    pub fn specs(self) -> Vec<CheckSpec> {
        let l = self.limits();
        let fams = KnotFamilyParams::all_up_to(l.t);
        let mut out: Vec<CheckSpec> = golden_families()
            .into_iter()
            .filter(|p| p.t() <= l.t)
            .map(|family| CheckSpec::Golden { family })
            .collect();
        for &family in &fams {
            for n in 1..=l.n_root {
                out.push(CheckSpec::Duality { family, n });
                out.push(CheckSpec::JonesAgreement { family, n });
            }
            out.push(CheckSpec::Hecke { family, trunc: l.hecke });
            out.push(CheckSpec::Habiro { family, n_max: l.n_jones });
            out.push(CheckSpec::Theta { family, window: l.window });
            out.push(CheckSpec::BaileyPipeline { family, n_max: l.pipeline_n, trunc: l.window });
            out.push(CheckSpec::BaileyDecomposition { family, n_max: l.bailey_n });
        }
        out.push(CheckSpec::HeckeDouble { trunc: l.double });
        for family in KnotFamilyParams::all_up_to(l.t_bernoulli) {
            for n in 1..=l.n_bernoulli {
                out.push(CheckSpec::Bernoulli { family, n });
            }
        }
        for family in KnotFamilyParams::all_up_to(l.t_coeff) {
            out.push(CheckSpec::Cyclotomic { family, n_max: l.n_coeff });
        }
        for t in 1..=l.t_coeff {
            out.push(CheckSpec::JonesConsistency { t, n_max: l.n_jones });
        }
        for pair in NamedPair::catalogue(l.t) {
            out.push(CheckSpec::BaileyVerify { pair, n_max: l.bailey_n, trunc: l.bailey_trunc });
            out.push(CheckSpec::BaileyStep { pair, n_max: l.pipeline_n, trunc: l.window });
            if !matches!(pair, NamedPair::Andrews) && pair.has_convergent_limit() {
                out.push(CheckSpec::BaileyLimit { pair, trunc: l.hecke });
            }
        }
        out.push(CheckSpec::Conjugate { trunc: l.hecke });
        out
    }
}

fn pool(jobs: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool")
}

fn sort_key(r: &CheckReport) -> (String, String) {
    (r.check_id.clone(), serde_json::to_string(&r.params).unwrap_or_default())
}

/// Runs `specs` on `jobs` threads (0 = one per core). Reports come back
/// sorted by check id and then parameters, whatever the scheduling.
pub fn run_specs(specs: &[CheckSpec], jobs: usize) -> Vec<CheckReport> {
    let mut reports: Vec<CheckReport> =
        pool(jobs).install(|| specs.par_iter().map(CheckSpec::run).collect());
    reports.sort_by_cached_key(sort_key);
    reports
}

pub fn run_suite(profile: Profile, jobs: usize) -> Vec<CheckReport> {
    run_specs(&profile.specs(), jobs)
}

/// One negative control: a check run with a seeded mutation.
#[derive(Clone, Debug, Serialize)]
pub struct MutationOutcome {
    pub spec: String,
    pub mutation: Mutation,
    pub report: CheckReport,
    /// The check failed and its witness names the mutated coefficient.
    pub caught: bool,
}

/// Runs every spec once with a mutation drawn from its own mutation space.
/// The mutation for spec `i` depends only on `seed` and `i`.
pub fn run_mutations(specs: &[CheckSpec], seed: u64, jobs: usize) -> Vec<MutationOutcome> {
    pool(jobs).install(|| {
        specs
            .par_iter()
            .enumerate()
            .map(|(i, spec)| {
                let mut rng = Mutation::seeded(seed ^ (i as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
                let (index, slots) = spec.mutation_space();
                let mutation = Mutation::sample(&mut rng, index, slots);
                let report = spec.run_with(Some(&mutation));
                let caught = !report.passed()
                    && report.witness.as_ref().is_some_and(|w| mutation.located_by(w));
                MutationOutcome { spec: spec.to_string(), mutation, report, caught }
            })
            .collect()
    })
}
