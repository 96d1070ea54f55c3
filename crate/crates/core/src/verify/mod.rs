//! Named, parameterized checks of every identity, producing [`CheckReport`]s.

mod checks;
mod compare;
mod golden;
mod mutation;
mod report;
mod suite;

pub use checks::{
    check_bailey_pair, check_bernoulli_formula, check_cyclotomic_coeffs, check_duality,
    check_habiro_roundtrip, check_hecke_double, check_hecke_match, check_jones_agreement,
    check_jones_consistency, check_theta, CheckSpec,
};
pub use compare::{compare_cyclo, compare_laurent, compare_series, compare_values};
pub use golden::{golden_families, golden_u_series};
pub use mutation::Mutation;
pub use report::{CheckReport, Status, Witness};
pub use suite::{run_mutations, run_specs, run_suite, MutationOutcome, Profile};

pub(crate) use checks::conclude;
pub(crate) use mutation::Tamper;
