//! Bailey pairs, the Bailey lemma and the identities built from them.

mod identities;
mod lemma;
mod pair;

pub use identities::{
    alpha_from_beta, andrews_conjugate_check, andrews_double_sum, andrews_sum_direct,
    bailey_limit_identity, bailey_step_check, bailey_verify, beta_from_alpha, conjugate_identity_check,
    conjugate_lhs, conjugate_rhs, infinite_sum, multisum_decomposition_check, pipeline_check,
};
pub use lemma::{bailey_step, iterate_infinite_steps, scaled_term, StepParam, StepWeights};
pub use pair::{
    kernel_alpha, multisum_alpha, multisum_alpha_second, multisum_beta_numerator, make_named_pair,
    star_alpha, star_beta_numerator, stepped_star_beta_numerator, AParam, BaileyPair, NamedPair,
    TermFn,
};

pub(crate) use identities::{
    andrews_conjugate_check_with, bailey_limit_identity_with, bailey_step_check_with,
    bailey_verify_with, multisum_decomposition_check_with,
    pipeline_check_with,
};
