//! Series and polynomial families attached to the torus knots `T(2,2t+1)`.

mod chain;
mod coeffs;
mod habiro;
mod jones;
mod params;
mod roots;
mod theta;
mod useries;

pub use chain::{chain_multinomial, ChainNode};
pub use coeffs::{c_multisum, c_product, CyclotomicCoeffs};
pub use habiro::{habiro_inverse, habiro_reconstruct, u_specialized_at_minus_q_pow};
pub use jones::{jones_hyper, jones_left, jones_morton, mirror};
pub use params::KnotFamilyParams;
pub use roots::{
    bernoulli_lhs, bernoulli_normalized, bernoulli_order, bernoulli_rhs, eval_f_at_root,
    u_eval_at_root,
};
pub use theta::{chi_periodic, theta_phi_product, theta_phi_sum, theta_scale};
pub use useries::u_series;

pub(crate) use coeffs::{c_product_z, multisum_chain};

