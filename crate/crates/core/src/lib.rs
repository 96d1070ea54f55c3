//! Exact computation and cross-verification of q-series attached to the torus
//! knots `T(2, 2t+1)`: Kontsevich-Zagier type series and their duals at roots
//! of unity, cyclotomic expansions of colored Jones polynomials, Bailey pairs
//! and Hecke-type indefinite theta expansions.

pub mod algebra;
pub mod cli;
pub mod bailey;
pub mod error;
pub mod hecke;
pub mod io;
pub mod knot;
pub mod verify;

pub use error::{Error, Result};
