//! Terminating Gauss hypergeometric series and the Jacobi, Krawtchouk and
//! Legendre polynomials built from them.

mod hyper;
pub(crate) mod intpoly;
mod jacobi;
mod krawtchouk;
pub(crate) mod series;

pub use hyper::{hyp2f1_terminating, Hyp21Spec};
pub use jacobi::{
    jacobi_coefficients, jacobi_eval, jacobi_norm, jacobi_norm_exact, jacobi_rodrigues,
    jacobi_rodrigues_coefficients, jacobi_via_2f1, legendre, JacobiParams,
};
pub use krawtchouk::krawtchouk;
