//! Irreducible representations of SU(2) and the orthogonal polynomials in
//! their matrix elements.
//!
//! The representation `t^l` acts on homogeneous polynomials of degree `2l` in
//! two variables by `(t^l(A) f)(z) = f(A' z)`. Its matrix elements
//! `t^l_{m,n}` in the normalized monomial basis are computed here along
//! several independent routes:
//!
//! * [`wigner::oracle_matrix`] expands the generating function symbolically;
//! * [`wigner::tmn_sum`] is the explicit finite sum over binomials;
//! * [`wigner::tmn_hyp`] and [`wigner::tmn_jacobi`] use the Gauss
//!   hypergeometric and Jacobi polynomial forms;
//! * [`wigner::dmatrix_euler`] evaluates the Euler-angle form and extends it
//!   by symmetry;
//! * [`wigner::tmn_rodrigues`] and [`wigner::tmn_krawtchouk`] cover the real
//!   rotation subgroup.
//!
//! [`haar`] integrates over SU(2) with an exactly normalized Haar measure and
//! checks Schur orthogonality to rounding level.

pub mod cli;
pub mod error;
pub mod exactcomb;
pub mod group;
pub mod haar;
pub mod specfun;
pub mod wigner;

pub use error::{Error, Result};
pub use exactcomb::HalfInt;
pub use group::{EulerAngles, Mat2C};
pub use wigner::WignerMatrix;
