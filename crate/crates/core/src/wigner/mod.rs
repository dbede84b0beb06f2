//! Matrix elements `t^l_{m,n}` of the spin-`l` representation.
//!
//! The action on degree-`2l` polynomials is `(t^l(A) f)(z) = f(A' z)` with
//! `A'` the transpose, so for `A = [[a, b], [c, d]]` the variables transform
//! as `z1 -> a z1 + c z2`, `z2 -> b z1 + d z2`. The basis is the normalized
//! monomial `psi_n = sqrt(C(2l, l-n)) z1^(l-n) z2^(l+n)`.

mod matrix;
mod poly;
mod routes;
mod symmetry;

pub use matrix::{index_of, WignerMatrix};
pub use poly::HomogPoly2;
pub use routes::{
    character, dmatrix_euler, matrix_via, matrix_via_angles, oracle_matrix, rotation, tmn_hyp,
    tmn_hyp_complementary, tmn_jacobi, tmn_krawtchouk, tmn_rodrigues, tmn_sum, Route,
};
pub use symmetry::{apply_symmetry, quadrant_symmetry, to_quadrant, Symmetry};
