//! Integration over SU(2) against the normalized Haar measure.
//!
//! Writing `x = cos 2 theta`, the measure is `dx/2 * dphi/2pi * dpsi/2pi` in
//! the Euler chart. A product of Gauss–Legendre nodes in `x` with uniform
//! nodes in `phi` and `psi` integrates products of matrix elements up to the
//! grid's [`ExactnessBudget`] without truncation error.

mod checks;
mod quadrature;

pub use checks::{
    addition_element, addition_formula_check, character_norm, jacobi_orthogonality_check,
    jacobi_weight_orthogonality, legendre_product_check, monte_carlo, peter_weyl_gram,
    schur_check, MonteCarloEstimate, SchurReport,
};
pub use quadrature::{
    build_grid, gauss_legendre, integrate, integrate_many, ExactnessBudget, HaarGrid, HaarNode,
};
