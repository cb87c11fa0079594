//! Polynomial encoding of invariant characters: the coefficient ring
//! `Q(√2)`, sparse polynomials in `x_0, x_1, ...`, the six structured
//! matrices with exact symbolic determinants, and the family polynomials
//! with their identity verifiers.

mod encode;
mod family;
mod matrix;
mod multipoly;
mod qsqrt2;

pub use encode::encode_invariant;
pub use family::{
    factorization_weights, family_polynomial, sorted_weights, verify_determinant_identities,
    verify_factorization, FactorizationCheck, FamilyKind, IdentityCheck,
};
pub use matrix::{build_matrix, symbolic_det, MatrixKind};
pub use multipoly::{Monomial, MultiPoly};
pub use qsqrt2::QSqrt2;
