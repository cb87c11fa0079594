//! Representation theory of classical compact groups: weight
//! multiplicities, dimensions, irreducible decomposition, the built-in
//! torus-restriction embeddings, and τ-dimension data.

mod branching;
mod embedding;
mod group;
mod irrep;

pub use branching::{
    branch_multiplicity, decompose, restriction_decomposition, tau_dimension_datum,
};
pub use embedding::{
    conjugate_unitary_pair, identity_embedding, restrict_character, symplectic_orthogonal_pair,
    trivial_subgroup, Embedding,
};
pub use group::{Factor, Group, HighestWeight};
pub use irrep::{
    dimension, multiplicities, weight_multiplicities, weight_system, weyl_character,
    weyl_dimension, WeightTable,
};
