//! Exact computational machinery for characters of classical compact Lie
//! groups: Weyl-orbit sums on the lattice `Z^n`, the polynomial encoding of
//! hyperoctahedral-invariant characters together with its structured
//! determinant identities, branching multiplicities for two families of
//! subgroups of `SU(4n+2)`, and Casimir eigenvalue spectra of induced
//! hermitian vector bundles.
//!
//! All arithmetic is exact: coefficients are arbitrary-precision rationals
//! (optionally extended by `√2`), weights are integer or half-integer
//! lattice vectors stored with doubled coordinates. No floating point is
//! used anywhere, so multiset equality of spectra is decidable.
//!
//! The crate is `no_std` (with `alloc`); all values are immutable after
//! construction and every operation is a pure function, so concurrent use
//! from multiple threads is safe.

#![no_std]

extern crate alloc;

pub mod character;
pub mod error;
pub mod perm;
pub mod poly;
pub mod rational;
pub mod reps;
pub mod roots;
pub mod spectra;
pub mod weight;
pub mod weyl;

pub use character::FormalCharacter;
pub use error::{Error, Result};
pub use rational::Rational;
pub use roots::{RootKind, RootSystem};
pub use weight::Weight;
pub use weyl::{WeylGroup, WeylKind};
