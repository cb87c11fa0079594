//! Encoding of hyperoctahedral-invariant characters as polynomials: the
//! orbit sum of `(k_1 ≥ ... ≥ k_n ≥ 0)` maps to `x_{k_1}···x_{k_n}`, and
//! the map extends linearly with exact coefficients.

use alloc::collections::BTreeSet;

use super::multipoly::{Monomial, MultiPoly};
use super::qsqrt2::QSqrt2;
use crate::character::FormalCharacter;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::weight::Weight;
use crate::weyl::WeylGroup;

/// Encode an invariant character of rank `n` as a polynomial.
///
/// The input must be integral and invariant under the full signed
/// permutation group of its rank; each orbit, with canonical representative
/// `k_1 ≥ ... ≥ k_n ≥ 0` and per-weight coefficient `c`, contributes
/// `c·|orbit| · x_{k_1}···x_{k_n}` (indices `0` are the suppressed `x_0`).
pub fn encode_invariant(f: &FormalCharacter) -> Result<MultiPoly> {
    if !f.is_integral() {
        return Err(Error::NotIntegral);
    }
    let w = WeylGroup::hyperoctahedral(f.rank());
    let mut done: BTreeSet<Weight> = BTreeSet::new();
    let mut out = MultiPoly::zero();
    for (lam, coeff) in f.terms() {
        let rep = w.dominant_rep(lam);
        if !done.insert(rep.clone()) {
            continue;
        }
        let orbit = w.orbit(&rep);
        for member in &orbit {
            if &f.coefficient(member) != coeff {
                return Err(Error::NotInvariant);
            }
        }
        let total = coeff * &Rational::from_int(orbit.len() as i64);
        out.add_term(monomial_of(&rep), QSqrt2::from_rational(total));
    }
    Ok(out)
}

fn monomial_of(rep: &Weight) -> Monomial {
    let ints = rep.to_ints().expect("integral representative");
    let indices: alloc::vec::Vec<u32> = ints.iter().map(|&k| k as u32).collect();
    Monomial::from_indices(&indices)
}
