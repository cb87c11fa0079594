//! Decomposition of characters into irreducibles and branching
//! multiplicities through an embedding: the per-representation values of
//! the τ-dimension datum.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use super::embedding::Embedding;
use super::group::{Group, HighestWeight};
use super::irrep::{product_multiplicities, weight_multiplicities};
use crate::character::FormalCharacter;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::weight::Weight;

/// Decompose a genuine character of `group` into a multiset of highest
/// weights by iterated subtraction: pick the maximal dominant weight with
/// nonzero coefficient (largest pairing against the half-sum of positive
/// roots, ties broken lexicographically), subtract that irreducible's full
/// character, repeat.
///
/// Any negative or fractional multiplicity along the way means the input
/// was not a character under the current conventions and is reported as an
/// error rather than silently patched.
pub fn decompose(
    group: &Group,
    character: &FormalCharacter,
) -> Result<BTreeMap<HighestWeight, u64>> {
    if character.rank() != group.rank() {
        return Err(Error::RankMismatch {
            expected: group.rank(),
            found: character.rank(),
        });
    }
    let delta = group.delta();
    let mut work = character.clone();
    let mut out: BTreeMap<HighestWeight, u64> = BTreeMap::new();
    while !work.is_empty() {
        for (_, c) in work.terms() {
            if c.is_negative() {
                return Err(Error::NotCharacter(String::from(
                    "negative coefficient encountered",
                )));
            }
        }
        let top = select_top(group, &delta, &work)?;
        let coeff = work.coefficient(&top);
        let mult = coeff
            .to_u64()
            .ok_or_else(|| Error::NotCharacter(String::from("fractional multiplicity")))?;
        let flat = top.to_ints().expect("character weights are integral");
        let parts = group.split(&flat);
        let table = product_multiplicities(group, &parts)?;
        let scale = Rational::from_int(mult as i64);
        for (w, m) in table {
            work.add_term(w, -&(&scale * &Rational::from_int(m as i64)));
        }
        let hw = group.highest_weight(&parts)?;
        *out.entry(hw).or_insert(0) += mult;
    }
    Ok(out)
}

/// The subtraction target: among dominant support weights, the one with
/// maximal pairing against `δ`, ties broken by lexicographically largest.
fn select_top(group: &Group, delta: &Weight, work: &FormalCharacter) -> Result<Weight> {
    let mut best: Option<(i64, Weight)> = None;
    for (w, _) in work.terms() {
        let flat = w.to_ints().ok_or(Error::NotIntegral)?;
        let dominant = group
            .factors()
            .iter()
            .zip(group.split(&flat))
            .all(|(f, part)| f.is_dominant(part));
        if !dominant {
            continue;
        }
        let score = delta.dot_quarters(w);
        let better = match &best {
            None => true,
            Some((s, bw)) => score > *s || (score == *s && w > bw),
        };
        if better {
            best = Some((score, w.clone()));
        }
    }
    best.map(|(_, w)| w)
        .ok_or_else(|| Error::NotCharacter(String::from("no dominant weight in nonzero support")))
}

/// `dim Hom_H(τ, ρ|_H)`: the multiplicity of `τ` in the restriction of the
/// target irreducible `ρ` through the embedding.
pub fn branch_multiplicity(e: &Embedding, rho: &HighestWeight, tau: &HighestWeight) -> Result<u64> {
    let decomposed = restriction_decomposition(e, rho)?;
    Ok(decomposed.get(tau).copied().unwrap_or(0))
}

/// The full decomposition of `ρ|_H` into source irreducibles.
pub fn restriction_decomposition(
    e: &Embedding,
    rho: &HighestWeight,
) -> Result<BTreeMap<HighestWeight, u64>> {
    let table = weight_multiplicities(e.target(), rho)?;
    let restricted = e.restrict_table(&table)?;
    decompose(e.source(), &restricted)
}

/// The τ-dimension datum on a chosen list of target irreducibles:
/// `ρ ↦ dim Hom_H(τ, ρ|_H)`.
pub fn tau_dimension_datum(
    e: &Embedding,
    tau: &HighestWeight,
    rhos: &[HighestWeight],
) -> Result<Vec<(HighestWeight, u64)>> {
    rhos.iter()
        .map(|rho| Ok((rho.clone(), branch_multiplicity(e, rho, tau)?)))
        .collect()
}
