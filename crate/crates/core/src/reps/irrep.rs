//! Irreducible characters of classical factors: weight systems, exact
//! multiplicities by the Freudenthal recursion, and the Weyl dimension
//! formula. Everything is generic over a root system realized in `Z^n`;
//! product groups tensor the per-factor results.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::group::{Group, HighestWeight};
use crate::character::FormalCharacter;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::roots::RootSystem;
use crate::weight::Weight;

/// All weights of the irreducible with highest weight `λ`: the closure of
/// `{λ}` under the rule "subtract `α, 2α, ..., ⟨μ,α∨⟩·α` from `μ` for every
/// positive root `α` with positive pairing".
pub fn weight_system(phi: &RootSystem, lambda: &Weight) -> Result<BTreeSet<Weight>> {
    if lambda.rank() != phi.rank() {
        return Err(Error::RankMismatch {
            expected: phi.rank(),
            found: lambda.rank(),
        });
    }
    if !phi.is_dominant(lambda) {
        return Err(Error::NotDominant);
    }
    let mut set: BTreeSet<Weight> = BTreeSet::new();
    let mut queue: Vec<Weight> = alloc::vec![lambda.clone()];
    set.insert(lambda.clone());
    while let Some(mu) = queue.pop() {
        for alpha in phi.positive_roots() {
            let pairing = phi.pairing(&mu, alpha)?;
            for k in 1..=pairing.max(0) {
                let mut next = mu.clone();
                for _ in 0..k {
                    next = &next - alpha;
                }
                if set.insert(next.clone()) {
                    queue.push(next);
                }
            }
        }
    }
    Ok(set)
}

/// Exact weight multiplicities of the irreducible with highest weight `λ`,
/// by the Freudenthal recursion processed in decreasing height order.
pub fn multiplicities(phi: &RootSystem, lambda: &Weight) -> Result<BTreeMap<Weight, u64>> {
    let system = weight_system(phi, lambda)?;
    let delta = phi.delta();
    let norm = |mu: &Weight| {
        let shifted = mu + &delta;
        shifted.dot_quarters(&shifted)
    };
    let top_norm = norm(lambda);
    // process in decreasing (μ, δ): every weight μ+jα needed on the right
    // of the recursion comes strictly earlier
    let mut order: Vec<Weight> = system.iter().cloned().collect();
    order.sort_by(|a, b| {
        delta
            .dot_quarters(b)
            .cmp(&delta.dot_quarters(a))
            .then_with(|| b.cmp(a))
    });
    let mut mult: BTreeMap<Weight, u64> = BTreeMap::new();
    for mu in order {
        if mu == *lambda {
            mult.insert(mu, 1);
            continue;
        }
        let mut numer: i128 = 0;
        for alpha in phi.positive_roots() {
            let mut nu = &mu + alpha;
            while system.contains(&nu) {
                let m = mult[&nu] as i128;
                numer += 2 * (nu.dot_quarters(alpha) as i128) * m;
                nu = &nu + alpha;
            }
        }
        let denom = (top_norm - norm(&mu)) as i128;
        assert!(denom > 0, "freudenthal denominator must be positive");
        assert!(
            numer > 0 && numer % denom == 0,
            "freudenthal recursion produced a non-integer multiplicity"
        );
        mult.insert(mu, (numer / denom) as u64);
    }
    Ok(mult)
}

/// The Weyl dimension `Π_{α>0} (λ+δ, α) / (δ, α)`, as an exact integer.
pub fn dimension(phi: &RootSystem, lambda: &Weight) -> Result<u64> {
    if lambda.rank() != phi.rank() {
        return Err(Error::RankMismatch {
            expected: phi.rank(),
            found: lambda.rank(),
        });
    }
    if !phi.is_dominant(lambda) {
        return Err(Error::NotDominant);
    }
    let delta = phi.delta();
    let shifted = lambda + &delta;
    let mut dim = Rational::one();
    for alpha in phi.positive_roots() {
        dim = dim * Rational::new(shifted.dot_quarters(alpha), delta.dot_quarters(alpha));
    }
    Ok(dim.to_u64().expect("weyl dimension is a positive integer"))
}

/// Multiplicity table of one factor at raw (not normalized) coordinates.
pub(crate) fn factor_multiplicities(
    phi: &RootSystem,
    coords: &[i64],
) -> Result<BTreeMap<Weight, u64>> {
    multiplicities(phi, &Weight::from_ints(coords))
}

/// A complete weight-multiplicity table of an irreducible representation of
/// a product group.
#[derive(Debug, Clone)]
pub struct WeightTable {
    group: Group,
    highest: HighestWeight,
    mult: BTreeMap<Weight, u64>,
}

impl WeightTable {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn highest(&self) -> &HighestWeight {
        &self.highest
    }

    pub fn multiplicities(&self) -> &BTreeMap<Weight, u64> {
        &self.mult
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.mult.get(w).copied().unwrap_or(0)
    }

    /// Total mass `Σ_μ mult(μ)`, the dimension of the representation.
    pub fn total(&self) -> u64 {
        self.mult.values().sum()
    }

    /// The table as a formal character with integer coefficients.
    pub fn to_character(&self) -> FormalCharacter {
        let mut ch = FormalCharacter::zero(self.group.rank());
        for (w, &m) in &self.mult {
            ch.add_term(w.clone(), Rational::from_int(m as i64));
        }
        ch
    }
}

/// Tensor the per-factor tables at raw coordinates into a product table.
pub(crate) fn product_multiplicities(
    group: &Group,
    parts: &[&[i64]],
) -> Result<BTreeMap<Weight, u64>> {
    let mut acc: BTreeMap<Weight, u64> = BTreeMap::new();
    acc.insert(Weight::zero(0), 1);
    for (factor, part) in group.factors().iter().zip(parts) {
        let table = factor_multiplicities(&factor.root_system(), part)?;
        let mut next: BTreeMap<Weight, u64> = BTreeMap::new();
        for (w1, m1) in &acc {
            for (w2, m2) in &table {
                let w = w1.concat(w2);
                *next.entry(w).or_insert(0) += m1 * m2;
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// The complete weight-multiplicity table of the irreducible with highest
/// weight `λ`; total mass equals the Weyl dimension.
pub fn weight_multiplicities(group: &Group, lambda: &HighestWeight) -> Result<WeightTable> {
    let parts: Vec<&[i64]> = lambda.parts().iter().map(|p| p.as_slice()).collect();
    if parts.len() != group.factors().len() {
        return Err(Error::GroupMismatch);
    }
    let mult = product_multiplicities(group, &parts)?;
    Ok(WeightTable {
        group: group.clone(),
        highest: lambda.clone(),
        mult,
    })
}

/// The irreducible character as a formal character on the full torus.
pub fn weyl_character(group: &Group, lambda: &HighestWeight) -> Result<FormalCharacter> {
    Ok(weight_multiplicities(group, lambda)?.to_character())
}

/// The dimension of the irreducible of a product group.
pub fn weyl_dimension(group: &Group, lambda: &HighestWeight) -> Result<u64> {
    if lambda.parts().len() != group.factors().len() {
        return Err(Error::GroupMismatch);
    }
    let mut dim = 1u64;
    for (factor, part) in group.factors().iter().zip(lambda.parts()) {
        dim *= dimension(&factor.root_system(), &Weight::from_ints(part))?;
    }
    Ok(dim)
}
