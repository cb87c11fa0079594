//! Formal characters: sparse exact-rational functions on a weight lattice,
//! and the Weyl-group constructions built from them — normalized orbit sums,
//! signed sums over a Weyl group, their averages, and the Weyl product.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::perm::SignedPermutation;
use crate::rational::Rational;
use crate::roots::RootSystem;
use crate::weight::Weight;
use crate::weyl::WeylGroup;

/// A finite `Q`-linear combination of lattice points, written
/// `Σ c_λ [λ]`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct FormalCharacter {
    rank: usize,
    terms: BTreeMap<Weight, Rational>,
}

impl FormalCharacter {
    pub fn zero(rank: usize) -> Self {
        FormalCharacter {
            rank,
            terms: BTreeMap::new(),
        }
    }

    /// The single term `[λ]`.
    pub fn delta(lambda: Weight) -> Self {
        Self::term(lambda, Rational::one())
    }

    /// The single term `c·[λ]`.
    pub fn term(lambda: Weight, coeff: Rational) -> Self {
        let mut ch = FormalCharacter::zero(lambda.rank());
        ch.add_term(lambda, coeff);
        ch
    }

    /// `[0]`, the unit of the character ring.
    pub fn one(rank: usize) -> Self {
        Self::delta(Weight::zero(rank))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &Rational)> {
        self.terms.iter()
    }

    /// The term with the lexicographically largest weight.
    pub fn leading_term(&self) -> Option<(&Weight, &Rational)> {
        self.terms.last_key_value()
    }

    pub fn coefficient(&self, w: &Weight) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    /// Add `c·[λ]`, collecting exactly and dropping a resulting zero.
    pub fn add_term(&mut self, lambda: Weight, coeff: Rational) {
        debug_assert_eq!(lambda.rank(), self.rank, "rank mismatch");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scaled(&self, c: &Rational) -> FormalCharacter {
        if c.is_zero() {
            return FormalCharacter::zero(self.rank);
        }
        FormalCharacter {
            rank: self.rank,
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
        }
    }

    /// The image under a signed permutation, `γ·f = Σ c_λ [γλ]`.
    pub fn apply(&self, gamma: &SignedPermutation) -> FormalCharacter {
        let mut out = FormalCharacter::zero(self.rank);
        for (w, c) in &self.terms {
            out.add_term(gamma.apply(w), c.clone());
        }
        out
    }

    /// Ring product: convolution of supports with exact coefficients.
    pub fn multiply(&self, other: &FormalCharacter) -> Result<FormalCharacter> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: other.rank,
            });
        }
        let mut out = FormalCharacter::zero(self.rank);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        Ok(out)
    }

    /// External product on concatenated coordinates; ranks add.
    pub fn concat_product(&self, other: &FormalCharacter) -> Result<FormalCharacter> {
        let mut out = FormalCharacter::zero(self.rank + other.rank);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.concat(b), ca * cb);
            }
        }
        Ok(out)
    }

    /// True if every stored weight is integral.
    pub fn is_integral(&self) -> bool {
        self.terms.keys().all(Weight::is_integral)
    }

    /// True if fixed by every element of `w` (term-by-term orbit check).
    pub fn is_invariant_under(&self, w: &WeylGroup) -> bool {
        if self.rank != w.rank() {
            return false;
        }
        for (lam, c) in &self.terms {
            for member in w.orbit(lam) {
                if self.coefficient(&member) != *c {
                    return false;
                }
            }
        }
        true
    }

    /// Canonical text form: one `p/q : (k_1,...,k_n)` line per term, sorted
    /// by weight in lexicographic order.
    pub fn canonical_text(&self) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        for (w, c) in &self.terms {
            let _ = writeln!(out, "{} : {}", c.ratio_string(), w);
        }
        out
    }
}

impl Add for &FormalCharacter {
    type Output = FormalCharacter;
    fn add(self, rhs: &FormalCharacter) -> FormalCharacter {
        debug_assert_eq!(self.rank, rhs.rank);
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &FormalCharacter {
    type Output = FormalCharacter;
    fn sub(self, rhs: &FormalCharacter) -> FormalCharacter {
        debug_assert_eq!(self.rank, rhs.rank);
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Neg for &FormalCharacter {
    type Output = FormalCharacter;
    fn neg(self) -> FormalCharacter {
        self.scaled(&(-Rational::one()))
    }
}

impl fmt::Debug for FormalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·[{w}]")?;
        }
        Ok(())
    }
}

/// The normalized orbit sum `χ*_{λ,W} = (1/|W|) Σ_{γ∈W} [γλ]`: each orbit
/// member carries coefficient `1/|orbit|`.
pub fn chi_star(lambda: &Weight, w: &WeylGroup) -> Result<FormalCharacter> {
    if lambda.rank() != w.rank() {
        return Err(Error::RankMismatch {
            expected: w.rank(),
            found: lambda.rank(),
        });
    }
    let orbit = w.orbit(lambda);
    let coeff = Rational::from_int(orbit.len() as i64).recip();
    let mut out = FormalCharacter::zero(lambda.rank());
    for member in orbit {
        out.add_term(member, coeff.clone());
    }
    Ok(out)
}

/// The signed sum `A_{Φ,λ} = Σ_{w∈W_Φ} sgn(w) [λ + δ_Φ - wδ_Φ]`.
pub fn a_phi_lambda(phi: &RootSystem, lambda: &Weight) -> Result<FormalCharacter> {
    if lambda.rank() != phi.rank() {
        return Err(Error::RankMismatch {
            expected: phi.rank(),
            found: lambda.rank(),
        });
    }
    let delta = phi.delta();
    let shift = lambda + &delta;
    let mut out = FormalCharacter::zero(lambda.rank());
    for w in phi.weyl_group().elements() {
        let term = &shift - &w.apply(&delta);
        out.add_term(term, Rational::from_int(w.sign()));
    }
    Ok(out)
}

/// `F_{Φ,λ,W} = (1/|W|) Σ_{γ∈W} γ(A_{Φ,λ})`, computed through the identity
/// `F = Σ_{w∈W_Φ} sgn(w) χ*_{λ+δ-wδ, W}`, grouping the signed terms by
/// `W`-orbit first so each orbit sum is expanded once.
///
/// Requires `W ⊇ W_Φ`.
pub fn f_phi_lambda_w(phi: &RootSystem, lambda: &Weight, w: &WeylGroup) -> Result<FormalCharacter> {
    if lambda.rank() != phi.rank() {
        return Err(Error::RankMismatch {
            expected: phi.rank(),
            found: lambda.rank(),
        });
    }
    let weyl = phi.weyl_group();
    if !w.contains(&weyl) {
        return Err(Error::GroupTooSmall {
            weyl: alloc::format!("{weyl:?}"),
            averaging: alloc::format!("{w:?}"),
        });
    }
    let delta = phi.delta();
    let shift = lambda + &delta;
    let mut signed: BTreeMap<Weight, i64> = BTreeMap::new();
    for g in weyl.elements() {
        let rep = w.dominant_rep(&(&shift - &g.apply(&delta)));
        *signed.entry(rep).or_insert(0) += g.sign();
    }
    let mut out = FormalCharacter::zero(lambda.rank());
    for (rep, count) in signed {
        if count == 0 {
            continue;
        }
        let orbit = w.orbit(&rep);
        let coeff = Rational::new(count, orbit.len() as i64);
        for member in orbit {
            out.add_term(member, coeff.clone());
        }
    }
    Ok(out)
}

/// The Weyl product `F_Φ = (1/|W_Φ|) Π_{α∈Φ} (1 - [α])`, expanded exactly.
pub fn weyl_product(phi: &RootSystem) -> FormalCharacter {
    let rank = phi.rank();
    let mut prod = FormalCharacter::one(rank);
    for alpha in phi.roots() {
        let factor = &FormalCharacter::one(rank) - &FormalCharacter::delta(alpha);
        prod = prod.multiply(&factor).expect("equal rank");
    }
    let order = phi.weyl_group().order();
    prod.scaled(&Rational::from_int(order as i64).recip())
}

/// The `W`-average `(1/|W|) Σ_{γ∈W} γ(f)`, i.e. the projection of `f` onto
/// the `W`-invariant subspace.
pub fn symmetrize(f: &FormalCharacter, w: &WeylGroup) -> Result<FormalCharacter> {
    if f.rank() != w.rank() {
        return Err(Error::RankMismatch {
            expected: w.rank(),
            found: f.rank(),
        });
    }
    // group the terms of f by orbit: the average of Σ c_λ [λ] is
    // Σ_orbits (Σ_{λ in orbit} c_λ / |orbit|) over the orbit members
    let mut by_rep: BTreeMap<Weight, Rational> = BTreeMap::new();
    for (lam, c) in f.terms() {
        let rep = w.dominant_rep(lam);
        match by_rep.entry(rep) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
            }
        }
    }
    let mut out = FormalCharacter::zero(f.rank());
    for (rep, total) in by_rep {
        if total.is_zero() {
            continue;
        }
        let orbit = w.orbit(&rep);
        let coeff = total * Rational::from_int(orbit.len() as i64).recip();
        for member in orbit {
            out.add_term(member, coeff.clone());
        }
    }
    Ok(out)
}

/// Convenience: iterate all weights with given doubled-coordinate bound.
/// Used by sweep-style tests.
pub fn weights_in_box(rank: usize, bound: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    let mut current = alloc::vec![-bound; rank];
    loop {
        out.push(Weight::from_ints(&current));
        let mut i = 0;
        loop {
            if i == rank {
                return out;
            }
            current[i] += 1;
            if current[i] <= bound {
                break;
            }
            current[i] = -bound;
            i += 1;
        }
    }
}
