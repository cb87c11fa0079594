//! Independent oracles used by the integration and acceptance suites.
//!
//! Each oracle recomputes a quantity along a route disjoint from the
//! implementation path it checks: definitional averages instead of orbit
//! grouping, and character division instead of the Freudenthal recursion.

// compiled once per test binary; not every binary uses every oracle
#![allow(dead_code)]

use dimdatum_core::character::{a_phi_lambda, FormalCharacter};
use dimdatum_core::rational::Rational;
use dimdatum_core::roots::RootSystem;
use dimdatum_core::weight::Weight;
use dimdatum_core::weyl::WeylGroup;

/// `F_{Φ,λ,W}` straight from the definition: `(1/|W|) Σ_{γ∈W} γ(A_{Φ,λ})`,
/// averaging over every single group element.
pub fn f_by_average(phi: &RootSystem, lambda: &Weight, w: &WeylGroup) -> FormalCharacter {
    let a = a_phi_lambda(phi, lambda).expect("rank match");
    let mut sum = FormalCharacter::zero(lambda.rank());
    let mut count: i64 = 0;
    for gamma in w.elements() {
        sum = &sum + &a.apply(&gamma);
        count += 1;
    }
    sum.scaled(&Rational::new(1, count))
}

/// The alternating sum `Σ_{w∈W_Φ} sgn(w) [w(μ)]`.
pub fn alternating_sum(phi: &RootSystem, mu: &Weight) -> FormalCharacter {
    let mut out = FormalCharacter::zero(mu.rank());
    for w in phi.weyl_group().elements() {
        out.add_term(w.apply(mu), Rational::from_int(w.sign()));
    }
    out
}

/// The irreducible character of highest weight `λ` by the quotient of
/// alternating sums (numerator over Weyl denominator), computed by exact
/// division on leading terms. Entirely independent of the Freudenthal
/// recursion.
pub fn character_by_division(phi: &RootSystem, lambda: &Weight) -> FormalCharacter {
    let delta = phi.delta();
    let numerator = alternating_sum(phi, &(lambda + &delta));
    let denominator = alternating_sum(phi, &delta);
    divide_exact(&numerator, &denominator)
}

/// Exact division in the group ring: repeatedly cancel the lexicographically
/// largest remainder term against the leading term of the divisor. Panics
/// if the quotient is not exact within a step budget.
pub fn divide_exact(num: &FormalCharacter, den: &FormalCharacter) -> FormalCharacter {
    let (lead_w, lead_c) = den
        .leading_term()
        .map(|(w, c)| (w.clone(), c.clone()))
        .expect("divisor must be nonzero");
    let mut rem = num.clone();
    let mut quotient = FormalCharacter::zero(num.rank());
    for _ in 0..100_000 {
        let Some((top_w, top_c)) = rem.leading_term().map(|(w, c)| (w.clone(), c.clone())) else {
            return quotient;
        };
        let q_w = &top_w - &lead_w;
        let q_c = &top_c * &lead_c.recip();
        quotient.add_term(q_w.clone(), q_c.clone());
        let piece = den
            .multiply(&FormalCharacter::term(q_w, q_c))
            .expect("rank");
        rem = &rem - &piece;
    }
    panic!("character division did not terminate");
}

/// Brute-force orbit by applying every group element.
pub fn orbit_by_enumeration(w: &WeylGroup, lambda: &Weight) -> std::collections::BTreeSet<Weight> {
    w.elements().map(|g| g.apply(lambda)).collect()
}
