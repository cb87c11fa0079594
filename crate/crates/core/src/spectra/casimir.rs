//! Casimir eigenvalues in the trace form, and complete enumeration of
//! irreducibles below an eigenvalue cutoff.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::poly::sorted_weights;
use crate::rational::Rational;
use crate::reps::{Factor, Group, HighestWeight};

/// The invariant bilinear form used for Casimir eigenvalues: the trace form
/// `⟨e_i, e_j⟩ = δ_ij` on each factor, with `SU(N)` weights centered by
/// subtracting their mean before evaluation.
///
/// Isospectrality statements compare bundles over the same group, so any
/// fixed invariant form works; the trace form keeps every eigenvalue an
/// exact rational.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CasimirForm;

impl CasimirForm {
    pub fn trace() -> Self {
        CasimirForm
    }

    /// The eigenvalue `(λ, λ + 2δ)` of one factor at raw coordinates.
    pub fn factor_value(&self, factor: &Factor, coords: &[i64]) -> Rational {
        let n = factor.rank() as i64;
        let delta_doubled = factor.root_system().delta();
        // work with exact rational coordinate vectors
        let mean = match factor {
            Factor::SpecialUnitary(_) => Rational::new(coords.iter().sum::<i64>(), n.max(1)),
            _ => Rational::zero(),
        };
        let mut value = Rational::zero();
        for (i, &k) in coords.iter().enumerate() {
            let lam_i = Rational::from_int(k) - &mean;
            let delta_i = Rational::new(delta_doubled.doubled()[i], 2);
            // λ_i² + 2 λ_i δ_i
            value = value + &lam_i * &(&lam_i + &(Rational::from_int(2) * &delta_i));
        }
        value
    }

    /// The Casimir eigenvalue of an irreducible of a product group: the sum
    /// of the per-factor values. Non-negative, zero exactly for the trivial
    /// representation.
    pub fn value(&self, group: &Group, rho: &HighestWeight) -> Result<Rational> {
        if rho.parts().len() != group.factors().len() {
            return Err(Error::GroupMismatch);
        }
        let mut total = Rational::zero();
        for (factor, part) in group.factors().iter().zip(rho.parts()) {
            total += &self.factor_value(factor, part);
        }
        Ok(total)
    }
}

/// `casimirEigenvalue(G, ρ)` in the trace form.
pub fn casimir_eigenvalue(
    group: &Group,
    rho: &HighestWeight,
    form: &CasimirForm,
) -> Result<Rational> {
    form.value(group, rho)
}

fn isqrt_floor(bound: &Rational) -> i64 {
    if bound.is_negative() {
        return -1;
    }
    let floor: BigInt = bound.floor();
    floor.sqrt().to_i64().expect("enumeration bound fits i64")
}

/// Dominant coordinate vectors of one factor with Casimir value at most
/// `cutoff`, each paired with its exact value.
fn factor_candidates(
    factor: &Factor,
    form: &CasimirForm,
    cutoff: &Rational,
) -> Vec<(Vec<i64>, Rational)> {
    let mut raw: Vec<Vec<i64>> = Vec::new();
    match *factor {
        Factor::SpecialUnitary(n) => {
            // (λ̄,λ̄) = (1/N)·Σ_{i<j}(k_i-k_j)² ≥ k_1²/N once k_N = 0
            let bound = isqrt_floor(&(Rational::from_int(n as i64) * cutoff));
            for mut head in sorted_weights(n.saturating_sub(1), 0, bound.max(0)) {
                head.push(0);
                raw.push(head);
            }
        }
        Factor::Unitary(n) => {
            // (λ,λ) = Σk² ≤ value since (λ,2δ) ≥ 0 for dominant λ
            let bound = isqrt_floor(cutoff);
            raw.extend(sorted_weights(n, -bound.max(0), bound.max(0)));
        }
        Factor::Symplectic(n) => {
            let bound = isqrt_floor(cutoff);
            raw.extend(sorted_weights(n, 0, bound.max(0)));
        }
        Factor::OrthogonalEven(n) => {
            let bound = isqrt_floor(cutoff);
            for head in sorted_weights(n, 0, bound.max(0)) {
                if head.last().is_some_and(|&k| k > 0) {
                    let mut flipped = head.clone();
                    if let Some(last) = flipped.last_mut() {
                        *last = -*last;
                    }
                    raw.push(flipped);
                }
                raw.push(head);
            }
        }
    }
    let mut out = Vec::new();
    for coords in raw {
        if !factor.is_dominant(&coords) {
            continue;
        }
        let value = form.factor_value(factor, &coords);
        if &value <= cutoff {
            out.push((coords, value));
        }
    }
    out
}

/// Exactly the dominant `ρ` with `casimirEigenvalue(ρ) ≤ cutoff` (cutoff
/// inclusive), sorted by eigenvalue and then by weight.
pub fn enumerate_irreps(
    group: &Group,
    form: &CasimirForm,
    cutoff: &Rational,
) -> Result<Vec<HighestWeight>> {
    enumerate_scaled(group, form, cutoff, None)
}

/// Shared enumerator: with `scaling` present, factor `i` contributes
/// `value_i / a_i` to the total, so factor `i` is searched up to
/// `a_i · cutoff`.
pub(crate) fn enumerate_scaled(
    group: &Group,
    form: &CasimirForm,
    cutoff: &Rational,
    scaling: Option<&[Rational]>,
) -> Result<Vec<HighestWeight>> {
    if cutoff.is_negative() {
        return Err(Error::NotPositive);
    }
    if let Some(a) = scaling {
        if a.len() != group.factors().len() {
            return Err(Error::GroupMismatch);
        }
        if a.iter().any(|x| x.is_negative() || x.is_zero()) {
            return Err(Error::NotPositive);
        }
    }
    let per_factor: Vec<Vec<(Vec<i64>, Rational)>> = group
        .factors()
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let factor_cutoff = match scaling {
                Some(a) => cutoff * &a[i],
                None => cutoff.clone(),
            };
            factor_candidates(f, form, &factor_cutoff)
        })
        .collect();
    // cartesian product over factors, pruned by the accumulated eigenvalue
    let mut out: Vec<(Rational, HighestWeight)> = Vec::new();
    let mut parts: Vec<&[i64]> = Vec::new();
    cartesian(
        group,
        cutoff,
        scaling,
        &per_factor,
        &mut parts,
        &Rational::zero(),
        &mut out,
    );
    out.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    Ok(out.into_iter().map(|(_, hw)| hw).collect())
}

fn cartesian<'a>(
    group: &Group,
    cutoff: &Rational,
    scaling: Option<&[Rational]>,
    per_factor: &'a [Vec<(Vec<i64>, Rational)>],
    parts: &mut Vec<&'a [i64]>,
    acc: &Rational,
    out: &mut Vec<(Rational, HighestWeight)>,
) {
    let i = parts.len();
    if i == per_factor.len() {
        let hw = group
            .highest_weight(parts)
            .expect("candidates are dominant");
        out.push((acc.clone(), hw));
        return;
    }
    for (coords, value) in &per_factor[i] {
        let contribution = match scaling {
            Some(a) => value * &a[i].recip(),
            None => value.clone(),
        };
        let total = acc + &contribution;
        if &total > cutoff {
            continue;
        }
        parts.push(coords);
        cartesian(group, cutoff, scaling, per_factor, parts, &total, out);
        parts.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigenvalue_examples() {
        let form = CasimirForm::trace();
        // trivial → 0
        let g = Group::special_unitary(2);
        assert_eq!(
            casimir_eigenvalue(&g, &g.trivial_weight(), &form).unwrap(),
            Rational::zero()
        );
        // SU(2) defining → 3/2
        let std = g.highest_weight(&[&[1, 0]]).unwrap();
        assert_eq!(
            casimir_eigenvalue(&g, &std, &form).unwrap(),
            Rational::new(3, 2)
        );
        // SU(N) defining → (N²-1)/N
        for n in [2usize, 3, 6] {
            let g = Group::special_unitary(n);
            let mut coords = alloc::vec![0i64; n];
            coords[0] = 1;
            let std = g.highest_weight(&[&coords]).unwrap();
            let expect = Rational::new((n * n - 1) as i64, n as i64);
            assert_eq!(
                casimir_eigenvalue(&g, &std, &form).unwrap(),
                expect,
                "N={n}"
            );
        }
    }

    #[test]
    fn enumeration_examples() {
        let form = CasimirForm::trace();
        // cutoff 0 → only the trivial representation
        let g = Group::special_unitary(2);
        let got = enumerate_irreps(&g, &form, &Rational::zero()).unwrap();
        assert_eq!(got, alloc::vec![g.trivial_weight()]);
        // SU(2), cutoff 3/2 → trivial and the defining representation
        let got = enumerate_irreps(&g, &form, &Rational::new(3, 2)).unwrap();
        let std = g.highest_weight(&[&[1, 0]]).unwrap();
        assert_eq!(got, alloc::vec![g.trivial_weight(), std]);
        // SU(6), cutoff 35/6 → trivial, std, and the dual of std
        let g = Group::special_unitary(6);
        let got = enumerate_irreps(&g, &form, &Rational::new(35, 6)).unwrap();
        let std = g.highest_weight(&[&[1, 0, 0, 0, 0, 0]]).unwrap();
        let dual = g.highest_weight(&[&[1, 1, 1, 1, 1, 0]]).unwrap();
        assert_eq!(got.len(), 3);
        assert!(got.contains(&std) && got.contains(&dual));
    }

    #[test]
    fn negative_cutoff_rejected() {
        let g = Group::special_unitary(2);
        assert!(matches!(
            enumerate_irreps(&g, &CasimirForm::trace(), &Rational::from_int(-1)),
            Err(Error::NotPositive)
        ));
    }

    #[test]
    fn zero_iff_trivial_holds_on_enumeration() {
        let form = CasimirForm::trace();
        for g in [
            Group::special_unitary(2),
            Group::special_unitary(3),
            Group::new(alloc::vec![
                Factor::Symplectic(1),
                Factor::OrthogonalEven(2)
            ]),
        ] {
            for rho in enumerate_irreps(&g, &form, &Rational::from_int(8)).unwrap() {
                let v = casimir_eigenvalue(&g, &rho, &form).unwrap();
                assert!(!v.is_negative());
                assert_eq!(v.is_zero(), rho.is_trivial(), "{rho}");
            }
        }
    }
}
