//! Representation-theoretic checks: the Freudenthal recursion against the
//! character-division oracle, decomposition round trips, branching through
//! the built-in embeddings, and the agreement of τ-dimension data for the
//! paired subgroups of SU(6).

mod common;

use std::collections::BTreeMap;

use dimdatum_core::character::weights_in_box;
use dimdatum_core::rational::Rational;
use dimdatum_core::reps::{
    branch_multiplicity, conjugate_unitary_pair, decompose, multiplicities,
    restriction_decomposition, symplectic_orthogonal_pair, tau_dimension_datum,
    weight_multiplicities, weyl_character, weyl_dimension, Embedding, Factor, Group, HighestWeight,
};
use dimdatum_core::roots::{RootKind, RootSystem};
use dimdatum_core::spectra::{casimir_eigenvalue, enumerate_irreps, CasimirForm};
use dimdatum_core::weight::Weight;

#[test]
fn freudenthal_matches_division_oracle() {
    // every rank ≤ 2 classical system, dominant weights with coordinates ≤ 3
    let systems = [
        RootSystem::new(RootKind::A, 2),
        RootSystem::new(RootKind::B, 2),
        RootSystem::new(RootKind::C, 1),
        RootSystem::new(RootKind::C, 2),
        RootSystem::new(RootKind::D, 2),
    ];
    for phi in &systems {
        for lam in weights_in_box(phi.rank(), 3) {
            if !phi.is_dominant(&lam) {
                continue;
            }
            let freudenthal = multiplicities(phi, &lam).unwrap();
            let oracle = common::character_by_division(phi, &lam);
            assert_eq!(
                oracle.len(),
                freudenthal.len(),
                "{phi:?} {lam}: support size"
            );
            for (w, m) in &freudenthal {
                assert_eq!(
                    oracle.coefficient(w),
                    Rational::from_int(*m as i64),
                    "{phi:?} {lam} at {w}"
                );
            }
        }
    }
}

#[test]
fn su3_adjoint_against_oracle() {
    let phi = RootSystem::new(RootKind::A, 3);
    let lam = Weight::from_ints(&[2, 1, 0]);
    let freudenthal = multiplicities(&phi, &lam).unwrap();
    let oracle = common::character_by_division(&phi, &lam);
    for (w, m) in &freudenthal {
        assert_eq!(oracle.coefficient(w), Rational::from_int(*m as i64));
    }
    assert_eq!(freudenthal.values().sum::<u64>(), 8);
}

#[test]
fn mass_equals_dimension_everywhere() {
    let groups: Vec<Group> = vec![
        Group::special_unitary(3),
        Group::new(vec![Factor::Unitary(3)]),
        Group::new(vec![Factor::Symplectic(2)]),
        Group::new(vec![Factor::OrthogonalEven(3)]),
        Group::new(vec![Factor::Symplectic(1), Factor::OrthogonalEven(2)]),
    ];
    for g in &groups {
        for rho in enumerate_irreps(g, &CasimirForm::trace(), &Rational::from_int(6)).unwrap() {
            let t = weight_multiplicities(g, &rho).unwrap();
            assert_eq!(
                t.total(),
                weyl_dimension(g, &rho).unwrap(),
                "{} {rho}",
                g.name()
            );
        }
    }
}

#[test]
fn decompose_of_irreducible_round_trips() {
    // twenty sampled dominant weights across several groups
    let u3 = Group::new(vec![Factor::Unitary(3)]);
    let sp_so = Group::new(vec![Factor::Symplectic(1), Factor::OrthogonalEven(2)]);
    let su6 = Group::special_unitary(6);
    let mut cases: Vec<(Group, HighestWeight)> = Vec::new();
    for coords in [
        [1i64, 0, 0],
        [1, 1, 0],
        [2, 1, 0],
        [1, 0, -1],
        [2, 0, -2],
        [2, 1, -1],
        [0, -1, -2],
        [3, 1, 0],
    ] {
        cases.push((u3.clone(), u3.highest_weight(&[&coords]).unwrap()));
    }
    for (a, b) in [
        (&[0i64][..], &[1i64, 0][..]),
        (&[1], &[0, 0]),
        (&[1], &[1, -1]),
        (&[2], &[1, 1]),
        (&[2], &[2, 0]),
        (&[3], &[1, 0]),
        (&[1], &[2, -2]),
        (&[2], &[2, -1]),
    ] {
        cases.push((sp_so.clone(), sp_so.highest_weight(&[a, b]).unwrap()));
    }
    for coords in [
        [1i64, 0, 0, 0, 0, 0],
        [1, 1, 0, 0, 0, 0],
        [1, 1, 1, 0, 0, 0],
        [2, 1, 1, 1, 1, 0],
    ] {
        cases.push((su6.clone(), su6.highest_weight(&[&coords]).unwrap()));
    }
    assert_eq!(cases.len(), 20);
    for (g, hw) in cases {
        let ch = weyl_character(&g, &hw).unwrap();
        let decomposed = decompose(&g, &ch).unwrap();
        assert_eq!(
            decomposed,
            BTreeMap::from([(hw.clone(), 1)]),
            "{} {hw}",
            g.name()
        );
    }
}

#[test]
fn frobenius_mass_on_all_small_restrictions() {
    let e1 = conjugate_unitary_pair(1).unwrap();
    let e2 = symplectic_orthogonal_pair(1).unwrap();
    let g = Group::special_unitary(6);
    let rhos = enumerate_irreps(&g, &CasimirForm::trace(), &Rational::from_int(12)).unwrap();
    for e in [&e1, &e2] {
        for rho in &rhos {
            let decomposed = restriction_decomposition(e, rho).unwrap();
            let mass: u64 = decomposed
                .iter()
                .map(|(tau, m)| m * weyl_dimension(e.source(), tau).unwrap())
                .sum();
            assert_eq!(mass, weyl_dimension(&g, rho).unwrap(), "{rho}");
        }
    }
}

fn paired_taus(
    e1: &Embedding,
    e2: &Embedding,
    lambda: &[i64; 3],
) -> (HighestWeight, HighestWeight) {
    let tau1 = e1.source().highest_weight(&[&lambda[..]]).unwrap();
    let tau2 = e2
        .source()
        .highest_weight(&[&lambda[..1], &lambda[..2]])
        .unwrap();
    (tau1, tau2)
}

#[test]
fn paired_subgroups_have_equal_tau_dimension_data() {
    // the n=1 instance of the isospectral-pair family: λ = (k, k₂, -k) on
    // U(3) pairs with ((k), (k, k₂)) on Sp(1)×SO(4)
    let e1 = conjugate_unitary_pair(1).unwrap();
    let e2 = symplectic_orthogonal_pair(1).unwrap();
    let g = Group::special_unitary(6);
    let rhos = enumerate_irreps(&g, &CasimirForm::trace(), &Rational::from_int(12)).unwrap();
    assert!(rhos.len() >= 7);
    for lambda in [
        [0i64, 0, 0],
        [1, 0, -1],
        [2, 0, -2],
        [1, 1, -1],
        [2, 2, -2],
        [2, 1, -2],
    ] {
        let (tau1, tau2) = paired_taus(&e1, &e2, &lambda);
        let d1 = tau_dimension_datum(&e1, &tau1, &rhos).unwrap();
        let d2 = tau_dimension_datum(&e2, &tau2, &rhos).unwrap();
        let v1: Vec<u64> = d1.into_iter().map(|(_, m)| m).collect();
        let v2: Vec<u64> = d2.into_iter().map(|(_, m)| m).collect();
        assert_eq!(v1, v2, "λ = {lambda:?}");
    }
}

#[test]
fn adjoint_branching_values() {
    // hand-checked values for ρ = adjoint of SU(6)
    let e1 = conjugate_unitary_pair(1).unwrap();
    let e2 = symplectic_orthogonal_pair(1).unwrap();
    let g = Group::special_unitary(6);
    let adjoint = g.highest_weight(&[&[2, 1, 1, 1, 1, 0]]).unwrap();
    let (tau1, tau2) = paired_taus(&e1, &e2, &[1, 0, -1]);
    assert_eq!(branch_multiplicity(&e1, &adjoint, &tau1).unwrap(), 2);
    assert_eq!(branch_multiplicity(&e2, &adjoint, &tau2).unwrap(), 2);
    // dimension-datum values (trivial τ): one invariant line each
    assert_eq!(
        branch_multiplicity(&e1, &adjoint, &e1.source().trivial_weight()).unwrap(),
        1
    );
    assert_eq!(
        branch_multiplicity(&e2, &adjoint, &e2.source().trivial_weight()).unwrap(),
        1
    );
}

#[test]
fn casimir_values_of_su6_irreps() {
    let g = Group::special_unitary(6);
    let form = CasimirForm::trace();
    let expect: Vec<(&[i64], (i64, i64))> = vec![
        (&[1, 0, 0, 0, 0, 0], (35, 6)),
        (&[1, 1, 0, 0, 0, 0], (28, 3)),
        (&[1, 1, 1, 0, 0, 0], (21, 2)),
        (&[2, 1, 1, 1, 1, 0], (12, 1)),
    ];
    for (coords, (num, den)) in expect {
        let hw = g.highest_weight(&[coords]).unwrap();
        assert_eq!(
            casimir_eigenvalue(&g, &hw, &form).unwrap(),
            Rational::new(num, den),
            "{coords:?}"
        );
    }
}
