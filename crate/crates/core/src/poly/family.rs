//! The five polynomial families attached to classical root systems inside
//! `Z^n`, and exact verification of the determinant and factorization
//! identities relating them to the structured matrices.
//!
//! Each family value is computed by the brute-force route — the signed sum
//! over the Weyl group of the root system, averaged over the full signed
//! permutation group, then encoded as a polynomial — which is what makes
//! comparison against a matrix determinant a genuine two-route check.

use alloc::vec::Vec;

use super::encode::encode_invariant;
use super::matrix::{build_matrix, symbolic_det, MatrixKind};
use super::multipoly::MultiPoly;
use super::qsqrt2::QSqrt2;
use crate::character::f_phi_lambda_w;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::roots::{RootKind, RootSystem};
use crate::weight::Weight;
use crate::weyl::WeylGroup;

/// The five polynomial families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// From `A_{n-1}`.
    A,
    /// From `B_n`.
    B,
    /// The twist of `B`: `(-1)^{Σk_i} σ(b_n(λ))`.
    BPrime,
    /// From `C_n`.
    C,
    /// From `D_n`.
    D,
}

impl FamilyKind {
    pub fn tag(&self) -> &'static str {
        match self {
            FamilyKind::A => "a",
            FamilyKind::B => "b",
            FamilyKind::BPrime => "b'",
            FamilyKind::C => "c",
            FamilyKind::D => "d",
        }
    }
}

/// The family polynomial `a_n(λ)`, `b_n(λ)`, `b'_n(λ)`, `c_n(λ)` or
/// `d_n(λ)`. Requires `λ` non-increasing; kinds other than `A` require
/// `k_n ≥ 0`.
pub fn family_polynomial(kind: FamilyKind, n: usize, lambda: &[i64]) -> Result<MultiPoly> {
    if lambda.len() != n {
        return Err(Error::RankMismatch {
            expected: n,
            found: lambda.len(),
        });
    }
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotSorted);
    }
    if !matches!(kind, FamilyKind::A) && lambda.last().is_some_and(|&k| k < 0) {
        return Err(Error::NegativeCoordinate);
    }
    match kind {
        FamilyKind::A => weyl_sum_polynomial(RootKind::A, n, lambda),
        FamilyKind::B => weyl_sum_polynomial(RootKind::B, n, lambda),
        FamilyKind::C => weyl_sum_polynomial(RootKind::C, n, lambda),
        FamilyKind::D => weyl_sum_polynomial(RootKind::D, n, lambda),
        FamilyKind::BPrime => {
            let b = weyl_sum_polynomial(RootKind::B, n, lambda)?;
            let total: i64 = lambda.iter().sum();
            let sig = b.sigma();
            if total.rem_euclid(2) == 1 {
                Ok(-&sig)
            } else {
                Ok(sig)
            }
        }
    }
}

/// The underlying signed-sum route, defined for every integer weight: the
/// averaged character of the root system at `λ`, encoded as a polynomial.
/// `verify_factorization` uses this directly for the `d`-factor, whose
/// weight may carry a negative final coordinate.
pub(crate) fn weyl_sum_polynomial(
    root_kind: RootKind,
    n: usize,
    lambda: &[i64],
) -> Result<MultiPoly> {
    let phi = RootSystem::new(root_kind, n);
    let w = WeylGroup::hyperoctahedral(n);
    let f = f_phi_lambda_w(&phi, &Weight::from_ints(lambda), &w)?;
    encode_invariant(&f)
}

/// Result of checking one determinant identity.
#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub kind: MatrixKind,
    pub n: usize,
    pub lambda: Vec<i64>,
    pub pass: bool,
    pub lhs: MultiPoly,
    pub rhs: MultiPoly,
    /// `lhs - rhs`; zero exactly when the identity holds.
    pub diff: MultiPoly,
}

impl IdentityCheck {
    /// How the left side was produced.
    pub fn lhs_route(&self) -> &'static str {
        match self.kind {
            MatrixKind::D => "half matrix determinant",
            _ => "matrix determinant",
        }
    }

    /// How the right side was produced.
    pub fn rhs_route(&self) -> &'static str {
        "weyl group signed sum, encoded"
    }
}

fn check_identity(kind: MatrixKind, n: usize, lambda: &[i64]) -> Result<IdentityCheck> {
    let det = symbolic_det(&build_matrix(kind, n, lambda)?)?;
    let lhs = match kind {
        MatrixKind::D => det.scaled(&QSqrt2::from_rational(Rational::new(1, 2))),
        _ => det,
    };
    let family = match kind {
        MatrixKind::A => FamilyKind::A,
        MatrixKind::B => FamilyKind::B,
        MatrixKind::BPrime => FamilyKind::BPrime,
        MatrixKind::C => FamilyKind::C,
        MatrixKind::D | MatrixKind::DPrime => FamilyKind::D,
    };
    let rhs = family_polynomial(family, n, lambda)?;
    let diff = &lhs - &rhs;
    Ok(IdentityCheck {
        kind,
        n,
        lambda: lambda.to_vec(),
        pass: diff.is_zero(),
        lhs,
        rhs,
        diff,
    })
}

/// Check every determinant identity admissible at `λ`: all six when
/// `k_n ≥ 0`, only the `A` identity otherwise. Failures are reported as
/// data, not errors.
pub fn verify_determinant_identities(n: usize, lambda: &[i64]) -> Result<Vec<IdentityCheck>> {
    if lambda.len() != n {
        return Err(Error::RankMismatch {
            expected: n,
            found: lambda.len(),
        });
    }
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotSorted);
    }
    let nonneg = lambda.last().is_none_or(|&k| k >= 0);
    let kinds: &[MatrixKind] = if nonneg {
        &MatrixKind::ALL
    } else {
        &[MatrixKind::A]
    };
    kinds
        .iter()
        .map(|&kind| check_identity(kind, n, lambda))
        .collect()
}

/// Result of checking one factorization identity.
#[derive(Debug, Clone)]
pub struct FactorizationCheck {
    pub m: usize,
    /// Length of the full weight: `2m` (even case) or `2m+1` (odd case).
    pub n: usize,
    pub lambda: Vec<i64>,
    pub lambda1: Vec<i64>,
    pub lambda2: Vec<i64>,
    /// The unconstrained middle coordinate, odd case only.
    pub middle: Option<i64>,
    pub pass: bool,
    pub lhs: MultiPoly,
    pub rhs: MultiPoly,
    pub diff: MultiPoly,
}

impl FactorizationCheck {
    pub fn lhs_route(&self) -> &'static str {
        "weyl group signed sum for the full weight"
    }

    pub fn rhs_route(&self) -> &'static str {
        if self.n.is_multiple_of(2) {
            "product of b and b' factor polynomials"
        } else {
            "product of c and d factor polynomials"
        }
    }
}

/// Check the factorization identity for a weight of length `2m` or `2m+1`
/// satisfying `k_i + k_{n+1-i} = 0` for `1 ≤ i ≤ m`. The middle coordinate
/// of an odd-length weight is unconstrained (beyond monotonicity) and is
/// swept by callers over both zero and nonzero values.
pub fn verify_factorization(m: usize, lambda: &[i64]) -> Result<FactorizationCheck> {
    if m == 0 {
        return Err(Error::NotPositive);
    }
    let n = lambda.len();
    if n != 2 * m && n != 2 * m + 1 {
        return Err(Error::ConstraintViolated);
    }
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotSorted);
    }
    for i in 0..m {
        if lambda[i] + lambda[n - 1 - i] != 0 {
            return Err(Error::ConstraintViolated);
        }
    }
    let lambda1 = lambda[..m].to_vec();
    let lhs = family_polynomial(FamilyKind::A, n, lambda)?;
    let (lambda2, middle, rhs) = if n == 2 * m {
        let b = family_polynomial(FamilyKind::B, m, &lambda1)?;
        let bp = family_polynomial(FamilyKind::BPrime, m, &lambda1)?;
        (lambda1.clone(), None, &b * &bp)
    } else {
        let lambda2 = lambda[..=m].to_vec();
        let c = family_polynomial(FamilyKind::C, m, &lambda1)?;
        let d = weyl_sum_polynomial(RootKind::D, m + 1, &lambda2)?;
        (lambda2, Some(lambda[m]), &c * &d)
    };
    let diff = &lhs - &rhs;
    Ok(FactorizationCheck {
        m,
        n,
        lambda: lambda.to_vec(),
        lambda1,
        lambda2,
        middle,
        pass: diff.is_zero(),
        lhs,
        rhs,
        diff,
    })
}

/// All non-increasing integer tuples of length `n` with entries in
/// `lo ..= hi`, in lexicographic order.
pub fn sorted_weights(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    fn rec(out: &mut Vec<Vec<i64>>, prefix: &mut Vec<i64>, remaining: usize, lo: i64, hi: i64) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for v in (lo..=hi).rev() {
            prefix.push(v);
            rec(out, prefix, remaining - 1, lo, v);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if lo <= hi {
        rec(&mut out, &mut Vec::new(), n, lo, hi);
    }
    out
}

/// All constrained weights for the factorization identity at a given `m`
/// and coordinate bound: the free head `k_1 ≥ ... ≥ k_m ≥ 0` determines the
/// tail, and the odd case sweeps every admissible middle coordinate.
pub fn factorization_weights(m: usize, bound: i64) -> Vec<(usize, Vec<i64>)> {
    let mut out = Vec::new();
    for head in sorted_weights(m, 0, bound) {
        let tail: Vec<i64> = head.iter().rev().map(|k| -k).collect();
        // even case: (head, reversed negated head)
        let mut even = head.clone();
        even.extend_from_slice(&tail);
        out.push((m, even));
        // odd case: every middle coordinate compatible with monotonicity
        let cap = *head.last().expect("m ≥ 1");
        for h in (-cap..=cap).rev() {
            let mut odd = head.clone();
            odd.push(h);
            odd.extend_from_slice(&tail);
            out.push((m, odd));
        }
    }
    out
}
