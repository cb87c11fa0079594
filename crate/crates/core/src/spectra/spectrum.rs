//! Spectra of the Casimir operator on sections of induced hermitian
//! bundles, assembled from branching multiplicities, and their exact
//! multiset comparison.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use super::casimir::{casimir_eigenvalue, enumerate_scaled, CasimirForm};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::reps::{branch_multiplicity, weyl_dimension, Embedding, HighestWeight};

/// An induced bundle: the subgroup embedding fixing `G` and `H`, and the
/// inducing highest weight `τ` of `H`.
#[derive(Debug, Clone)]
pub struct BundleSpec {
    pub embedding: Embedding,
    pub tau: HighestWeight,
}

impl BundleSpec {
    pub fn new(embedding: Embedding, tau: HighestWeight) -> Result<Self> {
        if tau.parts().len() != embedding.source().factors().len() {
            return Err(Error::GroupMismatch);
        }
        Ok(BundleSpec { embedding, tau })
    }
}

/// Positive per-factor metric scaling coefficients `a_i`.
#[derive(Debug, Clone)]
pub struct MetricScaling {
    factors: Vec<Rational>,
}

impl MetricScaling {
    pub fn new(factors: Vec<Rational>) -> Result<Self> {
        if factors.iter().any(|a| a.is_zero() || a.is_negative()) {
            return Err(Error::NotPositive);
        }
        Ok(MetricScaling { factors })
    }

    pub fn uniform(len: usize, a: Rational) -> Result<Self> {
        MetricScaling::new(alloc::vec![a; len])
    }

    pub fn factors(&self) -> &[Rational] {
        &self.factors
    }
}

/// A sorted exact multiset of `(eigenvalue, multiplicity)` pairs, complete
/// below its cutoff (inclusive).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    lines: Vec<(Rational, u64)>,
    cutoff: Rational,
}

impl Spectrum {
    fn from_map(lines: BTreeMap<Rational, u64>, cutoff: Rational) -> Self {
        Spectrum {
            lines: lines.into_iter().filter(|(_, m)| *m > 0).collect(),
            cutoff,
        }
    }

    pub fn lines(&self) -> &[(Rational, u64)] {
        &self.lines
    }

    pub fn cutoff(&self) -> &Rational {
        &self.cutoff
    }

    /// Total multiplicity over all lines.
    pub fn total_multiplicity(&self) -> u64 {
        self.lines.iter().map(|(_, m)| m).sum()
    }

    /// Restriction to a smaller cutoff.
    pub fn truncated(&self, cutoff: Rational) -> Spectrum {
        Spectrum {
            lines: self
                .lines
                .iter()
                .filter(|(v, _)| v <= &cutoff)
                .cloned()
                .collect(),
            cutoff,
        }
    }

    /// Every eigenvalue multiplied by a positive rational.
    pub fn rescaled(&self, factor: &Rational) -> Spectrum {
        Spectrum {
            lines: self.lines.iter().map(|(v, m)| (v * factor, *m)).collect(),
            cutoff: &self.cutoff * factor,
        }
    }

    /// CSV rows `eigenvalue_num,eigenvalue_den,multiplicity`, ascending.
    pub fn csv(&self) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        for (v, m) in &self.lines {
            let _ = writeln!(out, "{},{},{}", v.numer(), v.denom(), m);
        }
        out
    }
}

/// Outcome of an exact multiset comparison of two spectra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpectrumComparison {
    Equal,
    /// The smallest eigenvalue at which the multiplicities differ (a
    /// missing line counts as multiplicity zero).
    FirstDifference {
        eigenvalue: Rational,
        mult1: u64,
        mult2: u64,
    },
}

/// Compare two spectra with equal cutoffs, line by line.
pub fn compare_spectra(s1: &Spectrum, s2: &Spectrum) -> Result<SpectrumComparison> {
    if s1.cutoff != s2.cutoff {
        return Err(Error::CutoffMismatch);
    }
    let mut eigenvalues: Vec<&Rational> = s1
        .lines
        .iter()
        .map(|(v, _)| v)
        .chain(s2.lines.iter().map(|(v, _)| v))
        .collect();
    eigenvalues.sort();
    eigenvalues.dedup();
    let find = |s: &Spectrum, v: &Rational| {
        s.lines
            .iter()
            .find(|(x, _)| x == v)
            .map(|(_, m)| *m)
            .unwrap_or(0)
    };
    for v in eigenvalues {
        let m1 = find(s1, v);
        let m2 = find(s2, v);
        if m1 != m2 {
            return Ok(SpectrumComparison::FirstDifference {
                eigenvalue: v.clone(),
                mult1: m1,
                mult2: m2,
            });
        }
    }
    Ok(SpectrumComparison::Equal)
}

/// The spectrum of the Casimir operator on `L²(G/H, E_τ)` below the cutoff:
/// each enumerated `ρ` with `m = dim Hom_H(τ, ρ|_H) > 0` contributes its
/// eigenvalue with multiplicity `m·dim ρ`.
pub fn bundle_spectrum(
    spec: &BundleSpec,
    form: &CasimirForm,
    cutoff: &Rational,
) -> Result<Spectrum> {
    let e = &spec.embedding;
    let mut lines: BTreeMap<Rational, u64> = BTreeMap::new();
    for rho in enumerate_scaled(e.target(), form, cutoff, None)? {
        let m = branch_multiplicity(e, &rho, &spec.tau)?;
        if m == 0 {
            continue;
        }
        let value = casimir_eigenvalue(e.target(), &rho, form)?;
        let dim = weyl_dimension(e.target(), &rho)?;
        *lines.entry(value).or_insert(0) += m * dim;
    }
    Ok(Spectrum::from_map(lines, cutoff.clone()))
}

/// The spectrum for a product group with per-factor metric scaling: the
/// eigenvalue of `ρ = ⊗ρ_i` is `Σ_i (1/a_i)·value_i(ρ_i)`. Requires every
/// factor semisimple. The trivial `τ` recovers the Laplace spectrum of the
/// normal homogeneous space.
pub fn scaled_product_spectrum(
    spec: &BundleSpec,
    scaling: &MetricScaling,
    form: &CasimirForm,
    cutoff: &Rational,
) -> Result<Spectrum> {
    let e = &spec.embedding;
    let g = e.target();
    if !g.is_semisimple() {
        return Err(Error::NotSemisimple);
    }
    if scaling.factors().len() != g.factors().len() {
        return Err(Error::GroupMismatch);
    }
    let mut lines: BTreeMap<Rational, u64> = BTreeMap::new();
    for rho in enumerate_scaled(g, form, cutoff, Some(scaling.factors()))? {
        let m = branch_multiplicity(e, &rho, &spec.tau)?;
        if m == 0 {
            continue;
        }
        let mut value = Rational::zero();
        for ((factor, part), a) in g.factors().iter().zip(rho.parts()).zip(scaling.factors()) {
            value += &(form.factor_value(factor, part) * a.recip());
        }
        let dim = weyl_dimension(g, &rho)?;
        *lines.entry(value).or_insert(0) += m * dim;
    }
    Ok(Spectrum::from_map(lines, cutoff.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::{identity_embedding, trivial_subgroup, Factor, Group};

    fn su2_squared() -> Group {
        Group::new(alloc::vec![
            Factor::SpecialUnitary(2),
            Factor::SpecialUnitary(2)
        ])
    }

    #[test]
    fn trivial_bundle_over_full_group() {
        // H = G, τ trivial: only ρ = trivial survives
        let g = Group::special_unitary(2);
        let spec = BundleSpec::new(identity_embedding(&g), g.trivial_weight()).unwrap();
        let s = bundle_spectrum(&spec, &CasimirForm::trace(), &Rational::from_int(4)).unwrap();
        assert_eq!(s.lines(), &[(Rational::zero(), 1)]);
    }

    #[test]
    fn product_over_trivial_subgroup() {
        // G = SU(2)×SU(2), H = 1, cutoff 3/2: both (std,1) and (1,std)
        // contribute eigenvalue 3/2 with multiplicity 2·2 = 4, total 8
        let g = su2_squared();
        let spec =
            BundleSpec::new(trivial_subgroup(&g), Group::trivial().trivial_weight()).unwrap();
        let form = CasimirForm::trace();
        let cutoff = Rational::new(3, 2);
        let scaling = MetricScaling::uniform(2, Rational::one()).unwrap();
        let s = scaled_product_spectrum(&spec, &scaling, &form, &cutoff).unwrap();
        assert_eq!(
            s.lines(),
            &[(Rational::zero(), 1), (Rational::new(3, 2), 8)]
        );
        // scaling (1,2) splits the line into 3/4 and 3/2
        let scaling =
            MetricScaling::new(alloc::vec![Rational::one(), Rational::from_int(2)]).unwrap();
        let s = scaled_product_spectrum(&spec, &scaling, &form, &cutoff).unwrap();
        assert_eq!(
            s.lines(),
            &[
                (Rational::zero(), 1),
                (Rational::new(3, 4), 4),
                (Rational::new(3, 2), 4)
            ]
        );
    }

    #[test]
    fn uniform_scaling_is_covariant() {
        let g = su2_squared();
        let spec =
            BundleSpec::new(trivial_subgroup(&g), Group::trivial().trivial_weight()).unwrap();
        let form = CasimirForm::trace();
        let cutoff = Rational::from_int(4);
        let a = Rational::from_int(3);
        let unscaled = bundle_spectrum(&spec, &form, &(&cutoff * &a)).unwrap();
        let scaled = scaled_product_spectrum(
            &spec,
            &MetricScaling::uniform(2, a.clone()).unwrap(),
            &form,
            &cutoff,
        )
        .unwrap();
        assert_eq!(unscaled.rescaled(&a.recip()), scaled);
    }

    #[test]
    fn comparison_reports_first_difference() {
        let g = Group::special_unitary(2);
        let spec = BundleSpec::new(identity_embedding(&g), g.trivial_weight()).unwrap();
        let form = CasimirForm::trace();
        let s1 = bundle_spectrum(&spec, &form, &Rational::from_int(4)).unwrap();
        assert_eq!(
            compare_spectra(&s1, &s1).unwrap(),
            SpectrumComparison::Equal
        );
        // different cutoffs are an error
        let s2 = bundle_spectrum(&spec, &form, &Rational::from_int(2)).unwrap();
        assert!(matches!(
            compare_spectra(&s1, &s2),
            Err(Error::CutoffMismatch)
        ));
        // trivial subgroup vs full group differ at the first nonzero line
        let t = BundleSpec::new(trivial_subgroup(&g), Group::trivial().trivial_weight()).unwrap();
        let s3 = bundle_spectrum(&t, &form, &Rational::from_int(4)).unwrap();
        match compare_spectra(&s1, &s3).unwrap() {
            SpectrumComparison::FirstDifference {
                eigenvalue,
                mult1,
                mult2,
            } => {
                assert_eq!(eigenvalue, Rational::new(3, 2));
                assert_eq!((mult1, mult2), (0, 4));
            }
            other => panic!("expected difference, got {other:?}"),
        }
    }

    #[test]
    fn non_semisimple_scaled_rejected() {
        let g = Group::new(alloc::vec![Factor::Unitary(2)]);
        let spec = BundleSpec::new(identity_embedding(&g), g.trivial_weight()).unwrap();
        let err = scaled_product_spectrum(
            &spec,
            &MetricScaling::uniform(1, Rational::one()).unwrap(),
            &CasimirForm::trace(),
            &Rational::one(),
        );
        assert!(matches!(err, Err(Error::NotSemisimple)));
    }

    #[test]
    fn csv_format() {
        let g = su2_squared();
        let spec =
            BundleSpec::new(trivial_subgroup(&g), Group::trivial().trivial_weight()).unwrap();
        let s = scaled_product_spectrum(
            &spec,
            &MetricScaling::new(alloc::vec![Rational::one(), Rational::from_int(2)]).unwrap(),
            &CasimirForm::trace(),
            &Rational::new(3, 2),
        )
        .unwrap();
        assert_eq!(s.csv(), "0,1,1\n3,4,4\n3,2,4\n");
    }
}
