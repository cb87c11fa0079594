//! Casimir eigenvalues, Peter–Weyl spectra of induced hermitian bundles,
//! product-metric scaling, and exact spectrum comparison.

mod casimir;
mod spectrum;

pub use casimir::{casimir_eigenvalue, enumerate_irreps, CasimirForm};
pub use spectrum::{
    bundle_spectrum, compare_spectra, scaled_product_spectrum, BundleSpec, MetricScaling, Spectrum,
    SpectrumComparison,
};
