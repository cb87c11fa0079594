//! Command-line front end: exact verification of the determinant and
//! factorization identities, branching multiplicities through the built-in
//! subgroup pairs, and Casimir spectra of induced bundles.
//!
//! Exit codes: 0 = all checks pass, 1 = a mathematical mismatch was found,
//! 2 = usage error.

mod parse;
mod report;
mod sweep;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dimdatum_core::poly::{
    factorization_weights, sorted_weights, verify_determinant_identities, verify_factorization,
};
use dimdatum_core::rational::Rational;
use dimdatum_core::reps::{
    branch_multiplicity, conjugate_unitary_pair, identity_embedding, symplectic_orthogonal_pair,
    trivial_subgroup, Embedding, Group, HighestWeight,
};
use dimdatum_core::spectra::{
    bundle_spectrum, compare_spectra, scaled_product_spectrum, BundleSpec, CasimirForm,
    MetricScaling, SpectrumComparison,
};

#[derive(Parser)]
#[command(
    name = "dimdatum",
    version,
    about = "Exact verification of character identities, branching multiplicities, and bundle spectra for classical compact groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep the six determinant identities over all admissible weights
    /// with coordinates bounded by --bound (the A identity also sweeps
    /// negative coordinates).
    VerifyDet {
        /// Matrix size, 1 ≤ n ≤ 6.
        #[arg(long)]
        n: usize,
        /// Coordinate bound (absolute value).
        #[arg(long)]
        bound: i64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep the factorization identities over the constrained weight
    /// family, including every admissible middle coordinate.
    VerifyFactor {
        /// Half-size parameter, 1 ≤ m ≤ 2.
        #[arg(long)]
        m: usize,
        /// Coordinate bound.
        #[arg(long)]
        bound: i64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print one branching multiplicity `dim Hom_H(τ, ρ|_H)`.
    Branch {
        /// The ambient group, e.g. `su6`.
        #[arg(long)]
        group: String,
        /// `h1`, `h2`, `trivial`, or `full`.
        #[arg(long)]
        subgroup: String,
        /// Highest weight of the ambient irreducible (`std`, `trivial`, or
        /// comma-separated integers).
        #[arg(long)]
        rho: String,
        /// Highest weight of the subgroup irreducible (blocks separated by
        /// `;`).
        #[arg(long)]
        tau: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the paired bundles over SU(4n+2) for one family weight and
    /// compare their spectra.
    CompareBundles {
        /// Family parameter: the ambient group is SU(4n+2).
        #[arg(long)]
        n: usize,
        /// The weight (k_1,...,k_{2n+1}) with k_i + k_{2n+2-i} = 0.
        #[arg(long)]
        lambda: String,
        /// Eigenvalue cutoff, e.g. `35/6`.
        #[arg(long)]
        cutoff: String,
        /// Replace the second inducing weight by the trivial one, to
        /// demonstrate a detected spectral difference.
        #[arg(long)]
        mismatched: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the spectrum of one induced bundle.
    Spectrum {
        /// The ambient group, e.g. `su6` or `su2xsu2`.
        #[arg(long)]
        group: String,
        /// `h1`, `h2`, `trivial`; the full group when omitted.
        #[arg(long)]
        subgroup: Option<String>,
        /// Inducing highest weight of the subgroup (default trivial).
        #[arg(long, default_value = "trivial")]
        tau: String,
        /// Per-factor metric scaling, comma-separated positive rationals;
        /// requires a semisimple ambient group.
        #[arg(long)]
        scaling: Option<String>,
        /// Eigenvalue cutoff.
        #[arg(long)]
        cutoff: String,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// A mathematical mismatch: the run completed but a check failed.
struct Mismatch;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::VerifyDet {
            n,
            bound,
            format,
            out,
        } => verify_det(n, bound, format, out),
        Command::VerifyFactor {
            m,
            bound,
            format,
            out,
        } => verify_factor(m, bound, format, out),
        Command::Branch {
            group,
            subgroup,
            rho,
            tau,
            format,
            out,
        } => branch(&group, &subgroup, &rho, &tau, format, out),
        Command::CompareBundles {
            n,
            lambda,
            cutoff,
            mismatched,
            format,
            out,
        } => compare_bundles(n, &lambda, &cutoff, mismatched, format, out),
        Command::Spectrum {
            group,
            subgroup,
            tau,
            scaling,
            cutoff,
            format,
            out,
        } => spectrum(
            &group,
            subgroup.as_deref(),
            &tau,
            scaling.as_deref(),
            &cutoff,
            format,
            out,
        ),
    };
    match outcome {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(Mismatch)) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

type Outcome = Result<Result<(), Mismatch>, String>;

fn emit(text: String, out: Option<PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => {
            fs::write(&path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn verify_det(n: usize, bound: i64, format: Format, out: Option<PathBuf>) -> Outcome {
    if n == 0 || n > 6 {
        return Err(format!("--n must be between 1 and 6, got {n}"));
    }
    if bound < 0 {
        return Err(format!("--bound must be non-negative, got {bound}"));
    }
    let lambdas = sorted_weights(n, -bound, bound);
    let checks: Vec<_> = sweep::par_map(lambdas, |lam| {
        verify_determinant_identities(n, lam).expect("sorted sweep weights")
    })
    .into_iter()
    .flatten()
    .collect();
    let pass = checks.iter().all(|c| c.pass);
    let config = json!({ "n": n, "bound": bound, "format": format_name(format) });
    let text = match format {
        Format::Json => {
            let results: Vec<Value> = checks.iter().map(report::identity_json).collect();
            report::to_bytes(&report::wrap(
                "verify-det",
                config,
                pass,
                json!({ "results": results }),
            ))
        }
        Format::Text => {
            let mut lines = vec![format!(
                "dimdatum {} verify-det n={n} bound={bound}",
                report::VERSION
            )];
            lines.extend(checks.iter().map(report::identity_text));
            lines.push(format!("overall: {}", if pass { "PASS" } else { "FAIL" }));
            lines.join("\n") + "\n"
        }
        Format::Csv => {
            let mut lines = vec![String::from("kind,n,lambda,pass")];
            lines.extend(checks.iter().map(report::identity_csv));
            lines.join("\n") + "\n"
        }
    };
    emit(text, out)?;
    Ok(if pass { Ok(()) } else { Err(Mismatch) })
}

fn verify_factor(m: usize, bound: i64, format: Format, out: Option<PathBuf>) -> Outcome {
    if m == 0 || m > 2 {
        return Err(format!("--m must be 1 or 2, got {m}"));
    }
    if bound < 0 {
        return Err(format!("--bound must be non-negative, got {bound}"));
    }
    let weights = factorization_weights(m, bound);
    let checks: Vec<_> = sweep::par_map(weights, |(m, lam)| {
        verify_factorization(*m, lam).expect("constrained sweep weights")
    });
    let pass = checks.iter().all(|c| c.pass);
    let config = json!({ "m": m, "bound": bound, "format": format_name(format) });
    let text = match format {
        Format::Json => {
            let results: Vec<Value> = checks.iter().map(report::factorization_json).collect();
            let nonzero: Vec<&_> = checks
                .iter()
                .filter(|c| c.middle.is_some_and(|h| h != 0))
                .collect();
            let middle = json!({
                "nonzero_middle_checked": nonzero.len(),
                "nonzero_middle_passed": nonzero.iter().filter(|c| c.pass).count(),
            });
            report::to_bytes(&report::wrap(
                "verify-factor",
                config,
                pass,
                json!({ "results": results, "middle_coordinate": middle }),
            ))
        }
        Format::Text => {
            let mut lines = vec![format!(
                "dimdatum {} verify-factor m={m} bound={bound}",
                report::VERSION
            )];
            lines.extend(checks.iter().map(report::factorization_text));
            lines.push(format!("overall: {}", if pass { "PASS" } else { "FAIL" }));
            lines.join("\n") + "\n"
        }
        Format::Csv => {
            let mut lines = vec![String::from("case,m,lambda,pass")];
            lines.extend(checks.iter().map(report::factorization_csv));
            lines.join("\n") + "\n"
        }
    };
    emit(text, out)?;
    Ok(if pass { Ok(()) } else { Err(Mismatch) })
}

/// Resolve a subgroup name against the ambient group.
fn resolve_subgroup(name: &str, ambient: &Group) -> Result<Embedding, String> {
    match name {
        "trivial" | "1" => Ok(trivial_subgroup(ambient)),
        "full" | "g" => Ok(identity_embedding(ambient)),
        "h1" | "h2" => {
            let [dimdatum_core::reps::Factor::SpecialUnitary(size)] = ambient.factors() else {
                return Err(format!("subgroup {name} requires an ambient SU(4n+2)"));
            };
            if size % 4 != 2 || *size < 6 {
                return Err(format!(
                    "subgroup {name} requires SU(4n+2) with n ≥ 1, got SU({size})"
                ));
            }
            let n = (size - 2) / 4;
            let e = if name == "h1" {
                conjugate_unitary_pair(n)
            } else {
                symplectic_orthogonal_pair(n)
            };
            e.map_err(|err| format!("cannot build {name}: {err}"))
        }
        other => Err(format!(
            "unknown subgroup {other:?} (expected h1, h2, trivial, full)"
        )),
    }
}

/// Parse a highest weight for `group`, allowing `trivial` and `std`.
fn resolve_weight(spec: &str, group: &Group) -> Result<HighestWeight, String> {
    match spec.trim() {
        "trivial" | "0" => Ok(group.trivial_weight()),
        "std" => {
            let blocks: Vec<Vec<i64>> = group
                .factors()
                .iter()
                .enumerate()
                .map(|(i, f)| {
                    let mut v = vec![0i64; f.rank()];
                    if i == 0 && !v.is_empty() {
                        v[0] = 1;
                    }
                    v
                })
                .collect();
            let parts: Vec<&[i64]> = blocks.iter().map(|b| b.as_slice()).collect();
            group
                .highest_weight(&parts)
                .map_err(|e| format!("std weight invalid for {}: {e}", group.name()))
        }
        s => {
            let blocks = parse::weight_blocks(s)?;
            let parts: Vec<&[i64]> = blocks.iter().map(|b| b.as_slice()).collect();
            group
                .highest_weight(&parts)
                .map_err(|e| format!("weight {s:?} invalid for {}: {e}", group.name()))
        }
    }
}

fn branch(
    group: &str,
    subgroup: &str,
    rho: &str,
    tau: &str,
    format: Format,
    out: Option<PathBuf>,
) -> Outcome {
    let g = parse::group(group)?;
    let e = resolve_subgroup(subgroup, &g)?;
    let rho_hw = resolve_weight(rho, &g)?;
    let tau_hw = resolve_weight(tau, e.source())?;
    let mult = branch_multiplicity(&e, &rho_hw, &tau_hw)
        .map_err(|err| format!("branching failed: {err}"))?;
    let config = json!({
        "group": group, "subgroup": subgroup, "rho": rho, "tau": tau,
        "format": format_name(format),
    });
    let text = match format {
        Format::Json => report::to_bytes(&report::wrap(
            "branch",
            config,
            true,
            json!({
                "group": g.name(),
                "subgroup": e.source().name(),
                "rho": rho_hw.parts(),
                "tau": tau_hw.parts(),
                "multiplicity": mult,
            }),
        )),
        Format::Text | Format::Csv => format!("{mult}\n"),
    };
    emit(text, out)?;
    Ok(Ok(()))
}

fn compare_bundles(
    n: usize,
    lambda: &str,
    cutoff: &str,
    mismatched: bool,
    format: Format,
    out: Option<PathBuf>,
) -> Outcome {
    if n == 0 {
        return Err(String::from("--n must be at least 1"));
    }
    let lam = parse::int_list(lambda)?;
    if lam.len() != 2 * n + 1 {
        return Err(format!(
            "--lambda must have length {} for n={n}, got {}",
            2 * n + 1,
            lam.len()
        ));
    }
    if lam.windows(2).any(|w| w[0] < w[1]) {
        return Err(String::from("--lambda must be non-increasing"));
    }
    for i in 0..n {
        if lam[i] + lam[2 * n - i] != 0 {
            return Err(String::from(
                "--lambda must satisfy k_i + k_{2n+2-i} = 0 for i ≤ n",
            ));
        }
    }
    let cut = parse::rational(cutoff)?;
    if cut.is_negative() {
        return Err(String::from("--cutoff must be non-negative"));
    }
    let e1 = conjugate_unitary_pair(n).map_err(|e| e.to_string())?;
    let e2 = symplectic_orthogonal_pair(n).map_err(|e| e.to_string())?;
    let tau1 = e1
        .source()
        .highest_weight(&[&lam[..]])
        .map_err(|e| format!("lambda not dominant: {e}"))?;
    let tau2 = if mismatched {
        e2.source().trivial_weight()
    } else {
        e2.source()
            .highest_weight(&[&lam[..n], &lam[..n + 1]])
            .map_err(|e| format!("paired weight not dominant: {e}"))?
    };
    let form = CasimirForm::trace();
    let b1 = BundleSpec::new(e1, tau1.clone()).map_err(|e| e.to_string())?;
    let b2 = BundleSpec::new(e2, tau2.clone()).map_err(|e| e.to_string())?;
    let s1 = bundle_spectrum(&b1, &form, &cut).map_err(|e| e.to_string())?;
    let s2 = bundle_spectrum(&b2, &form, &cut).map_err(|e| e.to_string())?;
    let comparison = compare_spectra(&s1, &s2).map_err(|e| e.to_string())?;
    let equal = comparison == SpectrumComparison::Equal;
    let config = json!({
        "n": n, "lambda": lam, "cutoff": cut.ratio_string(),
        "mismatched": mismatched, "format": format_name(format),
    });
    let text = match format {
        Format::Json => report::to_bytes(&report::wrap(
            "compare-bundles",
            config,
            equal,
            json!({
                "bundle1": { "subgroup": b1.embedding.source().name(), "tau": tau1.parts(),
                              "spectrum": report::spectrum_json(&s1) },
                "bundle2": { "subgroup": b2.embedding.source().name(), "tau": tau2.parts(),
                              "spectrum": report::spectrum_json(&s2) },
                "comparison": report::comparison_json(&comparison),
            }),
        )),
        Format::Text => {
            let mut lines = vec![format!(
                "dimdatum {} compare-bundles n={n} lambda=({}) cutoff={}",
                report::VERSION,
                lam.iter()
                    .map(|k| k.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                cut
            )];
            lines.push(format!(
                "bundle 1: {} tau={}",
                b1.embedding.source().name(),
                tau1
            ));
            lines.extend(s1.csv().lines().map(|l| format!("  {l}")));
            lines.push(format!(
                "bundle 2: {} tau={}",
                b2.embedding.source().name(),
                tau2
            ));
            lines.extend(s2.csv().lines().map(|l| format!("  {l}")));
            lines.push(match &comparison {
                SpectrumComparison::Equal => String::from("spectra: equal"),
                SpectrumComparison::FirstDifference {
                    eigenvalue,
                    mult1,
                    mult2,
                } => format!("spectra differ first at {eigenvalue}: {mult1} vs {mult2}"),
            });
            lines.join("\n") + "\n"
        }
        Format::Csv => {
            // side-by-side multiplicities per eigenvalue
            let mut lines = vec![String::from("eigenvalue_num,eigenvalue_den,mult1,mult2")];
            let mut values: Vec<Rational> = s1
                .lines()
                .iter()
                .chain(s2.lines())
                .map(|(v, _)| v.clone())
                .collect();
            values.sort();
            values.dedup();
            for v in values {
                let find = |s: &dimdatum_core::spectra::Spectrum| {
                    s.lines()
                        .iter()
                        .find(|(x, _)| x == &v)
                        .map(|(_, m)| *m)
                        .unwrap_or(0)
                };
                lines.push(format!(
                    "{},{},{},{}",
                    v.numer(),
                    v.denom(),
                    find(&s1),
                    find(&s2)
                ));
            }
            lines.join("\n") + "\n"
        }
    };
    emit(text, out)?;
    Ok(if equal { Ok(()) } else { Err(Mismatch) })
}

fn spectrum(
    group: &str,
    subgroup: Option<&str>,
    tau: &str,
    scaling: Option<&str>,
    cutoff: &str,
    format: Format,
    out: Option<PathBuf>,
) -> Outcome {
    let g = parse::group(group)?;
    let e = match subgroup {
        None => identity_embedding(&g),
        Some(name) => resolve_subgroup(name, &g)?,
    };
    let tau_hw = resolve_weight(tau, e.source())?;
    let cut = parse::rational(cutoff)?;
    if cut.is_negative() {
        return Err(String::from("--cutoff must be non-negative"));
    }
    let spec = BundleSpec::new(e, tau_hw.clone()).map_err(|e| e.to_string())?;
    let form = CasimirForm::trace();
    let s = match scaling {
        None => bundle_spectrum(&spec, &form, &cut).map_err(|e| e.to_string())?,
        Some(list) => {
            let factors = parse::rational_list(list)?;
            if factors.len() != g.factors().len() {
                return Err(format!(
                    "--scaling needs {} entries for {}, got {}",
                    g.factors().len(),
                    g.name(),
                    factors.len()
                ));
            }
            let scaling = MetricScaling::new(factors)
                .map_err(|_| String::from("--scaling entries must be positive"))?;
            scaled_product_spectrum(&spec, &scaling, &form, &cut).map_err(|e| e.to_string())?
        }
    };
    let config = json!({
        "group": group, "subgroup": subgroup, "tau": tau,
        "scaling": scaling, "cutoff": cut.ratio_string(), "format": format_name(format),
    });
    let text = match format {
        Format::Csv => s.csv(),
        Format::Json => report::to_bytes(&report::wrap(
            "spectrum",
            config,
            true,
            json!({
                "group": g.name(),
                "subgroup": spec.embedding.source().name(),
                "tau": tau_hw.to_string(),
                "spectrum": report::spectrum_json(&s),
            }),
        )),
        Format::Text => {
            let mut lines = vec![format!(
                "dimdatum {} spectrum of {} bundle tau={} over {}, cutoff {}",
                report::VERSION,
                spec.embedding.source().name(),
                tau_hw,
                g.name(),
                cut
            )];
            for (v, m) in s.lines() {
                lines.push(format!("  {v} × {m}"));
            }
            lines.push(format!("total multiplicity {}", s.total_multiplicity()));
            lines.join("\n") + "\n"
        }
    };
    emit(text, out)?;
    Ok(Ok(()))
}

fn format_name(f: Format) -> &'static str {
    match f {
        Format::Json => "json",
        Format::Csv => "csv",
        Format::Text => "text",
    }
}
