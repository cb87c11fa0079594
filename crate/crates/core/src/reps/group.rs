//! Classical compact groups as products of simple-or-torus factors, with
//! their weight conventions and dominance tests.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::roots::{RootKind, RootSystem};
use crate::weight::Weight;

/// One factor of a classical compact group.
///
/// Torus coordinates: `SU(N)` and `U(N)` use `N` coordinates (with `SU(N)`
/// weights defined modulo `(1,...,1)` and normalized so the last coordinate
/// is zero); `Sp(n)` uses the maximal torus `diag(u_1,...,u_n,ū_n,...,ū_1)`
/// of `U(2n)`, giving `n` coordinates; `SO(2n)` uses `n` complexified
/// rotation-block coordinates. Only integral weights are admitted (no spin
/// weights: these are the special orthogonal groups, not their covers).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Factor {
    /// `SU(N)`.
    SpecialUnitary(usize),
    /// `U(N)`.
    Unitary(usize),
    /// `Sp(n)`, the compact symplectic group of rank `n`.
    Symplectic(usize),
    /// `SO(2n)`, stored by its rank `n`.
    OrthogonalEven(usize),
}

impl Factor {
    pub fn rank(&self) -> usize {
        match *self {
            Factor::SpecialUnitary(n) | Factor::Unitary(n) => n,
            Factor::Symplectic(n) | Factor::OrthogonalEven(n) => n,
        }
    }

    pub fn root_system(&self) -> RootSystem {
        match *self {
            Factor::SpecialUnitary(n) | Factor::Unitary(n) => RootSystem::new(RootKind::A, n),
            Factor::Symplectic(n) => RootSystem::new(RootKind::C, n),
            Factor::OrthogonalEven(n) => RootSystem::new(RootKind::D, n),
        }
    }

    /// Coordinate dominance test matching the factor's weight conventions.
    pub fn is_dominant(&self, coords: &[i64]) -> bool {
        if coords.len() != self.rank() {
            return false;
        }
        match *self {
            Factor::SpecialUnitary(_) | Factor::Unitary(_) => {
                coords.windows(2).all(|w| w[0] >= w[1])
            }
            Factor::Symplectic(_) => {
                coords.windows(2).all(|w| w[0] >= w[1]) && coords.last().is_none_or(|&k| k >= 0)
            }
            Factor::OrthogonalEven(n) => {
                coords[..n.saturating_sub(1)]
                    .windows(2)
                    .all(|w| w[0] >= w[1])
                    && (n < 2 || coords[n - 2] >= coords[n - 1].abs())
            }
        }
    }

    /// Canonical coordinates: `SU(N)` weights are shifted so the last
    /// coordinate is zero; other factors are untouched.
    pub fn normalize(&self, coords: &[i64]) -> Vec<i64> {
        match *self {
            Factor::SpecialUnitary(_) => {
                let last = coords.last().copied().unwrap_or(0);
                coords.iter().map(|&k| k - last).collect()
            }
            _ => coords.to_vec(),
        }
    }

    /// True for the simple factors whose Casimir spectrum enters a
    /// product-metric computation: `SU(N≥2)`, `Sp(n≥1)`, `SO(2n≥4)`.
    pub fn is_semisimple(&self) -> bool {
        match *self {
            Factor::SpecialUnitary(n) => n >= 2,
            Factor::Unitary(_) => false,
            Factor::Symplectic(n) => n >= 1,
            Factor::OrthogonalEven(n) => n >= 2,
        }
    }

    pub fn name(&self) -> String {
        use alloc::format;
        match *self {
            Factor::SpecialUnitary(n) => format!("SU({n})"),
            Factor::Unitary(n) => format!("U({n})"),
            Factor::Symplectic(n) => format!("Sp({n})"),
            Factor::OrthogonalEven(n) => format!("SO({})", 2 * n),
        }
    }
}

/// A product of classical factors; the trivial group is the empty product.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Group {
    factors: Vec<Factor>,
}

impl Group {
    pub fn new(factors: Vec<Factor>) -> Self {
        Group { factors }
    }

    pub fn trivial() -> Self {
        Group {
            factors: Vec::new(),
        }
    }

    pub fn special_unitary(n: usize) -> Self {
        Group::new(alloc::vec![Factor::SpecialUnitary(n)])
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(Factor::rank).sum()
    }

    pub fn is_semisimple(&self) -> bool {
        self.factors.iter().all(Factor::is_semisimple)
    }

    pub fn name(&self) -> String {
        if self.factors.is_empty() {
            return String::from("1");
        }
        let parts: Vec<String> = self.factors.iter().map(Factor::name).collect();
        parts.join("×")
    }

    /// Byte offset of each factor's coordinates in the concatenated weight.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.factors.len());
        let mut acc = 0;
        for f in &self.factors {
            out.push(acc);
            acc += f.rank();
        }
        out
    }

    /// Split a flat coordinate vector by factors.
    pub fn split<'a>(&self, flat: &'a [i64]) -> Vec<&'a [i64]> {
        let mut out = Vec::with_capacity(self.factors.len());
        let mut acc = 0;
        for f in &self.factors {
            out.push(&flat[acc..acc + f.rank()]);
            acc += f.rank();
        }
        out
    }

    /// The concatenated half-sums of positive roots of all factors.
    pub fn delta(&self) -> Weight {
        let mut w = Weight::zero(0);
        for f in &self.factors {
            w = w.concat(&f.root_system().delta());
        }
        w
    }

    /// Validated dominant highest weight with per-factor coordinates.
    pub fn highest_weight(&self, parts: &[&[i64]]) -> Result<HighestWeight> {
        if parts.len() != self.factors.len() {
            return Err(Error::GroupMismatch);
        }
        let mut normalized = Vec::with_capacity(parts.len());
        for (f, part) in self.factors.iter().zip(parts) {
            if part.len() != f.rank() {
                return Err(Error::RankMismatch {
                    expected: f.rank(),
                    found: part.len(),
                });
            }
            let p = f.normalize(part);
            if !f.is_dominant(&p) {
                return Err(Error::NotDominant);
            }
            normalized.push(p);
        }
        Ok(HighestWeight { parts: normalized })
    }

    /// The highest weight of the trivial representation.
    pub fn trivial_weight(&self) -> HighestWeight {
        HighestWeight {
            parts: self
                .factors
                .iter()
                .map(|f| alloc::vec![0; f.rank()])
                .collect(),
        }
    }
}

/// A dominant weight, one coordinate block per factor, `SU` blocks
/// normalized to end in zero.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HighestWeight {
    parts: Vec<Vec<i64>>,
}

impl HighestWeight {
    pub fn parts(&self) -> &[Vec<i64>] {
        &self.parts
    }

    pub fn flat(&self) -> Vec<i64> {
        self.parts.iter().flatten().copied().collect()
    }

    pub fn to_weight(&self) -> Weight {
        Weight::from_ints(&self.flat())
    }

    pub fn is_trivial(&self) -> bool {
        self.parts.iter().flatten().all(|&k| k == 0)
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            for (j, c) in part.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
        }
        Ok(())
    }
}
