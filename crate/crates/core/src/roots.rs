//! Classical sub-root systems of `BC_n` realized inside `Z^n`.
//!
//! The positive system is fixed once and for all: a root is positive when
//! its first nonzero coordinate is positive. For the classical realizations
//! below this agrees with the usual choice.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::weight::Weight;
use crate::weyl::{WeylGroup, WeylKind};

/// The type of a classical root system in `Z^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootKind {
    Empty,
    /// `A_{n-1}`: the roots `e_i - e_j`.
    A,
    /// `B_n`: `±e_i` and `±e_i ± e_j`.
    B,
    /// `C_n`: `±2e_i` and `±e_i ± e_j`.
    C,
    /// `D_n`: `±e_i ± e_j`.
    D,
    /// `BC_n = B_n ∪ C_n`, the full non-reduced system.
    BC,
}

/// A root system realized explicitly in `Z^n`, with its fixed positive
/// system and Weyl group.
#[derive(Clone)]
pub struct RootSystem {
    kind: RootKind,
    rank: usize,
    positive: Vec<Weight>,
}

impl RootSystem {
    pub fn new(kind: RootKind, rank: usize) -> Self {
        let mut positive = Vec::new();
        let mut push = |coords: Vec<i64>| positive.push(Weight::from_ints(&coords));
        let e = |i: usize, c: i64, rank: usize| -> Vec<i64> {
            let mut v = alloc::vec![0i64; rank];
            v[i] = c;
            v
        };
        let pair = |i: usize, j: usize, cj: i64, rank: usize| -> Vec<i64> {
            let mut v = alloc::vec![0i64; rank];
            v[i] = 1;
            v[j] = cj;
            v
        };
        match kind {
            RootKind::Empty => {}
            RootKind::A => {
                for i in 0..rank {
                    for j in i + 1..rank {
                        push(pair(i, j, -1, rank));
                    }
                }
            }
            RootKind::B | RootKind::C | RootKind::D | RootKind::BC => {
                if matches!(kind, RootKind::B | RootKind::BC) {
                    for i in 0..rank {
                        push(e(i, 1, rank));
                    }
                }
                if matches!(kind, RootKind::C | RootKind::BC) {
                    for i in 0..rank {
                        push(e(i, 2, rank));
                    }
                }
                for i in 0..rank {
                    for j in i + 1..rank {
                        push(pair(i, j, -1, rank));
                        push(pair(i, j, 1, rank));
                    }
                }
            }
        }
        RootSystem {
            kind,
            rank,
            positive,
        }
    }

    pub fn empty(rank: usize) -> Self {
        RootSystem::new(RootKind::Empty, rank)
    }

    pub fn kind(&self) -> RootKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive
    }

    /// All roots: the positive ones and their negatives.
    pub fn roots(&self) -> Vec<Weight> {
        let mut all = self.positive.clone();
        all.extend(self.positive.iter().map(|a| -a));
        all
    }

    /// The Weyl group generated by the root reflections.
    pub fn weyl_group(&self) -> WeylGroup {
        let kind = match self.kind {
            RootKind::Empty => WeylKind::Trivial,
            RootKind::A => WeylKind::Symmetric,
            RootKind::D => WeylKind::EvenSigned,
            RootKind::B | RootKind::C | RootKind::BC => WeylKind::Hyperoctahedral,
        };
        WeylGroup::new(kind, self.rank)
    }

    /// Half the sum of the positive roots, exact.
    pub fn delta(&self) -> Weight {
        let mut doubled = alloc::vec![0i64; self.rank];
        for alpha in &self.positive {
            for (acc, c) in doubled.iter_mut().zip(alpha.doubled()) {
                // each root is integral, so its doubled coordinates are even
                *acc += c / 2;
            }
        }
        Weight::from_doubled(doubled)
    }

    /// Dominance with respect to the fixed positive system:
    /// `(w, α) ≥ 0` for every positive root `α`.
    pub fn is_dominant(&self, w: &Weight) -> bool {
        self.positive.iter().all(|a| w.dot_quarters(a) >= 0)
    }

    /// `2(λ,α)/(α,α)`, which strong integrality guarantees to be an integer
    /// for lattice weights.
    pub fn pairing(&self, lambda: &Weight, alpha: &Weight) -> Result<i64> {
        let num = 2 * lambda.dot_quarters(alpha);
        let den = alpha.dot_quarters(alpha);
        if num % den != 0 {
            return Err(Error::NotIntegral);
        }
        Ok(num / den)
    }
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RootKind::Empty => write!(f, "Empty_{}", self.rank),
            RootKind::A => write!(f, "A_{} in Z^{}", self.rank.saturating_sub(1), self.rank),
            RootKind::B => write!(f, "B_{}", self.rank),
            RootKind::C => write!(f, "C_{}", self.rank),
            RootKind::D => write!(f, "D_{}", self.rank),
            RootKind::BC => write!(f, "BC_{}", self.rank),
        }
    }
}
