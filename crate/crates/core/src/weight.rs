//! Weights of a rank-`n` torus, i.e. vectors in `Z^n` or `(Z + 1/2)^n`.
//!
//! Coordinates are stored *doubled* so that half-integral values (the
//! half-sums of positive roots of type `A`) stay in exact integer
//! arithmetic. A single weight is either integral (all doubled coordinates
//! even) or strictly half-integral (all odd); mixed parity never occurs in
//! the constructions of this crate and is rejected on construction.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A lattice weight with doubled integer coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    doubled: Vec<i64>,
}

impl Weight {
    /// The zero weight of the given rank.
    pub fn zero(rank: usize) -> Self {
        Weight {
            doubled: alloc::vec![0; rank],
        }
    }

    /// Build from integer coordinates.
    pub fn from_ints(coords: &[i64]) -> Self {
        Weight {
            doubled: coords.iter().map(|&c| 2 * c).collect(),
        }
    }

    /// Build from doubled coordinates.
    pub fn from_doubled(doubled: Vec<i64>) -> Self {
        Weight { doubled }
    }

    /// Whether all coordinates are integral or all strictly half-integral.
    /// Holds for every weight of the named constructions (orbit sums,
    /// signed sums, multiplicity tables, half-sums of roots); mixed parity
    /// appears only inside products against half-root factors.
    pub fn has_uniform_parity(&self) -> bool {
        match self.doubled.first() {
            None => true,
            Some(first) => {
                let parity = first.rem_euclid(2);
                self.doubled.iter().all(|c| c.rem_euclid(2) == parity)
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.doubled.len()
    }

    pub fn doubled(&self) -> &[i64] {
        &self.doubled
    }

    pub fn is_zero(&self) -> bool {
        self.doubled.iter().all(|&c| c == 0)
    }

    /// True if every coordinate is an integer (doubled coordinates even).
    pub fn is_integral(&self) -> bool {
        self.doubled.iter().all(|c| c % 2 == 0)
    }

    /// Integer coordinates, if the weight is integral.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        if self.is_integral() {
            Some(self.doubled.iter().map(|c| c / 2).collect())
        } else {
            None
        }
    }

    /// Trace-form inner product `sum_i a_i b_i`, exact.
    pub fn dot(&self, other: &Weight) -> Rational {
        debug_assert_eq!(self.rank(), other.rank());
        Rational::from_int(self.dot_quarters(other)) * Rational::new(1, 4)
    }

    /// `4 * dot`, as an integer: the inner product of the doubled vectors.
    pub fn dot_quarters(&self, other: &Weight) -> i64 {
        self.doubled
            .iter()
            .zip(&other.doubled)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Concatenate coordinates with another weight.
    pub fn concat(&self, other: &Weight) -> Weight {
        let mut doubled = self.doubled.clone();
        doubled.extend_from_slice(&other.doubled);
        Weight::from_doubled(doubled)
    }

    pub fn checked_add(&self, other: &Weight) -> Result<Weight> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: other.rank(),
            });
        }
        Ok(self + other)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight {
            doubled: self
                .doubled
                .iter()
                .zip(&rhs.doubled)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight {
            doubled: self
                .doubled
                .iter()
                .zip(&rhs.doubled)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight {
            doubled: self.doubled.iter().map(|c| -c).collect(),
        }
    }
}

fn coord_string(doubled: i64) -> String {
    use alloc::format;
    if doubled % 2 == 0 {
        format!("{}", doubled / 2)
    } else {
        format!("{doubled}/2")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.doubled.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", coord_string(*c))?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
