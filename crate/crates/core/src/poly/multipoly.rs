//! Sparse multivariate polynomials in `x_0, x_1, x_2, ...` over `Q(√2)`.
//!
//! `x_0 = 1` is never stored: a monomial is the multiset of its indices
//! `≥ 1`, kept in non-increasing order. A polynomial produced as an `n×n`
//! determinant is homogeneous of degree `n` once the suppressed `x_0`
//! factors are counted back in, which is exactly the statement that every
//! stored monomial has at most `n` indices.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::qsqrt2::QSqrt2;
use crate::rational::Rational;

/// A multiset of variable indices `≥ 1`, non-increasing. The empty monomial
/// is the constant `1` (all `x_0`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// The variable `x_i`. Index `0` yields the empty monomial.
    pub fn var(i: u32) -> Self {
        if i == 0 {
            Monomial::one()
        } else {
            Monomial(alloc::vec![i])
        }
    }

    /// Build from arbitrary indices; zeros are dropped, order normalized.
    pub fn from_indices(indices: &[u32]) -> Self {
        let mut v: Vec<u32> = indices.iter().copied().filter(|&i| i != 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Monomial(v)
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    /// Number of stored (index ≥ 1) factors.
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Multiset union.
    pub fn product(&self, other: &Monomial) -> Monomial {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        v.sort_unstable_by(|a, b| b.cmp(a));
        Monomial(v)
    }

    /// Count of odd indices, with multiplicity.
    pub fn odd_index_count(&self) -> usize {
        self.0.iter().filter(|i| *i % 2 == 1).count()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        // degree first, then lexicographic — gives the canonical term order
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut i = 0;
        let mut first = true;
        while i < self.0.len() {
            let idx = self.0[i];
            let mut mult = 1;
            while i + mult < self.0.len() && self.0[i + mult] == idx {
                mult += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if mult == 1 {
                write!(f, "x{idx}")?;
            } else {
                write!(f, "x{idx}^{mult}")?;
            }
            i += mult;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A sparse polynomial over `Q(√2)`; no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, QSqrt2>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        MultiPoly::constant(QSqrt2::one())
    }

    pub fn constant(c: QSqrt2) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    /// The variable `x_i` (`x_0` is the constant `1`).
    pub fn var(i: u32) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(Monomial::var(i), QSqrt2::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &QSqrt2)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> QSqrt2 {
        self.terms.get(m).cloned().unwrap_or_else(QSqrt2::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: QSqrt2) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scaled(&self, c: &QSqrt2) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a * c);
        }
        out
    }

    /// Largest stored degree (0 for constants and the zero polynomial).
    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// True if every coefficient lies in `Q` (no `√2` component).
    pub fn is_rational(&self) -> bool {
        self.terms.values().all(QSqrt2::is_rational)
    }

    /// Homogeneity of degree `n` with `x_0` counted: every stored monomial
    /// uses at most `n` indices, the remaining degree being `x_0` factors.
    pub fn is_homogeneous_with_bound(&self, n: usize) -> bool {
        self.terms.keys().all(|m| m.degree() <= n)
    }

    /// The involution `σ`: negate every odd-indexed variable. A term picks
    /// up `(-1)` per odd index, counted with multiplicity.
    pub fn sigma(&self) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let c = if m.odd_index_count() % 2 == 1 {
                -c
            } else {
                c.clone()
            };
            out.add_term(m.clone(), c);
        }
        out
    }

    /// Canonical text: terms sorted by (degree, lexicographic monomial), one
    /// `coeff monomial` pair per line.
    pub fn canonical_text(&self) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        for (m, c) in &self.terms {
            let _ = writeln!(out, "{} {}", c.canonical_string(), m);
        }
        out
    }

    /// Single-line rendering of the canonical form.
    pub fn compact_string(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| alloc::format!("({})·{}", c.canonical_string(), m))
            .collect();
        parts.join(" + ")
    }
}

impl From<Rational> for MultiPoly {
    fn from(r: Rational) -> Self {
        MultiPoly::constant(QSqrt2::from_rational(r))
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.product(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.compact_string())
    }
}
